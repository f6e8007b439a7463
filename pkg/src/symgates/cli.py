"""Command-line interface: inspect bases, analyze gates, sweep parameters.

Subcommands: basis, gate, sweep, act, lmg, decompose.  All output is
deterministic (15 significant digits, '.' decimal separator, LF line
endings).  Exit codes: 0 success/verified, 1 verification failure,
2 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import math
import re
import sys
from dataclasses import dataclass

import numpy as np

from . import entanglement, gates, su3, tensors

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2

_ANGLE_RE = re.compile(
    r"^(?P<sign>[+-]?)(?P<coef>\d+(?:\.\d+)?)?\*?"
    r"(?:sqrt\(?(?P<root>\d+)\)?)?\*?(?P<pi>pi)?(?:/(?P<div>\d+(?:\.\d+)?))?$"
)


def parse_angle(text: str) -> float:
    """Parse an angle given in radians or as a multiple of pi.

    Accepts plain decimals ('0.785') and symbolic forms such as 'pi',
    'pi/2', '2pi/3', 'sqrt3*pi/2', '-pi/4'.
    """
    token = text.strip().lower().replace(" ", "")
    match = _ANGLE_RE.match(token)
    if not match or not (match.group("coef") or match.group("root") or match.group("pi")):
        raise argparse.ArgumentTypeError(f"cannot parse angle {text!r}")
    value = -1.0 if match.group("sign") == "-" else 1.0
    if match.group("coef"):
        value *= float(match.group("coef"))
    if match.group("root"):
        value *= math.sqrt(float(match.group("root")))
    if match.group("pi"):
        value *= math.pi
    if match.group("div"):
        divisor = float(match.group("div"))
        if divisor == 0:
            raise argparse.ArgumentTypeError("division by zero in angle")
        value /= divisor
    return value


def parse_spin(text: str) -> float:
    """Parse a spin value such as '1', '0.5' or '3/2'."""
    token = text.strip()
    try:
        if "/" in token:
            num, den = token.split("/", 1)
            value = float(num) / float(den)
        else:
            value = float(token)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"cannot parse spin {text!r}") from exc
    if round(2 * value) != 2 * value or value < 0:
        raise argparse.ArgumentTypeError(f"spin must be a non-negative half-integer, got {text!r}")
    return value


def fmt_float(x: float) -> str:
    out = format(float(x), ".15g")
    return "0" if out == "-0" else out


def fmt_complex(z: complex) -> str:
    z = complex(z)
    sign = "+" if z.imag >= 0 else "-"
    return f"{fmt_float(z.real)}{sign}{fmt_float(abs(z.imag))}i"


def fmt_matrix(m: np.ndarray, indent: str = "  ") -> str:
    rows = []
    for row in np.asarray(m, dtype=np.complex128):
        rows.append(indent + "[" + ", ".join(fmt_complex(z) for z in row) + "]")
    return "\n".join(rows)


def fmt_vector(v: np.ndarray) -> str:
    return "[" + ", ".join(fmt_complex(z) for z in np.asarray(v, dtype=np.complex128)) + "]"


def parse_matrix_file(path: str) -> np.ndarray:
    """Read a matrix file: JSON with fields 'dim' and 'entries' of [re, im] pairs."""
    with open(path, encoding="utf-8") as fh:
        data = json.load(fh)
    if not isinstance(data, dict) or "dim" not in data or "entries" not in data:
        raise ValueError("matrix file must contain 'dim' and 'entries' fields")
    dim = data["dim"]
    if dim not in (2, 3, 4):
        raise ValueError(f"matrix dimension must be 2, 3 or 4, got {dim}")
    entries = np.asarray(data["entries"], dtype=np.float64)
    if entries.shape != (dim, dim, 2):
        raise ValueError(f"entries must be a {dim}x{dim} array of [re, im] pairs")
    matrix = entries[..., 0] + 1j * entries[..., 1]
    if not np.all(np.isfinite(entries)):
        raise ValueError("matrix entries must be finite")
    return matrix


@dataclass(frozen=True)
class SweepRow:
    theta: float
    g1_abs: float
    ep: float
    classification: str


def _write_csv(path: str, header: str, rows: list[str]) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(header + "\n")
        for row in rows:
            fh.write(row + "\n")


def _print_gate_report(g, report) -> None:
    print(f"gate {g.label}" + (f"  theta = {fmt_float(g.theta)}" if g.theta is not None else ""))
    print("u3 =")
    print(fmt_matrix(g.u3))
    print("u4 =")
    print(fmt_matrix(g.u4))
    print(f"G1 = {fmt_complex(report.g1)}")
    print(f"|G1| = {fmt_float(report.g1_abs)}")
    print(f"e_p = {fmt_float(report.ep)}")
    print(f"class = {report.classification}")


def cmd_basis(args) -> int:
    rc = EXIT_OK
    did_something = False
    if args.show is not None:
        token = args.show.strip().upper()
        if token.startswith("M"):
            token = token[1:]
        try:
            index = int(token)
            matrix = su3.m_matrix(index)
        except ValueError as exc:
            print(f"error: {exc}", file=sys.stderr)
            return EXIT_USAGE
        print(f"M{index} =")
        print(fmt_matrix(matrix))
        did_something = True
    if args.count:
        dim = int(round(2 * args.j)) + 1
        print(dim * dim)
        did_something = True
    if args.tensor_basis:
        for op in tensors.hermitian_basis(args.j):
            print(f"T({op.component}, k={op.k}, q={op.q}) for j = {fmt_float(op.j)}:")
            print(fmt_matrix(op.matrix))
        did_something = True
    if args.verify:
        _, _, report = su3.verify_algebra_tables()
        gm = su3.verify_gellmann()
        ok_entries = report.entries_checked - len(report.mismatches)
        ok_gm = gm.relations_checked - len(gm.failures)
        print(f"{ok_entries}/{report.entries_checked} table entries verified, "
              f"{ok_gm}/{gm.relations_checked} Gell-Mann relations verified")
        if not report.passed or not gm.passed:
            for mismatch in report.mismatches:
                print(str(mismatch), file=sys.stderr)
            if not report.triplets_ok:
                print("vector triplet relations failed", file=sys.stderr)
            if not report.vanishing_ok:
                print("vanishing commutators with M8 failed", file=sys.stderr)
            for k in gm.failures:
                print(f"Gell-Mann relation for M{k} failed", file=sys.stderr)
            rc = EXIT_VERIFY
        did_something = True
    if not did_something:
        for k in range(9):
            print(f"M{k} =")
            print(fmt_matrix(su3.m_matrix(k)))
    return rc


def cmd_gate(args) -> int:
    g = gates.gate(args.k, args.theta)
    report = entanglement.entangling_power(g)
    _print_gate_report(g, report)
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.steps < 2:
        print("error: --steps must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    thetas = np.linspace(args.theta_min, args.theta_max, args.steps)
    rows = []
    for theta in thetas:
        report = entanglement.entangling_power(gates.gate(args.k, float(theta)))
        row = SweepRow(theta=float(theta), g1_abs=report.g1_abs, ep=report.ep,
                       classification=report.classification)
        rows.append(",".join([fmt_float(row.theta), fmt_float(row.g1_abs),
                              fmt_float(row.ep), row.classification]))
    try:
        _write_csv(args.out, "theta,g1_abs,ep,class", rows)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_act(args) -> int:
    g = gates.gate(args.k, args.theta)
    state = entanglement.separable_state(args.alpha, args.phi)
    out, conc = entanglement.apply_gate(g, state)
    print(f"input  alpha = {fmt_float(state.alpha)}  phi = {fmt_float(state.phi)}")
    print(f"input  vec4 = {fmt_vector(state.vec4)}")
    print(f"output vec4 = {fmt_vector(out)}")
    print(f"concurrence = {fmt_float(conc)}")
    return EXIT_OK


def cmd_lmg(args) -> int:
    if args.t is None and args.t_max is None:
        print("error: provide --t for a single report or --t-max/--steps for a series",
              file=sys.stderr)
        return EXIT_USAGE
    if args.t is not None:
        params = gates.LMGParams(g1=args.g1, g2=args.g2, t=args.t)
        g = gates.lmg_gate(params)
        report = entanglement.entangling_power(g)
        up_up = np.array([1.0, 0.0, 0.0, 0.0], dtype=np.complex128)
        conc = entanglement.concurrence(g.u4 @ up_up)
        print(f"g1 = {fmt_float(params.g1)}  g2 = {fmt_float(params.g2)}  "
              f"t = {fmt_float(params.t)}  xi = {fmt_float(params.xi)}  "
              f"beta = {fmt_float(params.beta)}")
        print("B_L =")
        print(fmt_matrix(g.u3))
        print(f"e_p = {fmt_float(report.ep)}")
        print(f"class = {report.classification}")
        print(f"concurrence(B_L |upup>) = {fmt_float(conc)}")
        return EXIT_OK
    if args.steps < 2:
        print("error: --steps must be at least 2", file=sys.stderr)
        return EXIT_USAGE
    if args.out is None:
        print("error: --out is required for a time series", file=sys.stderr)
        return EXIT_USAGE
    t_grid = np.linspace(args.t_min, args.t_max, args.steps)
    points = entanglement.lmg_entanglement_profile(args.g1, args.g2, t_grid)
    rows = [",".join([fmt_float(p.t), fmt_float(p.ep), fmt_float(p.concurrence)])
            for p in points]
    try:
        _write_csv(args.out, "t,ep,concurrence", rows)
    except OSError as exc:
        print(f"error: cannot write {args.out}: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(f"wrote {len(rows)} rows to {args.out}")
    return EXIT_OK


def cmd_decompose(args) -> int:
    try:
        matrix = parse_matrix_file(args.file)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if matrix.shape != (3, 3):
        print(f"error: decomposition requires a 3x3 matrix, got {matrix.shape[0]}x"
              f"{matrix.shape[1]}", file=sys.stderr)
        return EXIT_USAGE
    try:
        coeffs = su3.decompose_hamiltonian(matrix)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY
    for k, value in enumerate(coeffs):
        print(f"h{k} = {fmt_float(value)}")
    residual = float(np.max(np.abs(su3.build_hamiltonian(coeffs) - matrix)))
    print(f"reconstruction residual = {fmt_float(residual)}")
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="symgates",
        description="Symmetric two-qubit gates, operator bases and entangling power.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_basis = sub.add_parser("basis", help="print or verify the operator bases")
    p_basis.add_argument("--verify", action="store_true",
                         help="check the algebra tables and Gell-Mann relations")
    p_basis.add_argument("--show", metavar="MK", help="print one basis matrix, e.g. M3")
    p_basis.add_argument("--j", type=parse_spin, default=1.0,
                         help="spin for --count / --tensor-basis (e.g. 3/2)")
    p_basis.add_argument("--count", action="store_true",
                         help="print the number of Hermitian basis matrices for --j")
    p_basis.add_argument("--tensor-basis", action="store_true",
                         help="print the orthonormal Hermitian tensor basis for --j")
    p_basis.set_defaults(func=cmd_basis)

    p_gate = sub.add_parser("gate", help="analyze one gate B_k(theta)")
    p_gate.add_argument("k", type=int, choices=range(1, 9), metavar="K",
                        help="gate index 1..8")
    p_gate.add_argument("--theta", type=parse_angle, required=True,
                        help="angle (radians or e.g. pi/2, sqrt3*pi/2)")
    p_gate.set_defaults(func=cmd_gate)

    p_sweep = sub.add_parser("sweep", help="sweep theta and write a CSV")
    p_sweep.add_argument("k", type=int, choices=range(1, 9), metavar="K")
    p_sweep.add_argument("--theta-min", type=parse_angle, default=0.0)
    p_sweep.add_argument("--theta-max", type=parse_angle, required=True)
    p_sweep.add_argument("--steps", type=int, required=True)
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(func=cmd_sweep)

    p_act = sub.add_parser("act", help="apply a gate to a symmetric product state")
    p_act.add_argument("k", type=int, choices=range(1, 9), metavar="K")
    p_act.add_argument("--theta", type=parse_angle, required=True)
    p_act.add_argument("--alpha", type=parse_angle, required=True)
    p_act.add_argument("--phi", type=parse_angle, default=0.0)
    p_act.set_defaults(func=cmd_act)

    p_lmg = sub.add_parser("lmg", help="collective-spin evolution gate report or series")
    p_lmg.add_argument("--g1", type=float, required=True)
    p_lmg.add_argument("--g2", type=float, required=True)
    p_lmg.add_argument("--t", type=parse_angle, default=None, help="single evolution time")
    p_lmg.add_argument("--t-min", type=parse_angle, default=0.0)
    p_lmg.add_argument("--t-max", type=parse_angle, default=None)
    p_lmg.add_argument("--steps", type=int, default=0)
    p_lmg.add_argument("--out", default=None, help="output CSV path for a series")
    p_lmg.set_defaults(func=cmd_lmg)

    p_dec = sub.add_parser("decompose", help="decompose a Hermitian 3x3 matrix file")
    p_dec.add_argument("file", help="JSON matrix file with 'dim' and 'entries'")
    p_dec.set_defaults(func=cmd_decompose)

    return parser


def main(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY


def main_entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_entry()
