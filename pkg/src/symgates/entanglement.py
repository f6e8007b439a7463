"""Local invariants, entangling power and concurrence of two-qubit gates.

The nonlocal content of a 4x4 unitary B is captured by the invariant

    G1 = tr(m)^2 / (16 det B_bell),   m = B_bell^T B_bell,

where B_bell is the gate rewritten in a Bell ("magic") basis, in which
local unitaries become real orthogonal.  The entangling power follows as
e_p = (2/9)(1 - |G1|), with perfect entanglers filling 1/6 <= e_p <= 2/9
and special perfect entanglers the maximal value 2/9.

Amplitude ordering for all 4-vectors is (up-up, up-down, down-up,
down-down); the concurrence of a pure state (a, b, c, d) is 2|ad - bc|.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass

import numpy as np

from .gates import LMGParams, SymmetricGate, lmg_gate
from .linalg import is_unitary
from .su3 import U_QUBIT_TO_ANGULAR

_SQ2 = math.sqrt(2.0)

MAX_EP = 2.0 / 9.0
PERFECT_EP = 1.0 / 6.0
CLASSIFY_ATOL = 1e-9

NON_ENTANGLING = "non-entangling"
ENTANGLING = "entangling"
PERFECT_ENTANGLER = "perfect-entangler"
SPECIAL_PERFECT_ENTANGLER = "special-perfect-entangler"

# Maps angular momentum coordinates (|1 1>, |1 0>, |1 -1>, |0 0>) to the
# Bell combinations ((dd + uu)/sqrt2, i(du + ud)/sqrt2, (du - ud)/sqrt2,
# i(dd - uu)/sqrt2), up to harmless sign choices on the last two vectors.
BELL_TRANSFORM = np.array([
    [1 / _SQ2, 0, 1 / _SQ2, 0],
    [0, -1j, 0, 0],
    [0, 0, 0, 1],
    [-1j / _SQ2, 0, 1j / _SQ2, 0],
], dtype=np.complex128)
BELL_TRANSFORM.setflags(write=False)

_QUBIT_TO_BELL = BELL_TRANSFORM @ U_QUBIT_TO_ANGULAR


def makhlin_g1(u4, atol: float = 1e-10) -> complex:
    """Local invariant G1 of a 4x4 unitary in the product basis."""
    u4 = np.asarray(u4, dtype=np.complex128)
    if u4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {u4.shape}")
    if not is_unitary(u4, atol=atol):
        raise ValueError(f"matrix is not unitary within {atol:.1e}")
    b_bell = _QUBIT_TO_BELL @ u4 @ _QUBIT_TO_BELL.conj().T
    m = b_bell.T @ b_bell
    return complex(np.trace(m) ** 2 / (16.0 * np.linalg.det(b_bell)))


@dataclass(frozen=True)
class EntanglementReport:
    """G1, entangling power and classification of an analyzed gate."""

    g1: complex
    g1_abs: float
    ep: float
    classification: str
    gate_label: str | None = None
    theta: float | None = None


def _classify(ep: float) -> str:
    if ep >= MAX_EP - CLASSIFY_ATOL:
        return SPECIAL_PERFECT_ENTANGLER
    if ep >= PERFECT_EP - CLASSIFY_ATOL:
        return PERFECT_ENTANGLER
    if ep > CLASSIFY_ATOL:
        return ENTANGLING
    return NON_ENTANGLING


def entangling_power(u4) -> EntanglementReport:
    """Entangling power e_p = (2/9)(1 - |G1|) and its classification.

    Accepts either a 4x4 product-basis unitary or a SymmetricGate.
    """
    label = None
    theta = None
    if isinstance(u4, SymmetricGate):
        label, theta = u4.label, u4.theta
        u4 = u4.u4
    g1 = makhlin_g1(u4)
    g1_abs = abs(g1)
    ep = MAX_EP * (1.0 - g1_abs)
    if ep < -1e-12 or ep > MAX_EP + 1e-12:
        raise RuntimeError(f"entangling power {ep} out of range [0, 2/9]")
    return EntanglementReport(g1=g1, g1_abs=g1_abs, ep=ep,
                              classification=_classify(ep),
                              gate_label=label, theta=theta)


def concurrence(psi) -> float:
    """Concurrence 2|ad - bc| of a pure two-qubit state (a, b, c, d).

    Non-normalized input is normalized with a warning; the zero vector
    is rejected.
    """
    psi = np.asarray(psi, dtype=np.complex128).reshape(-1)
    if psi.shape != (4,):
        raise ValueError(f"expected four amplitudes, got shape {psi.shape}")
    norm = float(np.linalg.norm(psi))
    if norm == 0.0:
        raise ValueError("cannot compute the concurrence of the zero vector")
    if abs(norm - 1.0) > 1e-10:
        warnings.warn(f"state norm {norm} deviates from 1; normalizing", stacklevel=2)
        psi = psi / norm
    return float(2.0 * abs(psi[0] * psi[3] - psi[1] * psi[2]))


@dataclass(frozen=True)
class SeparableSymmetricState:
    """A permutation-symmetric product state of two qubits.

    vec3 holds the symmetric-subspace coordinates (|1 1>, |1 0>, |1 -1>)
    and vec4 the product-basis amplitudes of the same state.
    """

    alpha: float
    phi: float
    vec3: np.ndarray
    vec4: np.ndarray


def separable_state(alpha: float, phi: float = 0.0) -> SeparableSymmetricState:
    """Product state (cos(a/2)|up> + sin(a/2)e^{i phi}|down>)^(x2).

    Angles are wrapped into alpha in [0, pi], phi in [0, 2 pi); wrapping
    changes the spinor only by a global sign, so the two-qubit state is
    unaffected.
    """
    two_pi = 2.0 * math.pi

    def _wrap(x: float) -> float:
        # x % 2pi can round up to exactly 2pi for tiny negative x
        out = float(x) % two_pi
        return 0.0 if out >= two_pi else out

    alpha = _wrap(alpha)
    phi = _wrap(phi)
    if alpha > math.pi:
        alpha = two_pi - alpha
        phi = _wrap(phi + math.pi)
    c, s = math.cos(alpha / 2), math.sin(alpha / 2)
    phase = np.exp(1j * phi)
    spinor = np.array([c, s * phase])
    vec3 = np.array([c * c, _SQ2 * s * c * phase, s * s * phase * phase])
    vec4 = np.kron(spinor, spinor)
    return SeparableSymmetricState(alpha=alpha, phi=phi, vec3=vec3, vec4=vec4)


def apply_gate(g: SymmetricGate, s: SeparableSymmetricState) -> tuple[np.ndarray, float]:
    """Gate image of a symmetric product state and its concurrence."""
    out = g.u4 @ s.vec4
    return out, concurrence(out)


@dataclass(frozen=True)
class ProductBasis:
    """Orthonormal basis of four two-qubit product states.

    Parametrized by three normalized spinor pairs (a, b), (c, d), (e, f);
    states are rows of `states` in the product-basis amplitude ordering.
    """

    a: complex
    b: complex
    c: complex
    d: complex
    e: complex
    f: complex
    states: np.ndarray


def product_basis(a, b, c, d, e, f) -> ProductBasis:
    """Build the general orthonormal product basis from spinor amplitudes.

    Requires |a|^2+|b|^2 = |c|^2+|d|^2 = |e|^2+|f|^2 = 1 within 1e-12.
    """
    a, b, c, d, e, f = (complex(v) for v in (a, b, c, d, e, f))
    for name, (x, y) in (("(a, b)", (a, b)), ("(c, d)", (c, d)), ("(e, f)", (e, f))):
        if abs(abs(x) ** 2 + abs(y) ** 2 - 1.0) > 1e-12:
            raise ValueError(f"spinor {name} is not normalized within 1e-12")
    first = np.array([a, b])
    first_perp = np.array([-np.conj(b), np.conj(a)])
    second = np.array([c, d])
    second_perp = np.array([-np.conj(d), np.conj(c)])
    third = np.array([e, f])
    third_perp = np.array([-np.conj(f), np.conj(e)])
    states = np.stack([
        np.kron(first, second),
        np.kron(first_perp, second),
        np.kron(third, second_perp),
        np.kron(third_perp, second_perp),
    ])
    gram = states @ states.conj().T
    if np.max(np.abs(gram - np.eye(4))) > 1e-12:
        raise RuntimeError("constructed product basis is not orthonormal")
    return ProductBasis(a=a, b=b, c=c, d=d, e=e, f=f, states=states)


_SPE_FAMILY_ABCD = ("B4", "B7", "B8")
_SPE_FAMILY_SQUARES = ("B5", "B6")


@dataclass(frozen=True)
class SpeConditionResult:
    """Outcome of a special-perfect-entangler basis check.

    `condition_holds` evaluates the family's algebraic criterion on the
    spinor amplitudes; `concurrences` are measured directly by applying
    the gate to all four basis states.  `consistent` records whether the
    two verdicts agree; disagreement is reported, never patched.
    """

    family: str
    condition_values: tuple[float, ...]
    condition_holds: bool
    concurrences: tuple[float, ...]
    all_maximal: bool

    @property
    def consistent(self) -> bool:
        return self.condition_holds == self.all_maximal


def spe_condition(g: SymmetricGate, basis: ProductBasis) -> SpeConditionResult:
    """Evaluate the maximal-entanglement criterion of a gate family.

    For B4/B7/B8 the criterion is |abcd| = |cdef| = 1/4; for B5/B6 it is
    |(a^2+b^2)(c^2+d^2)| = |(e^2+f^2)(c^2+d^2)| = 1.  The gate must be at
    its special-perfect-entangler parameter (e_p = 2/9).
    """
    if g.label in _SPE_FAMILY_ABCD:
        family = "abcd"
    elif g.label in _SPE_FAMILY_SQUARES:
        family = "squares"
    else:
        raise ValueError(f"gate {g.label} is not in the B4..B8 special-entangler families")
    report = entangling_power(g)
    if abs(report.ep - MAX_EP) > CLASSIFY_ATOL:
        raise ValueError(
            f"gate {g.label} has e_p = {report.ep}, not the special-perfect-entangler value 2/9"
        )
    a, b, c, d, e, f = basis.a, basis.b, basis.c, basis.d, basis.e, basis.f
    if family == "abcd":
        values = (abs(a * b * c * d), abs(c * d * e * f))
        holds = all(abs(v - 0.25) <= 2.5e-11 for v in values)
    else:
        values = (abs((a * a + b * b) * (c * c + d * d)),
                  abs((e * e + f * f) * (c * c + d * d)))
        holds = all(abs(v - 1.0) <= 1e-10 for v in values)
    concs = tuple(concurrence(g.u4 @ psi) for psi in basis.states)
    all_maximal = all(cv >= 1.0 - 1e-10 for cv in concs)
    return SpeConditionResult(family=family, condition_values=values,
                              condition_holds=holds, concurrences=concs,
                              all_maximal=all_maximal)


@dataclass(frozen=True)
class LmgProfilePoint:
    t: float
    ep: float
    concurrence: float


def lmg_entanglement_profile(g1: float, g2: float, t_grid) -> list[LmgProfilePoint]:
    """Entangling power and |up up>-image concurrence over a time grid.

    The concurrence of the evolved |up up> state equals |sin(4 g1 t)|:
    zero at t = n pi / (4 g1) and maximal when 4 g1 t is an odd multiple
    of pi/2.  The entangling power reaches 2/9 whenever 2 g2 t - 2 g1 t
    is congruent to pi/2 modulo pi.
    """
    t_grid = np.asarray(t_grid, dtype=np.float64)
    if t_grid.ndim != 1 or t_grid.size == 0:
        raise ValueError("t_grid must be a non-empty 1-D array")
    if not np.all(np.isfinite(t_grid)):
        raise ValueError("t_grid must be finite")
    if np.any(np.diff(t_grid) <= 0) and t_grid.size > 1:
        raise ValueError("t_grid must be strictly ascending")
    up_up = np.array([1.0, 0.0, 0.0, 0.0], dtype=np.complex128)
    points = []
    for t in t_grid:
        g = lmg_gate(LMGParams(g1=g1, g2=g2, t=float(t)))
        report = entangling_power(g)
        points.append(LmgProfilePoint(t=float(t), ep=report.ep,
                                      concurrence=concurrence(g.u4 @ up_up)))
    return points


def kron_factor_2x2(u4) -> tuple[np.ndarray, np.ndarray, float]:
    """Best factorization of a 4x4 matrix as v (x) w with 2x2 factors.

    Returns (v, w, residual) where the residual is the second singular
    value of the rearranged matrix: zero exactly when u4 is a tensor
    product, i.e. a local (non-entangling) gate.
    """
    u4 = np.asarray(u4, dtype=np.complex128)
    if u4.shape != (4, 4):
        raise ValueError(f"expected a 4x4 matrix, got {u4.shape}")
    rearranged = u4.reshape(2, 2, 2, 2).transpose(0, 2, 1, 3).reshape(4, 4)
    left, sing, right = np.linalg.svd(rearranged)
    scale = math.sqrt(sing[0])
    v = scale * left[:, 0].reshape(2, 2)
    w = scale * right[0, :].reshape(2, 2)
    return v, w, float(sing[1])
