"""Irreducible spherical tensor operators for spin j <= 5/2.

The rank-k tensor operators tau^k_q are built from Clebsch-Gordan
coefficients,

    <j m' | tau^k_q | j m> = sqrt(2k + 1) * C(j m; k q | j m'),

with Condon-Shortley phases, which fixes the normalization

    Tr(tau^k_q^dagger tau^k'_q') = (2j + 1) delta_kk' delta_qq'

and the adjoint symmetry tau^k_q^dagger = (-1)^q tau^k_{-q}.  From these
an orthonormal Hermitian basis is assembled: for q >= 1 the combinations
(tau + tau^dagger) and i(tau - tau^dagger) scaled by 1/sqrt(2(2j+1)),
and for q = 0 the diagonal tau^k_0 / sqrt(2j+1).

Matrices are laid out in the |j m> basis with m descending from +j to
-j, so index i corresponds to m = j - i.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

import numpy as np

from .linalg import expm_hermitian, is_hermitian  # noqa: F401  (re-exported oracle)

MAX_TWO_J = 5

SPHERICAL = "spherical"
PLUS = "plus"
MINUS = "minus"
ZERO = "zero"


def _as_two(value, name: str) -> int:
    """Return 2*value as an exact integer, rejecting non-half-integers."""
    doubled = 2 * float(value)
    rounded = round(doubled)
    if abs(doubled - rounded) > 1e-9:
        raise ValueError(f"{name} = {value} is not a half-integer")
    return int(rounded)


def _as_two_j(j) -> int:
    two_j = _as_two(j, "j")
    if two_j < 0:
        raise ValueError(f"j must be non-negative, got {j}")
    if two_j > MAX_TWO_J:
        raise ValueError(f"j = {j} exceeds the supported maximum j = {MAX_TWO_J / 2}")
    return two_j


def _fact_half(two_n: int) -> float:
    """Factorial of two_n/2, requiring two_n to be an even non-negative int."""
    if two_n < 0 or two_n % 2:
        raise ValueError(f"factorial argument {two_n / 2} is not a non-negative integer")
    return float(math.factorial(two_n // 2))


def clebsch_gordan(j1, m1, j2, m2, j3, m3) -> float:
    """Clebsch-Gordan coefficient <j1 m1 j2 m2 | j3 m3> (Condon-Shortley).

    Returns 0 when m1 + m2 != m3 or the triangle rule fails; raises on
    invalid quantum numbers such as |m| > j or non-half-integer inputs.
    """
    tj1, tm1 = _as_two(j1, "j1"), _as_two(m1, "m1")
    tj2, tm2 = _as_two(j2, "j2"), _as_two(m2, "m2")
    tj3, tm3 = _as_two(j3, "j3"), _as_two(m3, "m3")
    for tj, tm, jn, mn in ((tj1, tm1, "j1", "m1"), (tj2, tm2, "j2", "m2"), (tj3, tm3, "j3", "m3")):
        if tj < 0:
            raise ValueError(f"{jn} must be non-negative")
        if abs(tm) > tj:
            raise ValueError(f"|{mn}| > {jn} is not a valid quantum-number combination")
        if (tj + tm) % 2:
            raise ValueError(f"{mn} must differ from {jn} by an integer")

    if tm1 + tm2 != tm3:
        return 0.0
    if tj3 < abs(tj1 - tj2) or tj3 > tj1 + tj2 or (tj1 + tj2 + tj3) % 2:
        return 0.0

    prefactor = math.sqrt(
        (tj3 + 1)
        * _fact_half(tj1 + tj2 - tj3)
        * _fact_half(tj1 - tj2 + tj3)
        * _fact_half(-tj1 + tj2 + tj3)
        / _fact_half(tj1 + tj2 + tj3 + 2)
        * _fact_half(tj1 + tm1)
        * _fact_half(tj1 - tm1)
        * _fact_half(tj2 + tm2)
        * _fact_half(tj2 - tm2)
        * _fact_half(tj3 + tm3)
        * _fact_half(tj3 - tm3)
    )

    k_min = max(0, (tj2 - tj3 - tm1) // 2, (tj1 + tm2 - tj3) // 2)
    k_max = min((tj1 + tj2 - tj3) // 2, (tj1 - tm1) // 2, (tj2 + tm2) // 2)
    total = 0.0
    for k in range(k_min, k_max + 1):
        sign = -1.0 if k % 2 else 1.0
        total += sign / (
            math.factorial(k)
            * _fact_half(tj1 + tj2 - tj3 - 2 * k)
            * _fact_half(tj1 - tm1 - 2 * k)
            * _fact_half(tj2 + tm2 - 2 * k)
            * _fact_half(tj3 - tj2 + tm1 + 2 * k)
            * _fact_half(tj3 - tj1 - tm2 + 2 * k)
        )
    return prefactor * total


@dataclass(frozen=True)
class SpinMatrices:
    """Angular momentum matrices for a single spin (m descending)."""

    j: float
    x: np.ndarray
    y: np.ndarray
    z: np.ndarray
    plus: np.ndarray
    minus: np.ndarray


@lru_cache(maxsize=None)
def _spin_matrices(two_j: int) -> SpinMatrices:
    j = two_j / 2
    dim = two_j + 1
    m = j - np.arange(dim)
    jz = np.diag(m).astype(np.complex128)
    jplus = np.zeros((dim, dim), dtype=np.complex128)
    for i in range(1, dim):
        # <m+1| J+ |m> = sqrt(j(j+1) - m(m+1))
        jplus[i - 1, i] = math.sqrt(j * (j + 1) - m[i] * (m[i] + 1))
    jminus = jplus.conj().T
    jx = (jplus + jminus) / 2
    jy = (jplus - jminus) / 2j
    for a in (jz, jplus, jminus, jx, jy):
        a.setflags(write=False)
    return SpinMatrices(j=j, x=jx, y=jy, z=jz, plus=jplus, minus=jminus)


def angular_momentum_matrices(j) -> SpinMatrices:
    """J_x, J_y, J_z and the ladder operators for spin j <= 5/2."""
    return _spin_matrices(_as_two_j(j))


@dataclass(frozen=True)
class TensorOperator:
    """A tagged tensor-operator matrix of dimension 2j+1."""

    j: float
    k: int
    q: int
    component: str
    matrix: np.ndarray


@lru_cache(maxsize=None)
def _tau_matrix(two_j: int, k: int, q: int) -> np.ndarray:
    j = two_j / 2
    dim = two_j + 1
    scale = math.sqrt(2 * k + 1)
    mat = np.zeros((dim, dim), dtype=np.complex128)
    for col in range(dim):
        two_m = two_j - 2 * col
        two_mp = two_m + 2 * q
        if abs(two_mp) > two_j:
            continue
        row = (two_j - two_mp) // 2
        mat[row, col] = scale * clebsch_gordan(j, two_m / 2, k, q, j, two_mp / 2)
    mat.setflags(write=False)
    return mat


def tau(j, k: int, q: int) -> TensorOperator:
    """Spherical tensor operator tau^k_q for spin j.

    Requires 0 <= k <= 2j and |q| <= k.
    """
    two_j = _as_two_j(j)
    if not isinstance(k, int) or not 0 <= k <= two_j:
        raise ValueError(f"rank k = {k} out of range 0..{two_j} for j = {two_j / 2}")
    if not isinstance(q, int) or abs(q) > k:
        raise ValueError(f"projection q = {q} out of range -{k}..{k}")
    return TensorOperator(j=two_j / 2, k=k, q=q, component=SPHERICAL,
                          matrix=_tau_matrix(two_j, k, q).copy())


def spherical_basis(j) -> list[TensorOperator]:
    """All tau^k_q for k = 0..2j, q = -k..k."""
    two_j = _as_two_j(j)
    return [tau(two_j / 2, k, q) for k in range(two_j + 1) for q in range(-k, k + 1)]


def hermitian_basis(j) -> list[TensorOperator]:
    """Orthonormal Hermitian basis of (2j+1)^2 matrices built from tau^k_q.

    Ordered by rank: the diagonal q = 0 member first, then for q = 1..k
    the symmetric ('plus') and antisymmetric ('minus') combinations.
    All members are traceless except the k = 0 one, and they satisfy
    Tr(T_a T_b) = delta_ab.
    """
    two_j = _as_two_j(j)
    j_val = two_j / 2
    norm_zero = math.sqrt(two_j + 1)
    norm_pm = math.sqrt(2 * (two_j + 1))
    out: list[TensorOperator] = []
    for k in range(two_j + 1):
        t0 = _tau_matrix(two_j, k, 0)
        out.append(TensorOperator(j_val, k, 0, ZERO, t0 / norm_zero))
        for q in range(1, k + 1):
            tq = _tau_matrix(two_j, k, q)
            out.append(TensorOperator(j_val, k, q, PLUS, (tq + tq.conj().T) / norm_pm))
            out.append(TensorOperator(j_val, k, q, MINUS, 1j * (tq - tq.conj().T) / norm_pm))
    return out


@dataclass(frozen=True)
class TensorParams:
    """Expansion coefficients h^k_q of a Hermitian operator.

    Hermiticity of the represented operator requires
    conj(h^k_q) = (-1)^q h^k_{-q}, which is validated on construction.
    """

    j: float
    coeffs: Mapping[tuple[int, int], complex] = field(repr=False)

    def __post_init__(self) -> None:
        two_j = _as_two_j(self.j)
        object.__setattr__(self, "j", two_j / 2)
        coeffs = dict(self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        for (k, q), h in coeffs.items():
            partner = coeffs.get((k, -q))
            if partner is None:
                raise ValueError(f"missing partner coefficient for (k={k}, q={-q})")
            if abs(np.conj(h) - (-1) ** q * partner) > 1e-12 * max(1.0, abs(h)):
                raise ValueError(
                    f"coefficients violate Hermiticity at (k={k}, q={q}): "
                    f"conj(h) = {np.conj(h)}, (-1)^q h(-q) = {(-1) ** q * partner}"
                )

    def rank_coefficients(self, k: int) -> np.ndarray:
        """Coefficients of rank k ordered by q descending from +k to -k."""
        return np.array([self.coeffs[(k, q)] for q in range(k, -k - 1, -1)])


def decompose(h, j) -> TensorParams:
    """Coefficients h^k_q = Tr(h tau^k_q) of a Hermitian matrix."""
    two_j = _as_two_j(j)
    h = np.asarray(h, dtype=np.complex128)
    dim = two_j + 1
    if h.shape != (dim, dim):
        raise ValueError(f"expected a {dim}x{dim} matrix for j = {two_j / 2}, got {h.shape}")
    if not is_hermitian(h):
        raise ValueError("matrix is not Hermitian within 1e-12")
    coeffs = {
        (k, q): complex(np.trace(h @ _tau_matrix(two_j, k, q)))
        for k in range(two_j + 1)
        for q in range(-k, k + 1)
    }
    return TensorParams(j=two_j / 2, coeffs=coeffs)


def reconstruct(params: TensorParams) -> np.ndarray:
    """Rebuild the operator (1/(2j+1)) sum_kq h^k_q tau^k_q^dagger."""
    two_j = _as_two_j(params.j)
    dim = two_j + 1
    out = np.zeros((dim, dim), dtype=np.complex128)
    for (k, q), h in params.coeffs.items():
        out += h * _tau_matrix(two_j, k, q).conj().T
    return out / dim


MAX_ROTATION_RANK = 2


def wigner_d(k: int, beta: float) -> np.ndarray:
    """Small Wigner d-matrix d^k_{q'q}(beta) = <k q'| exp(-i beta Jy) |k q>.

    Rows and columns are ordered with q descending from +k to -k.  Only
    ranks k <= 2 are supported; higher ranks are rejected rather than
    silently mis-computed.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError(f"rank must be a non-negative integer, got {k}")
    if k > MAX_ROTATION_RANK:
        raise ValueError(f"unsupported rank k = {k}; rotations are implemented for k <= 2")
    dim = 2 * k + 1
    half = float(beta) / 2
    c, s = math.cos(half), math.sin(half)
    out = np.zeros((dim, dim))
    for i in range(dim):
        qp = k - i
        for jcol in range(dim):
            q = k - jcol
            pref = math.sqrt(
                math.factorial(k + q) * math.factorial(k - q)
                * math.factorial(k + qp) * math.factorial(k - qp)
            )
            total = 0.0
            for t in range(max(0, q - qp), min(k + q, k - qp) + 1):
                sign = -1.0 if (qp - q + t) % 2 else 1.0
                total += (
                    sign
                    * c ** (2 * k + q - qp - 2 * t)
                    * s ** (qp - q + 2 * t)
                    / math.factorial(k + q - t)
                    / math.factorial(t)
                    / math.factorial(qp - q + t)
                    / math.factorial(k - qp - t)
                )
            out[i, jcol] = pref * total
    return out


def rotate_params(params: TensorParams, alpha: float, beta: float, gamma: float) -> TensorParams:
    """Rotate tensor parameters: h'_q = sum_q' D^k_{q'q}(alpha beta gamma) h_q'.

    Uses D^k_{q'q} = exp(-i q' alpha) d^k_{q'q}(beta) exp(-i q gamma).
    Equivalent to conjugating the represented operator by the inverse of
    R = exp(-i alpha Jz) exp(-i beta Jy) exp(-i gamma Jz).
    """
    two_j = _as_two_j(params.j)
    ranks = sorted({k for (k, _q) in params.coeffs})
    if ranks and max(ranks) > MAX_ROTATION_RANK:
        raise ValueError(
            f"unsupported rank k = {max(ranks)}; rotations are implemented for k <= 2"
        )
    new_coeffs: dict[tuple[int, int], complex] = {}
    for k in ranks:
        d = wigner_d(k, beta)
        for q in range(k, -k - 1, -1):
            acc = 0j
            for qp in range(k, -k - 1, -1):
                dd = np.exp(-1j * qp * alpha) * d[k - qp, k - q] * np.exp(-1j * q * gamma)
                acc += dd * params.coeffs[(k, qp)]
            new_coeffs[(k, q)] = acc
    return TensorParams(j=two_j / 2, coeffs=new_coeffs)
