"""One-parameter symmetric two-qubit gates and the LMG evolution gate.

Each gate is the unitary exp(i M_k theta) on the spin-1 (symmetric)
subspace.  Because M1..M7 have eigenvalues {1, 0, -1}, those seven
gates admit the closed form

    B_k = I + (cos theta - 1) M_k^2 + i sin theta M_k,

while B8, whose generator has eigenvalues {1, -2, 1}/sqrt(3), is a pure
phase gate handled explicitly.  The 4x4 product-basis embedding acts as
the identity on the singlet state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import expm_hermitian, is_unitary
from .su3 import M, M0, M7, M8, to_qubit_basis
from .tensors import angular_momentum_matrices

_SQ3 = math.sqrt(3.0)
_SQ8 = math.sqrt(8.0)


@dataclass(frozen=True)
class LMGParams:
    """Couplings and evolution time of the collective-spin interaction
    g1 (J+^2 + J-^2) + g2 (J+J- + J-J+)."""

    g1: float
    g2: float
    t: float

    @property
    def xi(self) -> float:
        """Twisting angle 2 g1 t."""
        return 2.0 * self.g1 * self.t

    @property
    def beta(self) -> float:
        """Phase angle (2/sqrt(3)) g2 t."""
        return 2.0 * self.g2 * self.t / _SQ3


@dataclass(frozen=True)
class SymmetricGate:
    """A symmetric two-qubit gate: 3x3 unitary plus 4x4 embedding."""

    label: str
    u3: np.ndarray
    u4: np.ndarray
    theta: float | None = None
    lmg: LMGParams | None = None


def _make_gate(label: str, u3: np.ndarray, theta: float | None = None,
               lmg: LMGParams | None = None) -> SymmetricGate:
    if not is_unitary(u3):
        raise ValueError(f"gate {label} is not unitary within 1e-12")
    u4 = to_qubit_basis(u3, 1.0)
    return SymmetricGate(label=label, u3=u3, u4=u4, theta=theta, lmg=lmg)


def gate(k: int, theta: float) -> SymmetricGate:
    """The gate B_k = exp(i M_k theta) for k = 1..8.

    k = 0 is rejected: exp(i M_0 theta) is a global phase, not a gate.
    """
    if not isinstance(k, int) or not 1 <= k <= 8:
        raise ValueError(f"gate index must be in 1..8, got {k} "
                         "(index 0 would be a global phase)")
    theta = float(theta)
    if k == 8:
        u3 = np.diag(np.exp(1j * theta / _SQ3 * np.array([1.0, -2.0, 1.0])))
    else:
        mk = M[k]
        u3 = np.eye(3) + (math.cos(theta) - 1.0) * (mk @ mk) + 1j * math.sin(theta) * mk
    return _make_gate(f"B{k}", u3, theta=theta)


def custom_gate(u3, label: str = "custom") -> SymmetricGate:
    """Wrap an arbitrary 3x3 unitary as a symmetric gate."""
    return _make_gate(label, np.asarray(u3, dtype=np.complex128))


def lmg_hamiltonian(g1: float, g2: float) -> np.ndarray:
    """Spin-1 matrix of g1 (J+^2 + J-^2) + g2 (J+J- + J-J+).

    Built from the ladder operators and cross-checked against the
    equivalent basis expansion 2 g1 M7 + (2/sqrt(3)) g2 (sqrt(8) M0 - M8);
    a disagreement would indicate corrupted basis constants.
    """
    jm = angular_momentum_matrices(1)
    jp, jmn = jm.plus, jm.minus
    h_ladder = g1 * (jp @ jp + jmn @ jmn) + g2 * (jp @ jmn + jmn @ jp)
    h_basis = 2.0 * g1 * M7 + (2.0 / _SQ3) * g2 * (_SQ8 * M0 - M8)
    if np.max(np.abs(h_ladder - h_basis)) > 1e-12:
        raise RuntimeError("ladder and basis forms of the collective Hamiltonian disagree")
    return h_ladder


def lmg_gate(params: LMGParams) -> SymmetricGate:
    """The evolution gate exp(i H t) of the collective-spin Hamiltonian."""
    h = lmg_hamiltonian(params.g1, params.g2)
    u3 = expm_hermitian(h, params.t)
    return _make_gate("BL", u3, lmg=params)


def lmg_gate_closed_form(params: LMGParams) -> np.ndarray:
    """Closed form of the 3x3 collective-evolution gate.

    With xi = 2 g1 t and beta = (2/sqrt(3)) g2 t the corner entries are
    exp(i sqrt(3) beta) cos(xi), the off-corners i exp(i sqrt(3) beta)
    sin(xi), and the center exp(2 i sqrt(3) beta).
    """
    xi, beta = params.xi, params.beta
    corner = np.exp(1j * _SQ3 * beta)
    center = np.exp(2j * _SQ3 * beta)
    c, s = math.cos(xi), math.sin(xi)
    return np.array([
        [corner * c, 0.0, 1j * corner * s],
        [0.0, center, 0.0],
        [1j * corner * s, 0.0, corner * c],
    ])
