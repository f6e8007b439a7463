"""Dense complex linear algebra for small operator matrices.

All functions work on plain numpy arrays of shape (n, n) with n <= 6 and
are pure; inputs are never mutated.  Unitary exponentials of Hermitian
matrices are computed by eigendecomposition, which also serves as the
independent oracle for closed-form gate expressions elsewhere.
"""

from __future__ import annotations

import numpy as np

HERMITICITY_ATOL = 1e-12
UNITARITY_ATOL = 1e-12


def _as_square(a, name: str = "matrix") -> np.ndarray:
    a = np.asarray(a, dtype=np.complex128)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"{name} must be a square matrix, got shape {a.shape}")
    return a


def _check_same_dim(a: np.ndarray, b: np.ndarray) -> None:
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")


def dagger(a) -> np.ndarray:
    """Conjugate transpose."""
    return np.asarray(a, dtype=np.complex128).conj().T


def commutator(a, b) -> np.ndarray:
    """ab - ba for equal-dimension square matrices."""
    a = _as_square(a, "a")
    b = _as_square(b, "b")
    _check_same_dim(a, b)
    return a @ b - b @ a


def anticommutator(a, b) -> np.ndarray:
    """ab + ba for equal-dimension square matrices."""
    a = _as_square(a, "a")
    b = _as_square(b, "b")
    _check_same_dim(a, b)
    return a @ b + b @ a


def hermiticity_defect(a) -> tuple[int, int, float]:
    """Index and magnitude of the largest entry of a - a^dagger."""
    a = _as_square(a)
    d = np.abs(a - a.conj().T)
    flat = int(np.argmax(d))
    i, j = divmod(flat, a.shape[1])
    return i, j, float(d[i, j])


def is_hermitian(a, atol: float = HERMITICITY_ATOL) -> bool:
    a = _as_square(a)
    return bool(np.max(np.abs(a - a.conj().T)) <= atol)


def is_unitary(a, atol: float = UNITARITY_ATOL) -> bool:
    a = _as_square(a)
    eye = np.eye(a.shape[0])
    return bool(np.max(np.abs(a.conj().T @ a - eye)) <= atol)


def expm_hermitian(h, t: float = 1.0, atol: float = HERMITICITY_ATOL) -> np.ndarray:
    """Unitary exp(i h t) of a Hermitian matrix via eigendecomposition.

    Raises ValueError naming the offending entry if h is not Hermitian
    within `atol`.
    """
    h = _as_square(h, "h")
    i, j, defect = hermiticity_defect(h)
    if defect > atol:
        raise ValueError(
            f"matrix is not Hermitian: |(h - h^dagger)[{i}, {j}]| = {defect:.3e} "
            f"exceeds {atol:.1e}"
        )
    w, v = np.linalg.eigh(h)
    return (v * np.exp(1j * w * float(t))) @ v.conj().T
