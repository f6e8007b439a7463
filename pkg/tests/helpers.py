"""Shared numeric helpers for the test suite."""

from __future__ import annotations

import numpy as np


def align_global_phase(actual: np.ndarray, reference: np.ndarray) -> np.ndarray:
    """Rescale `actual` by a unit phase to best match `reference`."""
    overlap = np.vdot(np.asarray(actual).ravel(), np.asarray(reference).ravel())
    if abs(overlap) == 0:
        return np.asarray(actual)
    return np.asarray(actual) * (overlap / abs(overlap))


def max_phase_distance(actual: np.ndarray, reference: np.ndarray) -> float:
    """Max-abs difference after optimal global-phase alignment."""
    return float(np.max(np.abs(align_global_phase(actual, reference) - reference)))


def random_su2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random SU(2) matrix from a normalized quaternion."""
    a, b, c, d = rng.normal(size=4)
    norm = np.sqrt(a * a + b * b + c * c + d * d)
    a, b, c, d = a / norm, b / norm, c / norm, d / norm
    return np.array([[a + 1j * b, c + 1j * d], [-c + 1j * d, a - 1j * b]])


def random_hermitian(rng: np.random.Generator, dim: int, scale: float = 1.0) -> np.ndarray:
    a = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    return scale * (a + a.conj().T) / 2


def random_spinor(rng: np.random.Generator) -> tuple[complex, complex]:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v = v / np.linalg.norm(v)
    return complex(v[0]), complex(v[1])
