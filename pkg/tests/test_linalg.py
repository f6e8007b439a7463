import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symgates.linalg import (
    anticommutator,
    commutator,
    dagger,
    expm_hermitian,
    is_hermitian,
    is_unitary,
)
from symgates.su3 import M1, M2, M3, M4, M7, M8

from helpers import random_hermitian


def test_commutator_of_matrix_with_itself_vanishes():
    assert np.max(np.abs(commutator(M1, M1))) == 0.0


def test_commutator_m1_m2():
    np.testing.assert_allclose(commutator(M1, M2), -1j * M3, atol=1e-14)


def test_anticommutator_m3_m8():
    np.testing.assert_allclose(anticommutator(M3, M8), 2 / np.sqrt(3) * M3, atol=1e-14)


def test_dimension_mismatch_rejected():
    with pytest.raises(ValueError, match="mismatch"):
        commutator(np.eye(3), np.eye(4))
    with pytest.raises(ValueError, match="mismatch"):
        anticommutator(np.eye(2), np.eye(3))


def test_products_of_basis_matrices():
    np.testing.assert_allclose(M3 @ M3, np.diag([1.0, 0.0, 1.0]), atol=1e-15)
    np.testing.assert_allclose(M4 @ M7, 1j * np.diag([1.0, 0.0, -1.0]), atol=1e-15)


def test_trace_and_determinant_facts():
    assert abs(np.trace(M8)) < 1e-15
    theta = 0.73
    u = np.diag([np.exp(1j * theta), 1.0, np.exp(-1j * theta)])
    assert abs(np.linalg.det(u) - 1.0) < 1e-14


def test_dagger_is_conjugate_transpose():
    a = np.array([[1 + 2j, 3], [4j, 5]])
    np.testing.assert_array_equal(dagger(a), a.conj().T)


def test_expm_of_zero_is_identity():
    np.testing.assert_allclose(expm_hermitian(np.zeros((3, 3)), 2.7), np.eye(3), atol=1e-15)


def test_expm_m3_gives_diagonal_phases():
    theta = 1.234
    expected = np.diag([np.exp(1j * theta), 1.0, np.exp(-1j * theta)])
    np.testing.assert_allclose(expm_hermitian(M3, theta), expected, atol=1e-14)


def test_expm_m4_quarter_turn():
    expected = np.array([[0, 0, -1], [0, 1, 0], [1, 0, 0]], dtype=complex)
    np.testing.assert_allclose(expm_hermitian(M4, np.pi / 2), expected, atol=1e-14)


def test_expm_rejects_non_hermitian_and_names_entry():
    bad = np.array([[0.0, 1.0], [0.0, 0.0]])
    with pytest.raises(ValueError, match=r"\[0, 1\]"):
        expm_hermitian(bad, 1.0)


def test_expm_rejects_non_square():
    with pytest.raises(ValueError, match="square"):
        expm_hermitian(np.zeros((2, 3)), 1.0)


@st.composite
def hermitian_inputs(draw):
    dim = draw(st.integers(min_value=2, max_value=6))
    entries = draw(st.lists(st.floats(-2.0, 2.0), min_size=2 * dim * dim, max_size=2 * dim * dim))
    flat = np.asarray(entries)
    a = flat[: dim * dim].reshape(dim, dim) + 1j * flat[dim * dim:].reshape(dim, dim)
    return (a + a.conj().T) / 2


@given(h=hermitian_inputs(), t=st.floats(-10.0, 10.0))
@settings(max_examples=60, deadline=None)
def test_expm_is_unitary_and_invertible(h, t):
    u = expm_hermitian(h, t)
    assert is_unitary(u, atol=1e-12)
    np.testing.assert_allclose(u @ expm_hermitian(h, -t), np.eye(h.shape[0]), atol=1e-12)
    assert abs(abs(np.linalg.det(u)) - 1.0) < 1e-12


@given(h=hermitian_inputs(), t1=st.floats(-10.0, 10.0), t2=st.floats(-10.0, 10.0))
@settings(max_examples=60, deadline=None)
def test_expm_group_property(h, t1, t2):
    lhs = expm_hermitian(h, t1 + t2)
    rhs = expm_hermitian(h, t1) @ expm_hermitian(h, t2)
    np.testing.assert_allclose(lhs, rhs, atol=1e-11)


def test_hermiticity_predicate(rng):
    h = random_hermitian(rng, 4)
    assert is_hermitian(h)
    assert not is_hermitian(h + 1e-6 * np.array([[0, 1j, 0, 0]] + [[0] * 4] * 3))
