import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from retroframes import numerics
from retroframes.errors import DimensionMismatch, EmptyMatrix, NotHermitian, NotSquare


@pytest.mark.parametrize(
    "m, expected",
    [
        (np.diag([2.0, 1.0, 1.0]), [1, 1, 2]),
        (np.eye(3), [1, 1, 1]),
    ],
)
def test_hermitian_eigenvalues_trivial(m, expected):
    np.testing.assert_allclose(numerics.hermitian_eigenvalues(m), expected, atol=1e-14)


def test_hermitian_eigenvalues_swap_matches_characteristic_polynomial():
    # lambda^2 - 1
    roots = np.sort(np.roots([1.0, 0.0, -1.0]).real)
    got = numerics.hermitian_eigenvalues([[0.0, 1.0], [1.0, 0.0]])
    np.testing.assert_allclose(got, roots, atol=1e-14)


def test_hermitian_eigenvalues_complex():
    m = np.array([[2, 1j], [-1j, 2]])
    np.testing.assert_allclose(numerics.hermitian_eigenvalues(m), [1, 3], atol=1e-14)


def test_hermitian_eigenvalues_errors():
    with pytest.raises(NotSquare):
        numerics.hermitian_eigenvalues(np.ones((2, 3)))
    with pytest.raises(NotHermitian):
        numerics.hermitian_eigenvalues([[0.0, 1.0], [0.0, 0.0]])
    # within the symmetry tolerance is accepted
    numerics.hermitian_eigenvalues([[0.0, 1.0], [1.0 + 1e-12, 0.0]])


def test_singular_values():
    np.testing.assert_allclose(numerics.singular_values(np.eye(2)), [1, 1])
    np.testing.assert_allclose(
        numerics.singular_values(np.diag([1, 1 / 4, 1 / 9])), [1, 1 / 4, 1 / 9], rtol=1e-14
    )
    np.testing.assert_allclose(numerics.singular_values([[3.0], [4.0]]), [math.hypot(3, 4)])
    with pytest.raises(EmptyMatrix):
        numerics.singular_values(np.zeros((0, 3)))


def test_distance_to_span_examples():
    e = np.eye(3)
    assert numerics.distance_to_span(e[0], [e[1], e[2]]) == pytest.approx(1.0)
    assert numerics.distance_to_span(e[0], [e[0]]) == pytest.approx(0.0, abs=1e-15)
    x = np.array([1.0, 1.0]) / math.sqrt(2)
    assert numerics.distance_to_span(x, [np.array([1.0, 0.0])]) == pytest.approx(1 / math.sqrt(2))
    assert numerics.distance_to_span(np.array([3.0, 4.0]), []) == pytest.approx(5.0)


def test_distance_to_span_dependent_and_zero_basis():
    e = np.eye(3)
    basis = [e[1], 2 * e[1], np.zeros(3), e[1] + 0.0]
    assert numerics.distance_to_span(e[0] + e[1], basis) == pytest.approx(1.0)


def test_distance_to_span_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        numerics.distance_to_span(np.ones(3), [np.ones(2)])


def test_min_norm_solve_examples():
    sol = numerics.min_norm_solve(np.eye(2), [1.0, 2.0])
    np.testing.assert_allclose(sol.x, [1, 2])
    assert sol.residual == pytest.approx(0.0)

    sol = numerics.min_norm_solve([[1.0, 0.0], [0.0, 0.0]], [1.0, 1.0])
    np.testing.assert_allclose(sol.x, [1, 0], atol=1e-15)
    assert sol.residual == pytest.approx(1.0)

    sol = numerics.min_norm_solve([[1.0, 1.0]], [2.0])
    np.testing.assert_allclose(sol.x, [1, 1])

    with pytest.raises(DimensionMismatch):
        numerics.min_norm_solve(np.eye(2), [1.0, 2.0, 3.0])


seeds = st.integers(0, 2**32 - 1)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_spectral_consistency(seed):
    rng = np.random.default_rng(seed)
    m, n = rng.integers(1, 10), rng.integers(1, 7)
    t = rng.standard_normal((m, n)) + 1j * rng.standard_normal((m, n))
    ev = numerics.hermitian_eigenvalues(t.conj().T @ t)
    sv = numerics.singular_values(t)
    sq = np.zeros(n)
    sq[: len(sv)] = sv**2
    np.testing.assert_allclose(np.sort(sq), ev, atol=1e-8)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_distance_zero_on_span_and_norm_on_complement(seed):
    rng = np.random.default_rng(seed)
    n = int(rng.integers(2, 8))
    k = int(rng.integers(1, n))
    q, _ = np.linalg.qr(rng.standard_normal((n, n)))
    basis = list((q[:, :k] @ rng.standard_normal((k, k))).T)
    inside = q[:, :k] @ rng.standard_normal(k)
    outside = q[:, k:] @ rng.standard_normal(n - k)
    assert numerics.distance_to_span(inside, basis) < 1e-10
    assert numerics.distance_to_span(outside, basis) == pytest.approx(np.linalg.norm(outside), rel=1e-10)


@settings(max_examples=60, deadline=None)
@given(seeds)
def test_min_norm_solution_is_minimal(seed):
    rng = np.random.default_rng(seed)
    rows, cols = int(rng.integers(1, 6)), int(rng.integers(1, 8))
    r = int(rng.integers(1, min(rows, cols) + 1))
    a = rng.standard_normal((rows, r)) @ rng.standard_normal((r, cols))
    b = rng.standard_normal(rows)
    sol = numerics.min_norm_solve(a, b)
    null = numerics.null_space(a)
    for _ in range(5):
        if null.shape[1] == 0:
            break
        z = sol.x + null @ rng.standard_normal(null.shape[1])
        assert np.linalg.norm(a @ z - b) == pytest.approx(sol.residual, abs=1e-9)
        assert np.linalg.norm(z) >= np.linalg.norm(sol.x) - 1e-12
