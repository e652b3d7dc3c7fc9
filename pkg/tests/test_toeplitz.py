import numpy as np
import pytest

from toepquant import (
    avg,
    best_rank_k,
    fro_norm,
    l_func,
    max_norm,
    op_norm,
    principal_submatrix,
    sup_l,
    toep,
    toeplitz_from_modes,
)
from toepquant.exceptions import (
    DomainError,
    IndexOutOfRangeError,
    InvalidArgumentError,
    InvalidDimensionError,
    NumericError,
)
from toepquant.rulers import full_ruler


def char_poly_eigvals(m):
    """Independent reference: eigenvalues via characteristic polynomial, d <= 3."""
    d = m.shape[0]
    if d == 1:
        return np.array([m[0, 0]])
    if d == 2:
        tr = m[0, 0] + m[1, 1]
        det = m[0, 0] * m[1, 1] - m[0, 1] * m[1, 0]
        disc = np.sqrt(max(tr * tr / 4.0 - det, 0.0))
        return np.array([tr / 2.0 - disc, tr / 2.0 + disc])
    tr = np.trace(m)
    minors = (
        m[0, 0] * m[1, 1] - m[0, 1] ** 2
        + m[0, 0] * m[2, 2] - m[0, 2] ** 2
        + m[1, 1] * m[2, 2] - m[1, 2] ** 2
    )
    det = np.linalg.det(m)
    return np.sort(np.roots([1.0, -tr, minors, -det]).real)


class TestToep:
    def test_basic(self):
        np.testing.assert_array_equal(
            toep([2, 1, 0]).dense(), [[2, 1, 0], [1, 2, 1], [0, 1, 2]]
        )

    def test_scalar(self):
        np.testing.assert_array_equal(toep([1.0]).dense(), [[1.0]])

    def test_delta_generator_is_identity(self):
        for d in (1, 2, 5, 17):
            a = np.zeros(d)
            a[0] = 1.0
            np.testing.assert_array_equal(toep(a).dense(), np.eye(d))

    def test_empty_rejected(self):
        with pytest.raises(InvalidDimensionError):
            toep([])

    def test_entry_and_symmetry(self):
        rng = np.random.default_rng(3)
        t = toep(rng.standard_normal(6))
        dense = t.dense()
        for j in range(6):
            for k in range(6):
                assert dense[j, k] == t.a[abs(j - k)]
        np.testing.assert_array_equal(dense, dense.T)


class TestAvg:
    def test_hand_example(self):
        np.testing.assert_array_equal(avg(np.array([[1.0, 3.0], [5.0, 7.0]])).a, [4.0, 4.0])

    def test_fixed_point_is_exact(self):
        rng = np.random.default_rng(11)
        for _ in range(20):
            a = rng.standard_normal(rng.integers(1, 9))
            t = toep(a)
            assert np.array_equal(avg(t.dense()).a, t.a)
            assert np.array_equal(avg(t).a, t.a)

    def test_rank_one_example(self):
        x = np.array([1.0, 2.0])
        np.testing.assert_allclose(avg(np.outer(x, x)).a, [2.5, 2.0], rtol=0, atol=0)

    def test_rejects_non_square(self):
        with pytest.raises(InvalidDimensionError):
            avg(np.ones((2, 3)))


class TestPrincipalSubmatrix:
    def test_identity(self):
        np.testing.assert_array_equal(
            principal_submatrix(np.eye(4), [0, 2]), np.eye(2)
        )

    def test_toeplitz_corners(self):
        np.testing.assert_array_equal(
            principal_submatrix(toep([3, 2, 1, 0]), [0, 3]), [[3, 0], [0, 3]]
        )

    def test_full_ruler_is_whole_matrix(self):
        rng = np.random.default_rng(5)
        m = rng.standard_normal((4, 4))
        m = m + m.T
        np.testing.assert_array_equal(principal_submatrix(m, full_ruler(4)), m)

    def test_out_of_range(self):
        with pytest.raises(IndexOutOfRangeError):
            principal_submatrix(np.eye(3), [0, 3])


class TestNorms:
    def test_op_norm_identity(self):
        assert op_norm(np.eye(7)) == pytest.approx(1.0)

    def test_op_norm_tridiagonal(self):
        # eigenvalues of Toep(2,1,0) are 2 + 2 cos(k pi / 4), k = 1..3
        assert op_norm(toep([2, 1, 0])) == pytest.approx(2 + np.sqrt(2), abs=1e-12)

    def test_op_norm_signed(self):
        assert op_norm(np.diag([-3.0, 1.0])) == pytest.approx(3.0)

    def test_op_norm_non_finite(self):
        with pytest.raises(NumericError):
            op_norm(np.array([[np.nan, 0.0], [0.0, 1.0]]))

    def test_op_norm_matches_char_poly(self):
        rng = np.random.default_rng(17)
        for _ in range(200):
            d = int(rng.integers(1, 4))
            m = rng.standard_normal((d, d))
            m = (m + m.T) / 2
            want = np.abs(char_poly_eigvals(m)).max()
            assert op_norm(m) == pytest.approx(want, abs=1e-9)

    def test_fro_and_max(self):
        assert fro_norm(np.eye(2)) == pytest.approx(np.sqrt(2))
        assert max_norm(np.eye(2)) == 1.0
        m = np.array([[1.0, -2.0], [-2.0, 1.0]])
        assert fro_norm(m) == pytest.approx(np.sqrt(10))
        assert max_norm(m) == 2.0
        assert fro_norm(np.zeros((3, 3))) == 0.0
        assert max_norm(np.zeros((3, 3))) == 0.0

    def test_fro_norm_squared_is_entry_sum(self):
        rng = np.random.default_rng(23)
        for _ in range(20):
            t = toep(rng.standard_normal(8))
            dense = t.dense()
            assert fro_norm(t) ** 2 == pytest.approx((dense**2).sum(), rel=1e-12)


class TestCosinePolynomial:
    def test_constant(self):
        for x in (0.0, 0.3, 1.0):
            assert l_func([1, 0, 0], x) == pytest.approx(1.0)

    def test_single_mode(self):
        assert l_func([0, 1], 0.0) == pytest.approx(2.0)
        assert l_func([0, 1], 0.5) == pytest.approx(-2.0)

    def test_quarter_period(self):
        assert l_func([1, 1], 0.25) == pytest.approx(1.0, abs=1e-12)

    def test_domain(self):
        with pytest.raises(DomainError):
            l_func([1, 0], 1.5)

    def test_sup_delta_generator(self):
        a = np.zeros(5)
        a[0] = 1.0
        assert sup_l(a, 8 * 25) == 1.0

    def test_sup_dominates_op_norm(self):
        e = np.array([2.0, 1.0, 0.0])
        assert sup_l(e, 8 * 9) >= op_norm(toep(e))

    def test_sup_dominates_op_norm_random(self):
        rng = np.random.default_rng(29)
        for _ in range(100):
            d = int(rng.integers(1, 33))
            e = rng.standard_normal(d) * rng.uniform(0.1, 10)
            assert op_norm(toep(e)) <= sup_l(e, 8 * d * d) + 1e-9

    def test_sup_grid_too_small(self):
        with pytest.raises(InvalidArgumentError):
            sup_l(np.ones(4), 100)


class TestBestRankK:
    def test_full_rank_roundtrip(self):
        rng = np.random.default_rng(31)
        t = toep(rng.standard_normal(6))
        np.testing.assert_allclose(best_rank_k(t, 6), t.dense(), atol=1e-10)

    def test_identity_rank_one(self):
        t = toep([1.0, 0.0, 0.0])
        approx = best_rank_k(t, 1)
        assert op_norm(t.dense() - approx) == pytest.approx(1.0, abs=1e-12)

    def test_exact_rank_recovery(self):
        rng = np.random.default_rng(37)
        t = toeplitz_from_modes(rng.uniform(0, 1, 3), np.abs(rng.standard_normal(3)), 12)
        resid = t.dense() - best_rank_k(t, 6)
        assert fro_norm(resid) <= 1e-8 * fro_norm(t)

    def test_bad_k(self):
        with pytest.raises(InvalidArgumentError):
            best_rank_k(toep([1.0, 0.0]), 3)

    def test_minimizes_over_smaller_rank(self):
        # truncation error decreases as k grows
        rng = np.random.default_rng(41)
        t = toep(rng.standard_normal(8))
        errs = [fro_norm(t.dense() - best_rank_k(t, k)) for k in range(1, 9)]
        assert all(a >= b - 1e-12 for a, b in zip(errs, errs[1:]))
