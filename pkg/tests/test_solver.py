import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chainfair import (
    ChainParams,
    ConvergenceError,
    DomainError,
    SolveOptions,
    closed_form_n4,
    contraction_check,
    fixed_point_solve,
    newton_solve,
    residual,
)

# FP iteration converges on this sub-grid; past alpha ~ 0.8 at larger n the
# map develops attracting period-2 cycles and fixed_point_solve raises.
FP_SAFE = [
    (n, a)
    for n in (1, 2, 3, 7, 20, 50)
    for a in (0.05, 0.3, 0.5, 0.7, 0.75)
]


class TestSolveOptions:
    def test_defaults(self):
        o = SolveOptions()
        assert o.tol == 1e-12 and o.max_iter is None and o.x0 is None

    @pytest.mark.parametrize("kw", [{"tol": 0.0}, {"tol": -1e-9}, {"max_iter": 0}])
    def test_invalid(self, kw):
        with pytest.raises(DomainError):
            SolveOptions(**kw)


class TestFixedPoint:
    def test_n1_is_alpha(self):
        np.testing.assert_allclose(fixed_point_solve(ChainParams(1, 0.7)), [0.7])

    def test_n2_scalar_equation(self):
        x = fixed_point_solve(ChainParams(2, 0.8))
        np.testing.assert_allclose(x, [4 / 9, 4 / 9], atol=1e-12)

    def test_n3_closed_form(self):
        x = fixed_point_solve(ChainParams(3, 0.5))
        assert x[0] == pytest.approx(0.41421356, abs=1e-8)
        assert x[1] == pytest.approx(0.17157288, abs=1e-8)

    def test_nonconvergence_carries_last_iterate(self):
        p = ChainParams(50, 0.9)
        with pytest.raises(ConvergenceError) as exc:
            fixed_point_solve(p, SolveOptions(max_iter=500))
        err = exc.value
        assert err.last is not None and len(err.last) == 50
        assert err.residual == pytest.approx(residual(p, err.last))

    def test_period_two_cells_raise(self):
        # flip-bifurcated cell: iterates settle on a 2-cycle, never the root
        with pytest.raises(ConvergenceError):
            fixed_point_solve(ChainParams(12, 0.95), SolveOptions(max_iter=300_000))

    def test_deterministic(self):
        a = fixed_point_solve(ChainParams(9, 0.6))
        b = fixed_point_solve(ChainParams(9, 0.6))
        assert np.array_equal(a, b)


class TestNewton:
    @pytest.mark.parametrize("alpha", [0.05 * k for k in range(1, 20)])
    def test_matches_n4_closed_form(self, alpha):
        x = newton_solve(ChainParams(4, alpha))
        assert np.max(np.abs(x - closed_form_n4(alpha))) <= 1e-10

    def test_n1(self):
        np.testing.assert_allclose(newton_solve(ChainParams(1, 0.3)), [0.3])

    def test_flat_center_large_n(self):
        x = newton_solve(ChainParams(2000, 0.75))
        assert abs(x[1000] - 1 / 3) <= 1e-2

    def test_handles_10e5(self):
        x = newton_solve(ChainParams(100_000, 0.6))
        p = ChainParams(100_000, 0.6)
        assert residual(p, x) <= 1e-12

    def test_x0_honored(self):
        p = ChainParams(5, 0.5)
        x_ref = newton_solve(p)
        x = newton_solve(p, SolveOptions(x0=x_ref))
        assert residual(p, x) <= 1e-12

    def test_x0_wrong_length(self):
        with pytest.raises(DomainError):
            newton_solve(ChainParams(5, 0.5), SolveOptions(x0=np.zeros(4)))

    @pytest.mark.parametrize(("n", "alpha"), FP_SAFE)
    def test_agrees_with_fixed_point(self, n, alpha):
        p = ChainParams(n, alpha)
        xf = fixed_point_solve(p)
        xn = newton_solve(p)
        assert np.max(np.abs(xf - xn)) <= 10 * 1e-12

    @given(n=st.integers(1, 40), alpha=st.floats(0.02, 0.97))
    @settings(max_examples=40, deadline=None)
    def test_root_quality_properties(self, n, alpha):
        p = ChainParams(n, alpha)
        x = newton_solve(p)
        assert residual(p, x) <= 1e-11
        assert np.max(np.abs(x - x[::-1])) <= 1e-12
        assert np.all(x > 0.0) and np.all(x <= alpha + 1e-15)

    @pytest.mark.parametrize("n", [5, 9, 15])
    @pytest.mark.parametrize("alpha", [0.8, 0.9])
    def test_odd_chain_parity_structure(self, n, alpha):
        x = newton_solve(ChainParams(n, alpha))
        for i in range(0, n - 1, 2):
            assert x[i] > x[i + 1]
            if i + 2 < n:
                assert x[i + 2] > x[i + 1]


class TestContractionCheck:
    @pytest.mark.parametrize("alpha", [0.1, 0.5, 0.9])
    def test_all_ones_always_domain_ok(self, alpha):
        cert = contraction_check(ChainParams(4, alpha), np.ones(4))
        assert cert.domain_ok
        assert cert.norm_bound == pytest.approx(alpha)
        assert cert.contractive

    def test_far_point_fails_domain(self):
        cert = contraction_check(ChainParams(3, 0.75), [0.30, 0.5, 0.5])
        assert not cert.domain_ok

    def test_solution_contractive_small_alpha(self):
        p = ChainParams(3, 0.5)
        cert = contraction_check(p, newton_solve(p))
        assert cert.contractive and cert.norm_bound < 1.0

    def test_contractive_consistent_with_bound(self):
        cert = contraction_check(ChainParams(4, 0.9), np.zeros(4))
        assert cert.norm_bound == pytest.approx(1.8)
        assert not cert.contractive

    def test_n1_jacobian_vanishes(self):
        cert = contraction_check(ChainParams(1, 0.9), [0.4])
        assert cert.norm_bound == 0.0 and cert.contractive
