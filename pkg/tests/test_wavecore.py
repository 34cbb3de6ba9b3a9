import cmath
import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from zvortex import (
    CParam,
    DomainError,
    NormalizabilityKind,
    cauchy_formula,
    check_cauchy_riemann,
    contour_integral,
    d2psi_dc2,
    dpsi_dc,
    eval_psi,
    laplace_residual,
    normalizability,
    partials_uv,
)

E = math.e

z_values = st.floats(min_value=0.5, max_value=2.0)
xy_values = st.floats(min_value=-2.0, max_value=2.0)


def fd_dpsi_dc(z, c, h=1e-6):
    # independent central difference over the complex exponent
    px = eval_psi(z, CParam(c.x + h, c.y)).as_complex()
    mx = eval_psi(z, CParam(c.x - h, c.y)).as_complex()
    return (px - mx) / (2 * h)


class TestEvalPsi:
    def test_z_one_is_unity(self):
        w = eval_psi(1.0, CParam(3.7, -1.2))
        assert w.u == 1.0 and w.v == 0.0

    def test_real_square_root(self):
        w = eval_psi(4.0, CParam(0.5, 0.0))
        assert w.u == pytest.approx(2.0, abs=1e-14)
        assert w.v == 0.0

    def test_e_to_one_plus_two_i(self):
        # frozen from an arbitrary-precision exp(c ln z) oracle
        w = eval_psi(E, CParam(1.0, 2.0))
        assert w.u == pytest.approx(-1.13120438376, abs=1e-10)
        assert w.v == pytest.approx(2.47172667200, abs=1e-10)

    def test_rejects_nonpositive_z(self):
        with pytest.raises(DomainError):
            eval_psi(0.0, CParam(1.0, 0.0))
        with pytest.raises(DomainError):
            eval_psi(-2.0, CParam(1.0, 0.0))

    @given(z=z_values, x=xy_values, y=xy_values)
    def test_magnitude_is_z_to_x(self, z, x, y):
        w = eval_psi(z, CParam(x, y))
        assert w.magnitude() == pytest.approx(z ** x, rel=1e-12)

    @given(z=z_values, x=xy_values)
    def test_real_exponent_gives_real_value(self, z, x):
        assert eval_psi(z, CParam(x, 0.0)).v == 0.0


class TestPartials:
    def test_vanish_at_z_one(self):
        assert partials_uv(1.0, CParam(1.0, 2.0)) == (0.0, 0.0, 0.0, 0.0)

    def test_against_finite_differences(self):
        # frozen from a central-difference oracle of eval_psi, step 1e-6
        du_dx, dv_dy, du_dy, dv_dx = partials_uv(E, CParam(1.0, 2.0))
        assert du_dx == pytest.approx(-1.131204, abs=1e-6)
        assert dv_dx == pytest.approx(2.471727, abs=1e-6)
        fd = fd_dpsi_dc(E, CParam(1.0, 2.0))
        assert du_dx == pytest.approx(fd.real, abs=1e-9)
        assert dv_dx == pytest.approx(fd.imag, abs=1e-9)

    @given(z=z_values, x=xy_values, y=xy_values)
    def test_cauchy_riemann_exact(self, z, x, y):
        du_dx, dv_dy, du_dy, dv_dx = partials_uv(z, CParam(x, y))
        assert du_dx == dv_dy
        assert du_dy == -dv_dx


class TestCauchyRiemann:
    def test_trivial_at_z_one(self):
        r1, r2 = check_cauchy_riemann(1.0, CParam(1.0, 2.0), 1e-5)
        assert r1 < 1e-10 and r2 < 1e-10

    @pytest.mark.parametrize("z,c", [(2.0, CParam(1.0, 2.0)),
                                     (0.5, CParam(-1.0, 3.0))])
    def test_residual_is_discretization_noise(self, z, c):
        r1, r2 = check_cauchy_riemann(z, c, 1e-5)
        assert r1 < 1e-8 and r2 < 1e-8

    def test_second_order_in_h(self):
        # residual should drop ~4x when h halves
        for z in (0.5, 2.0):
            c = CParam(1.5, -1.0)
            coarse = max(check_cauchy_riemann(z, c, 2e-3))
            fine = max(check_cauchy_riemann(z, c, 1e-3))
            assert coarse / fine >= 3.5

    def test_step_bounds(self):
        with pytest.raises(DomainError):
            check_cauchy_riemann(2.0, CParam(1.0, 2.0), 0.5)


class TestDerivativesInC:
    def test_zero_at_z_one(self):
        assert dpsi_dc(1.0, CParam(1.0, 2.0)) == d2psi_dc2(1.0, CParam(0.3, 0.4))

    def test_identity_at_z_e(self):
        c = CParam(1.0, 2.0)
        psi = eval_psi(E, c)
        assert dpsi_dc(E, c).u == pytest.approx(psi.u, rel=1e-12)
        assert d2psi_dc2(E, c).v == pytest.approx(psi.v, rel=1e-12)

    def test_matches_finite_difference(self):
        c = CParam(1.0, 2.0)
        d = dpsi_dc(2.0, c).as_complex()
        assert abs(d - fd_dpsi_dc(2.0, c)) < 1e-9
        # second derivative vs second-order stencil
        h = 1e-4
        pp = eval_psi(2.0, CParam(c.x + h, c.y)).as_complex()
        mm = eval_psi(2.0, CParam(c.x - h, c.y)).as_complex()
        mid = eval_psi(2.0, c).as_complex()
        fd2 = (pp - 2 * mid + mm) / h ** 2
        assert abs(d2psi_dc2(2.0, c).as_complex() - fd2) < 1e-6

    @given(z=z_values, x=xy_values, y=xy_values)
    @settings(max_examples=50)
    def test_first_derivative_scaling(self, z, x, y):
        c = CParam(x, y)
        expect = math.log(z) * eval_psi(z, c).as_complex()
        got = dpsi_dc(z, c).as_complex()
        assert abs(got - expect) <= 1e-12 * max(1.0, abs(expect))


class TestLaplace:
    def test_trivial_at_z_one(self):
        ru, rv = laplace_residual(1.0, CParam(1.0, 2.0), 1e-4)
        assert ru < 1e-12 and rv < 1e-12

    @pytest.mark.parametrize("z,c", [(2.0, CParam(1.0, 2.0)),
                                     (0.5, CParam(2.0, -1.0))])
    def test_harmonic_components(self, z, c):
        ru, rv = laplace_residual(z, c, 1e-4)
        scale = z ** c.x
        assert ru < 1e-6 * scale and rv < 1e-6 * scale


class TestContour:
    def test_entire_function_integrates_to_zero(self):
        res = contour_integral(2.0, CParam(1.0, 2.0), 1.0, 1024)
        max_psi = 2.0 ** 2.0  # |psi| = z^x maxes at x = center.x + radius
        assert res.value.magnitude() < 1e-10 * max_psi
        assert not res.accuracy_warning

    def test_z_one_constant_integrand(self):
        res = contour_integral(1.0, CParam(0.0, 0.0), 2.0, 256)
        assert res.value.magnitude() < 1e-13

    def test_large_contour(self):
        res = contour_integral(0.7, CParam(0.0, 0.0), 2.0, 2048)
        max_psi = 0.7 ** -2.0
        assert res.value.magnitude() < 1e-10 * max_psi

    def test_accuracy_warning_for_coarse_contour(self):
        assert contour_integral(2.0, CParam(0.0, 0.0), 1.0, 32).accuracy_warning

    def test_quadratic_convergence_or_better(self):
        # spectrally accurate before hitting the machine floor
        coarse = contour_integral(3.0, CParam(0.0, 0.0), 2.0, 8).value.magnitude()
        fine = contour_integral(3.0, CParam(0.0, 0.0), 2.0, 16).value.magnitude()
        assert fine < coarse / 4.0


class TestCauchyFormula:
    def test_reproduces_eval_psi(self):
        a = CParam(1.0, 2.0)
        got = cauchy_formula(2.0, a, CParam(1.0, 2.0), 1.0, 2048).as_complex()
        want = eval_psi(2.0, a).as_complex()
        assert abs(got - want) / abs(want) < 1e-8

    def test_z_one_gives_unity(self):
        got = cauchy_formula(1.0, CParam(0.3, 0.1), CParam(0.0, 0.0), 1.0, 512)
        assert got.u == pytest.approx(1.0, abs=1e-10)
        assert got.v == pytest.approx(0.0, abs=1e-10)

    def test_origin_value_of_any_z(self):
        got = cauchy_formula(E, CParam(0.0, 0.0), CParam(0.0, 0.0), 1.5, 4096)
        assert got.u == pytest.approx(1.0, abs=1e-10)
        assert got.v == pytest.approx(0.0, abs=1e-10)

    def test_point_outside_contour_rejected(self):
        with pytest.raises(DomainError):
            cauchy_formula(2.0, CParam(2.0, 0.0), CParam(0.0, 0.0), 1.0, 512)
        with pytest.raises(DomainError):
            cauchy_formula(2.0, CParam(1.0, 0.0), CParam(0.0, 0.0), 1.0, 512)


class TestNormalizability:
    @pytest.mark.parametrize("z,x,kind", [
        (0.5, 1.0, NormalizabilityKind.HALF_LINE_CONVERGENT),
        (2.0, -1.0, NormalizabilityKind.HALF_LINE_CONVERGENT),
        (2.0, 1.0, NormalizabilityKind.RESTRICTED),
        (0.5, -1.0, NormalizabilityKind.RESTRICTED),
        (1.0, 1.0, NormalizabilityKind.RESTRICTED),
    ])
    def test_classification(self, z, x, kind):
        assert normalizability(z, x).kind is kind

    def test_rejects_nonpositive_z(self):
        with pytest.raises(DomainError):
            normalizability(-1.0, 1.0)
