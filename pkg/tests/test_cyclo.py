from fractions import Fraction

import pytest

from reflektor.cyclo import (field_ctx, root_of_v, sqrt_root, named_constant,
                             galois_norm, power_basis_coords, quad_pow,
                             quad_pow_closed, root_identity_suite,
                             norm_invertibility_suite, quad_power_suite,
                             classification_search)
from reflektor.upoly import v_poly, u_poly, euler_phi


def test_ctx_degrees():
    assert field_ctx(1).degree == 1
    assert field_ctx(5).degree == 4
    assert field_ctx(12).degree == 4


def test_zeta_has_right_order():
    ctx = field_ctx(7)
    z = ctx.zeta(1)
    p = ctx.one()
    for _ in range(7):
        p = p * z
    assert p == ctx.one()
    assert z ** 3 * z ** 4 == 1


def test_field_ops():
    ctx = field_ctx(5)
    z = ctx.zeta(1)
    a = z + z ** 4 + 2
    assert a * a.inverse() == 1
    assert (a - a).is_zero()
    assert ctx.from_fraction(Fraction(2, 3)) * 3 == 2


def test_root_of_v_kills_v():
    for r in (3, 4, 5, 7, 12):
        g = root_of_v(r, 1)
        assert v_poly(r).eval(g).is_zero()
    # but not u at a coprime-to-r denominator index
    assert not v_poly(7).eval(root_of_v(5, 1)).is_zero()


def test_root_of_v_validates_args():
    with pytest.raises(ValueError):
        root_of_v(2, 1)
    with pytest.raises(ValueError):
        root_of_v(6, 2)


def test_sqrt_root_squares_back():
    for r, k in ((5, 1), (5, 2), (7, 3), (9, 2)):
        s = sqrt_root(r, k)
        assert s * s == root_of_v(r, k).lift(s.ctx)


def test_tau():
    tau = named_constant("tau", 5)
    # tau = (3+sqrt5)/2 satisfies X^2 - 3X + 1
    assert tau * tau - 3 * tau + 1 == 0
    assert tau == root_of_v(5, 1)


def test_omega_and_zeta7_half():
    om = named_constant("omega", 3)
    assert om * om + om + 1 == 0
    ze = named_constant("zeta7_half", 7)
    assert ze * ze - ze + 2 == 0


def test_galois_norm_is_rational_and_multiplicative():
    g = root_of_v(7, 1)
    h = root_of_v(7, 2)
    assert galois_norm(g) == galois_norm(h) == 1
    assert galois_norm(root_of_v(10, 1)) == 25  # 10 = 2 * 5
    x = g + 3
    y = h - 1
    assert galois_norm(x * y) == galois_norm(x) * galois_norm(y)


def test_power_basis_coords():
    g = root_of_v(7, 1)
    dim = euler_phi(7) // 2
    coords = power_basis_coords(g * g + 2, g, dim)
    assert coords is not None
    acc = g.ctx.zero()
    p = g.ctx.one()
    for c in coords:
        acc = acc + p * g.ctx.from_fraction(c)
        p = p * g
    assert acc == g * g + 2


def test_quad_pow_matches_closed_form():
    ctx = field_ctx(5)
    phi = root_of_v(5, 1) - 2  # sqrt(5) shifted: phi = tau - 2
    for sign in (1, -1):
        for n in range(0, 12):
            assert quad_pow(phi, sign, n) == quad_pow_closed(phi, sign, n)


def test_root_identity_suite_small():
    res = root_identity_suite(12)
    assert res.passed, res.failures[:5]


def test_norm_invertibility_suite_small():
    res = norm_invertibility_suite(12)
    assert res.passed, res.failures[:5]


def test_quad_power_suite():
    res = quad_power_suite()
    assert res.passed, res.failures[:5]


def test_classification_bound_8():
    got = classification_search(8)
    assert got["product"] == [{"alpha": (4, 1), "beta": (4, 1),
                               "gamma": (3, 1)}]
    assert got["sum"] == [((3, 1), (3, 1), (4, 1)),
                          ((3, 1), (5, 1), (5, 2))]
    assert got["skipped"] == []
