"""End-to-end acceptance checks, one per verification suite.

Each test runs the corresponding full-profile suite (cached across the
module) and additionally pins a handful of hard expected values directly,
so a silently weakened suite cannot slip through.
"""

import pytest

from reflektor.cyclo import (field_ctx, named_constant, root_of_v,
                             classification_search)
from reflektor.engine import (closure, element_order, scalar_power_check,
                              is_unipotent, check_relation, center_order,
                              monomial_group_order)
from reflektor.identities import ALL_TAGS, check_identity
from reflektor.reflrep import preset, gnn3_rep
from reflektor.suites import SUITE_ORDER, run_suite
from reflektor.upoly import u_poly, v_poly, theta, prime_power_class

_CACHE = {}


def suite(suite_id):
    if suite_id not in _CACHE:
        _CACHE[suite_id] = run_suite(suite_id, "full")
    return _CACHE[suite_id]


def assert_green(res):
    assert res.passed, "failed cases: %s" % res.failures[:10]
    assert res.cases > 0
    assert not res.skipped


def test_identity_catalog_full_ranges():
    assert_green(suite("s1_identities"))
    # recurrences hold further out than the catalog default
    for tag in ("A1", "A2", "AR"):
        assert check_identity(tag, -50, 50).passed
    assert len(ALL_TAGS) >= 25


def test_factorization_and_integrality_to_200():
    assert_green(suite("s1_identities"))
    prod = u_poly(1)
    for d in range(2, 201):
        if 200 % d == 0:
            prod = prod * v_poly(d)
    assert prod == u_poly(200)
    assert all(v_poly(n).is_monic() for n in range(1, 201))


def test_theta_classification_to_500():
    for n in range(1, 501):
        assert theta(v_poly(n)) == prime_power_class(n)


def test_root_identities_including_sign_law():
    assert_green(suite("s1_roots"))
    # spot check of the sign law at (r, k) = (5, 2): sqrt(gamma) u_4(gamma)
    from reflektor.cyclo import sqrt_root, u_value_seq, u_at
    r, k = 5, 2
    s = sqrt_root(r, k)
    g = root_of_v(r, k).lift(s.ctx)
    seq = u_value_seq(g, r + 2)
    assert s * u_at(seq, r - 1) == (-1) ** (k - 1)


def test_norm_invertibility_certificates():
    assert_green(suite("s1_theta"))


def test_classification_search_bound_12():
    assert_green(suite("s1_classification"))
    got = classification_search(12)
    assert got["product"] == [{"alpha": (4, 1), "beta": (4, 1),
                               "gamma": (3, 1)}]
    assert got["sum"] == [((3, 1), (3, 1), (4, 1)),
                          ((3, 1), (5, 1), (5, 2))]
    assert got["skipped"] == [(5, 7, 11), (5, 9, 11), (7, 8, 11),
                              (7, 9, 11), (7, 10, 11), (7, 11, 12),
                              (8, 9, 11), (9, 10, 11)]


def test_symbolic_matrix_closed_forms():
    assert_green(suite("s2_matrices"))


def test_symbolic_C_catalog():
    assert_green(suite("s2_C"))


def test_symbolic_charpoly_catalog():
    assert_green(suite("s2_charpoly"))


def test_h3_presets():
    assert_green(suite("s3_h3"))
    tau = named_constant("tau", 5)
    for name in ("h3_coxeter", "h3_552", "h3_335", "h3_553a", "h3_553b",
                 "h3_555"):
        rep = preset(name)
        res = closure(rep.gens)
        assert res.order == 120
        assert center_order(res, rep.gens) == 2
    # the Coxeter-diagram preset: t^5 = -Id and theta = tau - 3
    rep = preset("h3_coxeter")
    assert scalar_power_check(rep.word([1, 2, 3]), 5) == -1
    th, _ = rep.theta_pair()
    assert th == tau - 3


def test_collapse_to_chain_groups():
    assert_green(suite("s3_cor9"))
    assert closure(preset("cor9_a3").gens).order == 24
    assert closure(preset("cor9_b3").gens).order == 48
    rep = preset("cor9_g2t")
    assert closure(rep.gens, cap=5000).cap_exceeded
    w = rep.word([1, 2, 3]) ** 2
    assert is_unipotent(w) and not w.is_identity()


def test_h4_presets_reach_14400():
    assert_green(suite("s3_h4"))
    assert closure(preset("h4_oracle").gens, store_elements=False).order \
        == 14400


def test_monomial_groups_match_oracle():
    assert_green(suite("s4_affine"))
    for p, n, expected in ((2, 3, 24), (3, 3, 54), (4, 3, 96),
                           (2, 4, 192), (3, 4, 648)):
        assert monomial_group_order(p, n) == expected
        rep = preset("gppn:%d:%d" % (p, n))
        assert closure(rep.gens, store_elements=False).order == expected


def test_gnn3_square_relation_and_orders():
    assert_green(suite("s4_gnn3"))
    for n in range(2, 7):
        rep = gnn3_rep(n, 1)
        assert closure(rep.gens, store_elements=False).order == 6 * n * n
        assert check_relation(rep.gens, [1, 2, 3], 2,
                              rhs_word=[2, 3, 1], rhs_exponent=2)
        assert check_relation(rep.gens, [1, 2, 3], 2 * n)


def test_g24_presets():
    assert_green(suite("s4_g24"))
    for name in ("g24_334", "g24_443", "g24_444"):
        rep = preset(name)
        assert closure(rep.gens, store_elements=False).order == 336
        assert element_order(rep.word([1, 2, 3])) == 14
        assert rep.delta() == 1
    # the quadratic satisfied by the first preset's cycle constant
    zeta = named_constant("zeta7_half", 7)
    a, b, l, m = preset("g24_334").edge_constants()
    assert l == -zeta
    assert l * l + l + 2 == 0


def test_g27_presets():
    assert_green(suite("s4_g27"))
    ctx = field_ctx(15)
    om = named_constant("omega", 15)
    tau = named_constant("tau", 15)
    expected = {"g27_a": (5, -om, 3 - tau), "g27_b": (4, om, ctx.one()),
                "g27_c": (5, -om, 3 - tau), "g27_d": (4, om * om, ctx.one()),
                "g27_e": (5, -om, 3 - tau), "g27_f": (4, om * om, ctx.one()),
                "g27_g": (5, -om * om, tau)}
    for name, (k, scalar, delta) in expected.items():
        rep = preset(name)
        assert closure(rep.gens, store_elements=False).order == 2160
        assert scalar_power_check(rep.word([1, 2, 3]), k) == scalar
        assert rep.delta() == delta


def test_cycle_collapse_matches_chain_target():
    assert_green(suite("s3_theorem6"))


def test_every_suite_id_exists_and_runs_quick():
    assert len(SUITE_ORDER) == 15
    for sid in SUITE_ORDER:
        res = run_suite(sid, "quick")
        assert res.passed, (sid, res.failures[:5])


def test_unknown_suite_and_profile():
    with pytest.raises(KeyError):
        run_suite("nope")
    with pytest.raises(KeyError):
        run_suite("s3_h3", "fastest")
