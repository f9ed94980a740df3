import pytest

from derangements import atlas
from derangements.analysis import star_property
from derangements.numtheory import prime_power
from derangements.perm import GroupError, coset_action

LINE_Q = [q for q in range(2, 65) if prime_power(q)]


@pytest.mark.parametrize("q", LINE_Q)
def test_line_orders_closed_form(q):
    for flavor in atlas.FLAVORS:
        if flavor == "PSL" and q < 4:
            continue
        g = atlas.projective_line_group(q, flavor)
        assert g.degree == q + 1
        assert g.order() == atlas.line_closed_order(q, flavor)


def test_line_closed_forms():
    assert atlas.line_closed_order(8, "PSL") == 504
    assert atlas.line_closed_order(7, "PGL") == 336
    assert atlas.line_closed_order(8, "GammaL") == 1512
    assert atlas.line_closed_order(9, "PSL") == 360


@pytest.mark.parametrize("q", [q for q in LINE_Q if q >= 4 and q <= 32])
def test_psl_line_two_transitive(q):
    g = atlas.projective_line_group(q)
    assert g.transitivity_degree(limit=2) >= 2


def test_pgl_sharply_three_transitive():
    g = atlas.projective_line_group(7, "PGL")
    assert g.transitivity_degree() == 3
    assert g.order() == 8 * 7 * 6


@pytest.mark.parametrize("q", atlas.PLANE_Q)
def test_plane_orders(q):
    g = atlas.projective_plane_group(q)
    assert g.degree == q * q + q + 1
    assert g.order() == atlas.plane_closed_order(q)
    assert g.transitivity_degree(limit=2) == 2


def test_plane_dual_same_group_order():
    for q in (2, 3):
        assert atlas.projective_plane_group(q, dual=True).order() == atlas.plane_closed_order(q)


def test_large_plane_needs_flag():
    with pytest.raises(GroupError):
        atlas.projective_plane_group(7)


def test_plane_points_normalized():
    from derangements.gf import gf
    pts = atlas.plane_points(gf(3))
    assert len(pts) == 13
    assert pts[0] == (1, 0, 0) and pts[-1] == (0, 0, 1)


@pytest.mark.parametrize("q, split, order", [(4, True, 6), (4, False, 10), (8, True, 14),
                                              (8, False, 18), (7, True, 6), (7, False, 8),
                                              (11, True, 10), (11, False, 12)])
def test_torus_normalizers(q, split, order):
    ca = atlas.torus_normalizer_cosets(q, "PSL", split)
    assert ca.subgroup.order() == order
    assert ca.degree * order == atlas.line_closed_order(q, "PSL")
    assert ca.induced.is_transitive()


def test_gammal_normalizer_orders():
    for split, order in ((True, 42), (False, 54)):
        ca = atlas.torus_normalizer_cosets(8, "GammaL", split)
        assert ca.subgroup.order() == order


def test_s4_in_l2_7():
    s4 = atlas.s4_in_l2_7()
    assert s4.order() == 24
    assert s4.is_subgroup_of(atlas.projective_line_group(7))
    assert coset_action(atlas.projective_line_group(7), s4.generators).degree == 7


def test_m11_validation(m11_12):
    assert m11_12.order() == 7920
    assert m11_12.transitivity_degree() == 3
    assert m11_12.point_stabilizer(0).order() == 660
    assert atlas.m11_degree11().transitivity_degree() == 4


def test_catalog_matches_construction():
    for entry in atlas.catalog():
        if "large" in entry.note:
            continue
        g = entry.construct()
        assert g.degree == entry.degree, entry.key
        assert g.order() == entry.order, entry.key
        s = star_property(g)
        assert s.r == entry.star_r, entry.key
        if entry.order_set is not None:
            assert s.order_set == entry.order_set, entry.key


def test_catalog_keys_unique_and_json():
    entries = atlas.catalog()
    keys = [e.key for e in entries]
    assert len(keys) == len(set(keys))
    js = atlas.find_entry("M11/L2(11)").to_json()
    assert js["degree"] == 12 and js["star"] == {"holds": True, "r": 2}


def test_build_action_names():
    assert atlas.build_action("L2", 8, "P1").order() == 504
    assert atlas.build_action("PGL2", 7, "P1").order() == 336
    assert atlas.build_action("GammaL2", 8, "D_split").degree == 36
    assert atlas.build_action("L3", 3, "P1").degree == 13
    assert atlas.build_action("M11", None, "L2(11)").degree == 12
    with pytest.raises((GroupError, KeyError)):
        atlas.build_action("L2", 8, "nonsense")
