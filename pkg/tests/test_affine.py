import json

import pytest

from derangements.affine import (
    AffineElement, AffineError, AffinePair, affine_corpus, affine_derangements, affine_order_set,
    agl1, agl2, analyze_affine, as_permutation_group, asl2, centralizer_decomposition,
    commutator_image, exponent_criterion, is_frobenius, is_rprime_semiregular, star_conditions,
    matrix_perm, reducible_corpus, sl2_natural, stabilizer_intersection, star_property_affine,
    sylow_reduction, two_point_stabilizer_check,
)
from derangements.analysis import derangement_set, star_property
from derangements.gf import gf, mat, mat_mul, vec_mat
from derangements.perm import CapExceeded

CORPUS = affine_corpus()
SMALL = [p for p in CORPUS if p.degree <= 81]


def test_corpus_size():
    assert len(CORPUS) >= 8


# -- elements and multiplication ---------------------------------------------------

def test_product_law_matches_action():
    pair = asl2(3)
    F = pair.field
    hs = pair.h_elements[:6]
    vs = list(pair.vectors())[:5]
    for t1 in hs:
        for t2 in hs:
            for v1 in vs:
                for v2 in vs:
                    a, b = AffineElement(t1, v1, 3), AffineElement(t2, v2, 3)
                    ab = a * b
                    assert ab.t == mat_mul(t1, t2, F)
                    for x in vs:
                        assert ab.apply(x) == b.apply(a.apply(x))


def test_point_indexing_base_p():
    pair = asl2(3)
    assert pair.index((1, 0)) == 1 and pair.index((0, 1)) == 3
    assert [pair.index(v) for v in pair.vectors()] == list(range(9))


# -- constructors ---------------------------------------------------------------------

def test_constructors():
    a = asl2(3)
    assert a.h_order() == 24 and a.degree == 9
    g = as_permutation_group(a)
    assert g.order() == 216 and g.is_primitive()
    assert as_permutation_group(agl1(5)).transitivity_degree() == 2
    assert sl2_natural(4).h_order() == 60 and sl2_natural(4).degree == 16
    s4 = as_permutation_group(asl2(2))
    assert s4.order() == 24 and s4.transitivity_degree() == 4
    s3 = as_permutation_group(agl1(3))
    assert s3.order() == 6 and s3.degree == 3


def test_invertibility_checked():
    with pytest.raises(AffineError):
        AffinePair(3, 2, [mat([[1, 1], [1, 1]])])


# -- [V, t] --------------------------------------------------------------------------------

def test_commutator_image_examples():
    pair = asl2(3)
    ident = mat([[1, 0], [0, 1]])
    assert commutator_image(ident, pair) == []
    order4 = next(t for t in pair.h_elements if pair.matrix_order(t) == 4)
    assert len(commutator_image(order4, pair)) == 2
    assert len(commutator_image(mat([[1, 1], [0, 1]]), pair)) == 1


def test_commutator_image_rejects_outsider():
    with pytest.raises(AffineError):
        commutator_image(mat([[1, 0], [0, 2]]), asl2(3))


# -- derangements ------------------------------------------------------------------------------

@pytest.mark.parametrize("build, expected", [(lambda: asl2(3), [3]), (lambda: asl2(2), [2, 4]),
                                             (lambda: agl1(7), [7])])
def test_affine_order_set_examples(build, expected):
    assert affine_order_set(build()) == expected


@pytest.mark.parametrize("pair", SMALL, ids=lambda p: p.name)
def test_affine_derangements_elementwise(pair):
    g = as_permutation_group(pair)
    direct = {x.images for x in derangement_set(g)}
    formula = {matrix_perm(pair, d.t, d.v).images for d in affine_derangements(pair)}
    assert formula == direct


def test_affine_cap(monkeypatch):
    monkeypatch.setenv("DERANGEMENTS_MAX_ORDER", "100")
    with pytest.raises(CapExceeded):
        list(affine_derangements(asl2(3)))


# -- semiregularity and stabilizers --------------------------------------------------------

def test_semiregular_examples():
    assert is_rprime_semiregular(asl2(3), 3).holds
    res = is_rprime_semiregular(agl2(3), 3)
    assert not res.holds
    w = res.witness
    F = gf(3)
    fixed = [v for v in [(1, 0), (0, 1), (1, 1), (1, 2)] if vec_mat(v, w, F) == v]
    assert fixed and agl2(3).matrix_order(w) % 3 != 0
    assert is_rprime_semiregular(sl2_natural(4), 2).holds


def test_two_point_stabilizer_examples():
    assert two_point_stabilizer_check(asl2(3), 3)
    assert not two_point_stabilizer_check(agl2(3), 3)
    assert two_point_stabilizer_check(agl1(7), 7)


def test_star_affine_examples():
    s = star_property_affine(asl2(3))
    assert s.holds and s.r == 3
    assert not star_property_affine(agl2(3)).holds
    s4 = star_property_affine(sl2_natural(4))
    assert s4.holds and s4.r == 2


def test_reducible_rejected():
    for pair in reducible_corpus():
        assert not pair.is_irreducible()
        with pytest.raises(AffineError):
            star_property_affine(pair)


@pytest.mark.parametrize("pair", CORPUS + reducible_corpus(), ids=lambda p: p.name)
def test_star_conditions(pair):
    eq = star_conditions(pair)
    assert eq.agree, eq


@pytest.mark.parametrize("pair", SMALL, ids=lambda p: p.name)
def test_criterion_matches_permutation_level(pair):
    thm = star_property_affine(pair)
    direct = star_property(as_permutation_group(pair))
    assert (thm.holds, thm.r) == (direct.holds, direct.r)


# -- Sylow reduction and exponent criterion --------------------------------------------------

@pytest.mark.parametrize("pair", [p for p in CORPUS if star_property_affine(p).holds],
                         ids=lambda p: p.name)
def test_sylow_reduction(pair):
    red = sylow_reduction(pair)
    assert red.agrees


def test_sylow_reduction_examples():
    red = sylow_reduction(asl2(3))
    assert (red.k_order, red.p_order, red.coset_degree) == (3, 27, 9)
    assert red.order_set == [3]
    red5 = sylow_reduction(asl2(5))
    assert (red5.k_order, red5.p_order) == (5, 125) and red5.order_set == [5]
    red7 = sylow_reduction(agl1(7))
    assert red7.k_order == 1 and red7.order_set == [7]


def test_sylow_reduction_needs_star():
    with pytest.raises(AffineError):
        sylow_reduction(agl2(3))


@pytest.mark.parametrize("pair", CORPUS, ids=lambda p: p.name)
def test_exponent_criterion(pair):
    assert exponent_criterion(pair).agree


def test_exponent_examples():
    a3 = exponent_criterion(asl2(3))
    assert a3.all_derangements_order_r and a3.sylow_exponent == 3
    a2 = exponent_criterion(asl2(2))
    assert not a2.all_derangements_order_r and a2.sylow_exponent == 4
    a7 = exponent_criterion(agl1(7))
    assert a7.all_derangements_order_r and a7.sylow_exponent == 7


# -- structural identities -------------------------------------------------------------

@pytest.mark.parametrize("pair", SMALL, ids=lambda p: p.name)
def test_centralizer_and_stabilizer_identities(pair):
    assert centralizer_decomposition(pair)
    assert stabilizer_intersection(pair)


def test_frobenius():
    assert is_frobenius(agl1(7))
    assert not is_frobenius(asl2(3))


# -- JSON ----------------------------------------------------------------------------------

def test_pair_json_round_trip():
    pair = asl2(3)
    back = AffinePair.from_json(json.loads(json.dumps(pair.to_json())))
    assert back.h_order() == 24 and back.k == 2


@pytest.mark.parametrize("bad, field", [
    ({"k": 2, "generators": [[[1, 0], [0, 1]]]}, "p"),
    ({"p": 3, "generators": [[[1, 0], [0, 1]]]}, "k"),
    ({"p": 3, "k": 2}, "generators"),
    ({"p": 3, "k": 2, "module_dim": 3, "generators": [[[1, 0], [0, 1]]]}, "module_dim"),
])
def test_pair_json_errors(bad, field):
    with pytest.raises(AffineError) as exc:
        AffinePair.from_json(bad)
    assert field in str(exc.value)


def test_report_fields():
    rep = analyze_affine(asl2(3)).to_json()
    assert rep["order_set"] == [3]
    assert rep["semiregular"] and rep["sylow_exponent"] == 3 and not rep["frobenius"]
    assert rep["star"] == {"holds": True, "r": 3}
