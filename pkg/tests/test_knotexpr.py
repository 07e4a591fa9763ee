"""Knot expression trees, the text grammar, and the certification logic."""

from math import gcd

import pytest
from hypothesis import given, strategies as st

from lspaceknots import (
    Algebraicity,
    Cable,
    ConstraintError,
    IntPolynomial,
    LSpaceStatus,
    NotIteratedTorus,
    ParseError,
    PRETZEL_P237,
    Torus,
    UNKNOT,
    alexander,
    cable,
    cable_alexander,
    certify_lspace,
    classify_algebraic,
    combination,
    explicit_alexander,
    genus,
    jfamily,
    parse,
    torus,
    torus_alexander,
    tower,
    unparse,
)

P = IntPolynomial.from_coeffs


# --- construction and normalization ---------------------------------------


def test_torus_indices_are_sorted():
    assert torus(7, 3) == torus(3, 7)


def test_torus_with_index_one_is_unknot():
    assert torus(1, 5) == UNKNOT
    assert torus(9, 1) == UNKNOT


def test_torus_rejects_bad_indices():
    with pytest.raises(ConstraintError):
        torus(0, 3)
    with pytest.raises(ConstraintError):
        torus(4, 6)


def test_cable_p_one_collapses():
    assert cable(torus(2, 3), 1, 9) == torus(2, 3)


def test_cable_of_unknot_is_torus():
    assert cable(UNKNOT, 3, 5) == torus(3, 5)


def test_cable_node_requires_p_at_least_two():
    with pytest.raises(ConstraintError):
        Cable(torus(2, 3), 1, 5)
    with pytest.raises(ConstraintError):
        Cable(UNKNOT, 3, 5)


def test_cable_rejects_common_factor():
    with pytest.raises(ConstraintError):
        cable(torus(2, 3), 4, 6)


def test_jfamily_is_a_trefoil_cable():
    assert jfamily(3) == cable(torus(2, 3), 3, 5)
    with pytest.raises(ConstraintError):
        jfamily(2)


def test_explicit_alexander_validates_shape():
    explicit_alexander(P([1, -1, 1]))
    with pytest.raises(Exception):
        explicit_alexander(P([1, 1]))


# --- grammar ----------------------------------------------------------------


def test_parse_single_torus():
    assert parse("T(3,7)").items() == ((torus(3, 7), 1),)


def test_parse_combination():
    comb = parse("2*T(3,4) - T(3,7)")
    assert dict(comb.items()) == {torus(3, 4): 2, torus(3, 7): -1}


def test_parse_cable_equals_jfamily():
    assert parse("C(T(2,3);3,5)") == parse("J(3)")


def test_parse_whitespace_insensitive():
    assert parse(" 2 * T( 3 , 4 )  -  J( 3 ) ") == parse("2*T(3,4)-J(3)")


def test_parse_leading_minus():
    assert dict(parse("-T(2,3)").items()) == {torus(2, 3): -1}
    assert dict(parse("-2*T(2,3)").items()) == {torus(2, 3): -2}


def test_parse_merges_and_drops():
    assert parse("T(2,3) - T(2,3)").items() == ()
    assert dict(parse("T(2,3) + 2*T(2,3)").items()) == {torus(2, 3): 3}


def test_parse_unknot_and_pretzel():
    assert parse("U").items() == ((UNKNOT, 1),)
    assert parse("P237").items() == ((PRETZEL_P237, 1),)


def test_parse_explicit_alexander():
    comb = parse("alex[1,-1,1]")
    assert comb.items() == ((explicit_alexander(P([1, -1, 1])), 1),)


def test_parse_error_offsets():
    with pytest.raises(ParseError) as info:
        parse("T(3;7)")
    assert info.value.position == 3
    with pytest.raises(ParseError) as info:
        parse("T(2,3) % U")
    assert info.value.position == 7


def test_parse_constraint_errors():
    with pytest.raises(ConstraintError):
        parse("T(4,6)")
    with pytest.raises(ConstraintError):
        parse("J(2)")
    with pytest.raises(ConstraintError):
        parse("T(0,1)")


def _coprime_pairs(lo, hi):
    return st.tuples(st.integers(lo, hi), st.integers(lo, hi)).filter(
        lambda pq: gcd(pq[0], pq[1]) == 1 and pq[0] != pq[1]
    )


exprs = st.one_of(
    _coprime_pairs(2, 9).map(lambda pq: torus(*pq)),
    st.integers(3, 7).map(jfamily),
    st.just(PRETZEL_P237),
    st.just(UNKNOT),
    _coprime_pairs(2, 5).map(lambda pq: explicit_alexander(torus_alexander(*pq))),
)
combos = (
    st.lists(st.tuples(exprs, st.integers(-3, 3).filter(bool)), min_size=1, max_size=4)
    .map(combination)
    .filter(len)  # the empty combination has no grammar form
)


@given(combos)
def test_parse_unparse_roundtrip(comb):
    assert parse(unparse(comb)) == comb


# --- Alexander polynomials and genus ---------------------------------------


def test_alexander_of_torus():
    assert alexander(torus(3, 7)) == torus_alexander(3, 7)


def test_alexander_of_pretzel():
    assert alexander(PRETZEL_P237) == P([1, -1, 0, 1, -1, 1, -1, 1, 0, -1, 1])


def test_alexander_of_jfamily_is_cable_product():
    assert alexander(jfamily(3)) == cable_alexander(torus_alexander(2, 3), 3, 5)


def test_genus_examples():
    assert genus(torus(3, 7)) == 6
    assert genus(jfamily(3)) == 7
    assert genus(UNKNOT) == 0


@given(
    _coprime_pairs(2, 6),
    _coprime_pairs(2, 5),
)
def test_cable_genus_formula(inner_pq, cable_pq):
    inner = torus(*inner_pq)
    p, q = cable_pq
    expected = p * genus(inner) + (p - 1) * (q - 1) // 2
    assert genus(Cable(inner, p, q)) == expected


# --- certification and the index criterion ---------------------------------


def test_certify_torus_and_pretzel():
    assert certify_lspace(torus(3, 7)).status is LSpaceStatus.CERTIFIED
    assert certify_lspace(UNKNOT).status is LSpaceStatus.CERTIFIED
    assert certify_lspace(PRETZEL_P237).status is LSpaceStatus.CERTIFIED


def test_certify_cable_bound():
    assert certify_lspace(cable(torus(2, 3), 2, 3)).status is LSpaceStatus.CERTIFIED
    rejected = certify_lspace(Cable(torus(2, 3), 2, 1))
    assert rejected.status is LSpaceStatus.NOT_LSPACE
    assert "q=1" in rejected.reason


@given(st.integers(3, 20))
def test_certify_jfamily(k):
    assert certify_lspace(jfamily(k)).status is LSpaceStatus.CERTIFIED


def test_certify_candidate_accepts_valid_polynomial():
    cert = certify_lspace(explicit_alexander(torus_alexander(3, 7)))
    assert cert.status is LSpaceStatus.CANDIDATE


def test_certify_candidate_rejects_duality_failure():
    cert = certify_lspace(explicit_alexander(P([1, -1, 0, 0, 1])))
    assert cert.status is LSpaceStatus.NOT_LSPACE


def test_certify_candidate_rejects_growth_failure():
    # palindromic and alternating, but 3 members below 4: 1 - t + t^2 - t^4 + t^6 - t^7 + t^8
    cert = certify_lspace(explicit_alexander(P([1, -1, 1, 0, -1, 0, 1, -1, 1])))
    assert cert.status is LSpaceStatus.NOT_LSPACE


def test_certify_candidate_rejects_alpha1_bigger_than_one():
    cert = certify_lspace(explicit_alexander(P([1, 0, -1, 0, 1])))
    assert cert.status is LSpaceStatus.NOT_LSPACE


def test_classify_trefoil_cables():
    assert classify_algebraic(cable(torus(2, 3), 2, 13)) is Algebraicity.ALGEBRAIC
    assert classify_algebraic(cable(torus(2, 3), 2, 11)) is Algebraicity.NOT_ALGEBRAIC


@given(st.integers(3, 20))
def test_classify_jfamily_never_algebraic(k):
    assert classify_algebraic(jfamily(k)) is Algebraicity.NOT_ALGEBRAIC


def test_classify_non_towers_are_unknown():
    assert classify_algebraic(PRETZEL_P237) is Algebraicity.UNKNOWN
    assert classify_algebraic(explicit_alexander(P([1, -1, 1]))) is Algebraicity.UNKNOWN


def test_tower_of_nested_cables():
    knot = Cable(Cable(torus(2, 3), 2, 13), 3, 100)
    assert tower(knot) == [(2, 3), (2, 13), (3, 100)]
    with pytest.raises(NotIteratedTorus):
        tower(PRETZEL_P237)


@given(_coprime_pairs(2, 5), st.integers(2, 4), st.integers(1, 120))
def test_algebraic_towers_are_certified(inner_pq, p, q):
    if gcd(p, q) != 1:
        return
    knot = cable(torus(*inner_pq), p, q)
    if classify_algebraic(knot) is Algebraicity.ALGEBRAIC:
        assert certify_lspace(knot).status is LSpaceStatus.CERTIFIED
