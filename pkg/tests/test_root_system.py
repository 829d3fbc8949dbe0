from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from radonflag import (IndexOutOfRange, InvalidCartan, NotARoot, RankMismatch, RootSystem, Weight,
                       build_root_system, cartan_matrix, pair, rho_nil, rho_of)
from radonflag.oracle import Oracle

from helpers import SMALL_TYPES, rationals, weights

POSITIVE_COUNTS = {"A1": 1, "A2": 3, "A3": 6, "A4": 10, "B2": 4, "B3": 9, "B4": 16, "C3": 9,
                   "C4": 16, "D4": 12, "D5": 20, "G2": 6, "F4": 24, "E6": 36, "E7": 63, "E8": 120}


def test_a2_positive_roots(A2):
    assert set(A2.positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_a1_positive_roots():
    assert build_root_system("A1").positive_roots == ((1,),)


def test_b2_has_four_positive_roots(B2):
    assert len(B2.positive_roots) == 4
    assert set(B2.positive_roots) == {(1, 0), (0, 1), (1, 1), (1, 2)}


@pytest.mark.parametrize("name,count", sorted(POSITIVE_COUNTS.items()))
def test_positive_root_counts(name, count):
    assert len(build_root_system(name).positive_roots) == count


@pytest.mark.parametrize("name", ["A3", "B3", "C3", "G2", "D4", "F4"])
def test_roots_agree_with_string_construction(name):
    rs = build_root_system(name)
    orc = Oracle(rs.cartan, cap=2_000)
    assert sorted(rs.positive_roots) == sorted(orc.positive)
    for beta in rs.positive_roots:
        assert list(rs.coroot(beta)) == list(orc.coroot_coeffs(beta))


def test_g2_long_and_short_roots():
    rs = build_root_system("G2")
    assert set(rs.positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_input_forms_agree():
    a = build_root_system("B3")
    assert build_root_system(("B", 3)) == a
    assert build_root_system({"series": "B", "rank": 3}) == a
    assert build_root_system({"cartan": cartan_matrix("B", 3)}) == a
    assert build_root_system(cartan_matrix("B", 3)) == a


def test_b_and_c_are_transposes():
    B, C = cartan_matrix("B", 4), cartan_matrix("C", 4)
    assert [list(r) for r in zip(*B)] == C


@pytest.mark.parametrize("bad", [
    [[2, -1], [0, 2]],          # asymmetric zero pattern
    [[2, 1], [1, 2]],           # positive off-diagonal
    [[1, -1], [-1, 2]],         # diagonal not 2
    [[2, -1, -1], [-1, 2, -1], [-1, -1, 2]],  # affine A2
    [[2, -4], [-1, 2]],         # infinite type
    [[2, -1]],                  # not square
])
def test_invalid_cartan(bad):
    with pytest.raises(InvalidCartan):
        RootSystem(bad)


@pytest.mark.parametrize("name", ["A0", "B1", "E5", "F3", "G3", "X2", "Q"])
def test_invalid_type_names(name):
    with pytest.raises(InvalidCartan):
        build_root_system(name)


def test_rho_of_examples(A2):
    assert rho_of(A2, A2.indices) == Weight([1, 1])
    assert rho_of(A2, {2}) == Weight([Fraction(-1, 2), 1])
    assert rho_of(A2, set()) == Weight([0, 0])


def test_rho_nil_examples(A2):
    assert rho_nil(A2, {2}) == Weight([Fraction(3, 2), 0])
    assert rho_nil(A2, set()) == A2.rho
    assert rho_nil(A2, {1, 2}) == Weight([0, 0])


def test_pair_examples(A2):
    assert pair(A2, A2.rho, (1, 1)) == 2
    lam = Weight([3, Fraction(-2, 7)])
    assert pair(A2, lam, (1, 0)) == 3
    assert pair(A2, lam, (0, 1)) == Fraction(-2, 7)
    for beta in A2.positive_roots:
        assert pair(A2, Weight([0, 0]), beta) == 0


def test_pair_errors(A2):
    with pytest.raises(NotARoot):
        pair(A2, A2.rho, (2, 1))
    with pytest.raises(NotARoot):
        pair(A2, A2.rho, (1, 0, 0))
    with pytest.raises(RankMismatch):
        pair(A2, Weight([1]), (1, 0))


def test_index_out_of_range(A2):
    with pytest.raises(IndexOutOfRange):
        rho_of(A2, {3})
    with pytest.raises(IndexOutOfRange):
        A2.simple_root(0)


def test_weight_rejects_floats():
    with pytest.raises(TypeError):
        Weight([0.5, 1])


def test_weight_arithmetic_and_repr():
    a = Weight([1, "1/2"])
    assert a + a == Weight([2, 1])
    assert a - a == Weight.zero(2)
    assert -a == Weight([-1, Fraction(-1, 2)])
    assert 2 * a == Weight([2, 1])
    assert not a.is_integral() and (2 * a).is_integral()
    assert repr(a) == "Weight(1, 1/2)"


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_rho_is_half_sum_and_pairs_to_one(name):
    rs = build_root_system(name)
    assert rho_of(rs, rs.indices) == rs.rho
    for i in rs.indices:
        assert pair(rs, rs.rho, rs.simple_root(i)) == 1


@pytest.mark.parametrize("name", SMALL_TYPES)
def test_simple_root_weight_is_cartan_column(name):
    rs = build_root_system(name)
    for j in rs.indices:
        assert rs.root_weight(rs.simple_root(j)) == Weight([row[j - 1] for row in rs.cartan])


@given(st.sampled_from(SMALL_TYPES).flatmap(
    lambda n: st.tuples(st.just(n), weights(build_root_system(n).rank),
                        weights(build_root_system(n).rank), rationals())))
def test_pair_is_linear(data):
    name, lam, mu, c = data
    rs = build_root_system(name)
    for beta in rs.positive_roots:
        assert pair(rs, lam + mu * c, beta) == pair(rs, lam, beta) + c * pair(rs, mu, beta)


@given(st.sampled_from(SMALL_TYPES), st.data())
def test_rho_of_pairs_to_one_on_its_simple_roots(name, data):
    rs = build_root_system(name)
    K = data.draw(st.sets(st.sampled_from(sorted(rs.indices))))
    rK = rho_of(rs, K)
    for i in K:
        assert pair(rs, rK, rs.simple_root(i)) == 1
    rn = rho_nil(rs, K)
    assert all(rn[i - 1] == 0 for i in K)
