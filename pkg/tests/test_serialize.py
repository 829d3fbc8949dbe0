import json

import pytest
from hypothesis import given, strategies as st

from radonflag import (ParseError, Weight, annihilator_label, build_root_system, check_equivalence,
                       check_main_theorem2, mu_for_untwisted, transport, verify_suite)
from radonflag import serialize as ser
from radonflag.parabolic import bh_factorize, condition_star_triples

from helpers import SMALL_TYPES, group, weights


def _instances():
    def pick(name):
        rs, elems = group(name)
        ts = list(condition_star_triples(rs, elems))
        return st.sampled_from(ts).flatmap(
            lambda t: st.tuples(st.just(rs), st.just(t), weights(rs.rank, zero_on=t[1])))
    return st.sampled_from(SMALL_TYPES).flatmap(pick)


def through_text(doc):
    return json.loads(json.dumps(doc))


@given(st.sampled_from(SMALL_TYPES).flatmap(lambda n: weights(group(n)[0].rank)))
def test_weight_round_trip(lam):
    assert ser.weight_from_json(through_text(ser.weight_to_json(lam))) == lam


@given(_instances())
def test_report_round_trips(data):
    rs, (w, I, J), lam = data
    assert ser.weyl_from_json(through_text(ser.weyl_to_json(w)), rs) == w
    assert ser.subset_from_json(through_text(ser.subset_to_json(I)), rs) == I
    for st_ in bh_factorize(w, I, J):
        assert ser.step_from_json(through_text(ser.step_to_json(st_)), rs) == st_
    label = transport(lam, w, mu_for_untwisted(w), I, J)
    assert ser.tdo_from_json(through_text(ser.tdo_to_json(label)), rs) == label
    gvm = annihilator_label(lam, I, rs)
    assert ser.gvm_from_json(through_text(ser.gvm_to_json(gvm)), rs) == gvm
    spec = check_equivalence(lam, w, mu_for_untwisted(w), I, J)
    assert ser.spec_from_json(through_text(ser.spec_to_json(spec)), rs) == spec
    rep = check_main_theorem2(lam, w, I, J)
    assert ser.report_from_json(through_text(ser.report_to_json(rep)), rs) == rep


def test_suite_round_trip(A2):
    res = verify_suite(A2, "lengths")
    back = ser.suite_from_json(through_text(ser.suite_to_json(res)))
    assert back == res and back.passed


@given(st.sampled_from(ser.COMMANDS), st.sampled_from(SMALL_TYPES),
       st.dictionaries(st.sampled_from(["I", "J", "w", "lambda", "mu"]),
                       st.lists(st.integers(1, 3), max_size=3)))
def test_request_round_trip(command, name, arguments):
    rs = group(name)[0]
    req = ser.Request(command, ser.root_system_to_json(rs), arguments)
    back = ser.request_from_json(through_text(ser.request_to_json(req)))
    assert back == req and back.build() == rs


def test_root_system_round_trip():
    for name in SMALL_TYPES + ["F4", "E6"]:
        rs = build_root_system(name)
        assert ser.root_system_from_json(through_text(ser.root_system_to_json(rs))) == rs


@pytest.mark.parametrize("bad", [
    None, [], {"command": "frobnicate", "root_system": {}},
    {"command": "roots"}, {"command": "roots", "root_system": {}, "arguments": []},
])
def test_bad_requests(bad):
    with pytest.raises(ParseError):
        ser.request_from_json(bad)


@pytest.mark.parametrize("bad", [[0.5], ["x/y"], [True], "1", [[1]]])
def test_bad_weights(bad):
    with pytest.raises(ParseError):
        ser.weight_from_json(bad)


def test_rationals_are_strings():
    assert ser.weight_to_json(Weight(["-3/2", 4])) == ["-3/2", "4"]
    assert ser.weight_from_json([1, "2", "-7/14"]) == Weight([1, 2, "-1/2"])
