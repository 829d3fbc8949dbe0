"""Hypothesis strategies and cached groups shared by the test modules."""

from fractions import Fraction

from hypothesis import strategies as st

from radonflag import Weight, build_root_system, enumerate_group

SMALL_TYPES = ["A1", "A2", "A3", "B2", "B3", "C3", "G2"]


def rationals():
    return st.builds(Fraction, st.integers(-20, 20), st.sampled_from([1, 2, 3, 5, 7]))


def weights(rank, zero_on=()):
    return st.lists(rationals(), min_size=rank, max_size=rank).map(
        lambda cs: Weight([0 if i + 1 in zero_on else c for i, c in enumerate(cs)]))


_GROUPS = {}


def group(name):
    if name not in _GROUPS:
        rs = build_root_system(name)
        _GROUPS[name] = (rs, enumerate_group(rs))
    return _GROUPS[name]


def system_and_element(names=tuple(SMALL_TYPES)):
    return st.sampled_from(names).flatmap(
        lambda n: st.sampled_from(group(n)[1]).map(lambda w: (group(n)[0], w)))
