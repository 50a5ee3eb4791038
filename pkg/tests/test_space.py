import json

import pytest
from hypothesis import given

from thetaext.space import (FiniteSpace, MissingEmpty, MissingUniverse, NotClosedUnderIntersection,
                            NotClosedUnderUnion, SpaceMismatch, UnknownPoint, validate_space)

from conftest import spaces


def test_sierpinski_is_valid():
    s = validate_space(["a", "b"], [[], ["a"], ["a", "b"]])
    assert s.n == 2
    assert [s.names(o) for o in s.opens] == [[], ["a"], ["a", "b"]]


def test_missing_universe():
    with pytest.raises(MissingUniverse):
        validate_space(["a", "b"], [[], ["a"], ["b"]])


def test_missing_empty():
    with pytest.raises(MissingEmpty):
        validate_space(["a", "b"], [["a"], ["a", "b"]])


def test_first_failing_pair_is_reported():
    with pytest.raises(NotClosedUnderUnion) as info:
        validate_space(["a", "b", "c"], [[], ["a"], ["b"], ["a", "b", "c"]])
    assert (info.value.a, info.value.b) == (["a"], ["b"])


def test_intersection_failure():
    with pytest.raises(NotClosedUnderIntersection):
        validate_space(["a", "b", "c"], [[], ["a", "b"], ["b", "c"], ["a", "b", "c"]])


def test_unknown_point():
    with pytest.raises(UnknownPoint):
        validate_space(["a"], [[], ["a"], ["z"]])


def test_zig5_minimal_neighbourhoods(zig5):
    expected = {"1": ["1"], "2": ["1", "2", "3"], "3": ["3"], "4": ["3", "4", "5"], "5": ["5"]}
    assert {p: zig5.names(zig5.nbhd[i]) for i, p in enumerate(zig5.points)} == expected


@given(spaces())
def test_opens_are_a_lattice(space):
    opens = set(space.opens)
    assert 0 in opens and space.full in opens
    for a in opens:
        for b in opens:
            assert a | b in opens and a & b in opens


@given(spaces())
def test_minimal_neighbourhood_is_intersection_of_opens(space):
    for x in range(space.n):
        meet = space.full
        for o in space.opens:
            if o >> x & 1:
                meet &= o
        assert meet == space.nbhd[x]


@given(spaces())
def test_json_round_trip(space):
    again = FiniteSpace.from_json(space.to_json())
    assert again == space
    assert again.opens == space.opens
    assert FiniteSpace.from_dict(json.loads(json.dumps(space.to_dict()))) == space


def test_point_sets_from_different_spaces_do_not_mix(sierp, zig5):
    with pytest.raises(SpaceMismatch):
        sierp.subset(["a"]) | zig5.subset(["1"])


def test_point_set_algebra(zig5):
    a = zig5.subset(["1", "2"])
    b = zig5.subset(["2", "3"])
    assert (a | b).names() == ["1", "2", "3"]
    assert (a & b).names() == ["2"]
    assert (a - b).names() == ["1"]
    assert (~a).names() == ["3", "4", "5"]
    assert a & b <= a and not a <= b
    assert "2" in a and len(a) == 2
