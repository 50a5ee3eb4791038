import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetaext import oracles
from thetaext.enumeration import InstanceFilter, enumerate_instances
from thetaext.maps import (BudgetExceeded, DenseMapInstance, NotContinuous, NotDense, NotSingleValued,
                           brute_force_extensions, check_pairwise, check_plus_alpha, check_plusplus_alpha,
                           check_star, check_star_alpha, construct_extension, is_continuous,
                           is_theta_alpha_continuous, phi, x_theta_interior_set)
from thetaext.operators import theta_closure
from thetaext.ordinal import OMEGA
from thetaext.space import FiniteSpace

from conftest import spaces

SIERP01 = FiniteSpace.from_opens(["0", "1"], [[], ["0"], ["0", "1"]])
D01 = FiniteSpace.discrete(["0", "1"])


def test_continuity_examples(sierp):
    assert is_continuous(sierp, sierp, {"a": "a", "b": "b"})
    assert not is_continuous(sierp, D01, {"a": "0", "b": "1"})
    ind = FiniteSpace.indiscrete(["x", "y"])
    assert not is_continuous(ind, SIERP01, {"x": "0", "y": "1"})


def test_theta_continuity_examples(sierp):
    ind = FiniteSpace.indiscrete(["x", "y"])
    assert is_theta_alpha_continuous(ind, SIERP01, {"x": "0", "y": "1"}, 1)
    assert not is_theta_alpha_continuous(sierp, D01, {"a": "0", "b": "1"}, 1)
    assert is_theta_alpha_continuous(sierp, sierp, {"a": "a", "b": "b"}, 3)


def test_phi_examples(x3, sierp_ext):
    assert phi(x3, "c", 0).names() == ["0", "1"]
    assert phi(x3, "a", 1).names() == ["0"]
    assert phi(sierp_ext, "b", 0).names() == ["0"]


def test_interior_point_sets(x3, sierp_ext):
    assert x_theta_interior_set(x3, x3.y_space.subset(["0"]), 1).names() == ["a"]
    assert x_theta_interior_set(x3, x3.y_space.universe, 1).names() == ["a", "b", "c"]
    assert x_theta_interior_set(sierp_ext, sierp_ext.y_space.subset(["0"]), 0).names() == ["a", "b"]


def test_star_examples(x3, sierp_ext):
    v = check_star(x3)
    assert not v and v.witness == {"point": "c", "family": [["0"], ["1"]]}
    assert check_star(sierp_ext)


def test_star_alpha_examples(x3, sierp_ext):
    assert check_star_alpha(x3, 0)
    assert check_star_alpha(sierp_ext, 0)


def test_plus_examples(x3):
    ind = FiniteSpace.indiscrete(["x", "y"])
    inst = DenseMapInstance(ind, SIERP01, ["x"], {"x": "1"}, f_class="theta")
    assert check_plus_alpha(inst, 1)
    v = check_plus_alpha(x3, 1)
    assert not v and v.witness["point"] == "c"


def test_plusplus_examples(x3, sierp_ext):
    assert check_plusplus_alpha(x3, 1)
    assert check_plusplus_alpha(sierp_ext, 1)


def test_identity_instances_hold(zig5):
    ident = {p: p for p in zig5.points}
    inst = DenseMapInstance(zig5, zig5, zig5.points, ident)
    for alpha in (0, 1, 2, OMEGA):
        assert check_star_alpha(inst, alpha)
    for alpha in (1, 2, OMEGA):
        assert check_plus_alpha(inst, alpha) and check_plusplus_alpha(inst, alpha)
    assert check_star(inst)
    d = FiniteSpace.discrete("pqr")
    ident = {p: p for p in d.points}
    for alpha in (0, 1, OMEGA):
        assert construct_extension(DenseMapInstance(d, d, d.points, ident), alpha).mapping == ident


def test_construct_extension_examples(x3, sierp_ext):
    ext = construct_extension(sierp_ext, 0)
    assert ext.mapping == {"a": "0", "b": "0"} and ext.continuous and ext.agrees_on_dense
    with pytest.raises(NotSingleValued) as info:
        construct_extension(x3, 1)
    assert info.value.point == "c" and info.value.values == ["0", "1"]


def test_brute_force_examples(x3, sierp_ext):
    assert brute_force_extensions(sierp_ext, "continuous") == [{"a": "0", "b": "0"}]
    assert brute_force_extensions(x3, "continuous") == []
    assert brute_force_extensions(x3, "theta", 1) == []


def test_budget(x3):
    with pytest.raises(BudgetExceeded):
        brute_force_extensions(x3, "continuous", budget=1)


def test_construction_rejects_bad_instances(sierp):
    with pytest.raises(NotDense):
        DenseMapInstance(FiniteSpace.discrete("ab"), D01, ["a"], {"a": "0"})
    with pytest.raises(NotContinuous):
        DenseMapInstance(sierp, D01, ["a", "b"], {"a": "0", "b": "1"})


def test_instance_json_round_trip(x3):
    again = DenseMapInstance.from_dict(x3.to_dict())
    assert again == x3 and again.to_dict() == x3.to_dict()


ALL3 = InstanceFilter(max_x_points=3, max_y_points=3)


def _sample(flt, step):
    return list(itertools.islice(enumerate_instances(flt), 0, None, step))


@pytest.mark.parametrize("inst", _sample(ALL3, 97), ids=lambda i: "")
def test_star_and_pairwise_match_family_oracle(inst):
    assert check_star(inst).holds == oracles.star_by_families(inst)


@pytest.mark.parametrize("inst", _sample(InstanceFilter(max_x_points=3, max_y_points=3, f_class="theta"), 97),
                         ids=lambda i: "")
def test_theta_conditions_match_oracles(inst):
    for alpha in (1, 2):
        assert check_plus_alpha(inst, alpha).holds == oracles.plus_by_families(inst, alpha)
        assert check_plusplus_alpha(inst, alpha).holds == oracles.plusplus_by_chains(inst, alpha)
        for p in inst.x_space.points:
            i = inst.x_space.index(p)
            assert phi(inst, p, alpha).bits == oracles.phi(inst, i, alpha)


def test_extension_modes_match_oracle():
    for inst in _sample(ALL3, 13):
        got = brute_force_extensions(inst, "continuous")
        want = oracles.extensions(inst, "continuous", 1)
        assert len(got) == len(want)
        for alpha in (1, 2):
            assert len(brute_force_extensions(inst, "theta", alpha)) == len(oracles.extensions(inst, "theta", alpha))


@given(spaces(max_points=3), spaces(max_points=3), st.data(), st.sampled_from([1, 2, OMEGA]))
def test_continuity_predicates_match_oracle(x, y, data, alpha):
    mapping = {p: data.draw(st.sampled_from(y.points)) for p in x.points}
    fmap = [y.index(mapping[p]) for p in x.points]
    assert is_continuous(x, y, mapping) == oracles.is_continuous(x, y, fmap)
    assert is_theta_alpha_continuous(x, y, mapping, alpha) == oracles.is_theta_continuous(x, y, fmap, alpha)
    if is_continuous(x, y, mapping):
        assert is_theta_alpha_continuous(x, y, mapping, alpha)


def test_discrete_pairwise_matches_star():
    flt = InstanceFilter(max_x_points=3, max_y_points=3, y_class="discrete")
    for inst in enumerate_instances(flt):
        assert check_pairwise(inst).holds == check_star(inst).holds


def test_phi_of_an_isolated_dense_point(x3):
    y = x3.y_space
    assert phi(x3, "a", 2) == theta_closure(y, y.subset(["0"]), 2)
