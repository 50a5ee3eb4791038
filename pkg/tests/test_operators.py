import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from thetaext import oracles
from thetaext.operators import (EmptySet, NotOpen, closure, hull_chain, interior, is_hull, is_theta_closed,
                                min_hull, min_nbhd, shrink, shrink_power, theta_closure, theta_interior)
from thetaext.ordinal import OMEGA, add
from thetaext.separation import (classify, is_regular, is_regular_u_alpha, is_s_n, is_u_alpha,
                                 regular_u_alpha_witness, s_n_witness)
from thetaext.space import FiniteSpace

from conftest import alphas, positive_alphas, space_and_set, spaces


def names(space, *ps):
    return space.subset(list(ps))


# worked examples

def test_closure_examples(sierp, zig5):
    assert closure(sierp, names(sierp, "a")).names() == ["a", "b"]
    assert closure(zig5, names(zig5)).names() == []
    assert closure(zig5, names(zig5, "3")).names() == ["2", "3", "4"]


def test_interior_and_min_nbhd(sierp, zig5):
    assert interior(sierp, names(sierp, "b")).names() == []
    assert min_nbhd(zig5, names(zig5)).names() == []
    assert min_nbhd(zig5, names(zig5, "2")).names() == ["1", "2", "3"]


def test_shrink_examples(sierp, zig5):
    assert shrink(zig5, zig5.universe).names() == zig5.universe.names()
    assert shrink(sierp, names(sierp, "a")).names() == []
    assert shrink(zig5, names(zig5, "1", "2", "3")).names() == ["1"]
    with pytest.raises(NotOpen):
        shrink(zig5, names(zig5, "2"))


def test_min_hull_examples(zig5):
    assert min_hull(zig5, names(zig5, "1"), 2).names() == ["1", "2", "3"]
    assert min_hull(zig5, names(zig5, "2"), 2).names() == zig5.universe.names()
    d = FiniteSpace.discrete("xyz")
    for alpha in (1, 2, 5, OMEGA):
        assert min_hull(d, names(d, "y"), alpha).names() == ["y"]
    with pytest.raises(EmptySet):
        min_hull(zig5, names(zig5), 1)


def test_is_hull_examples(zig5):
    assert is_hull(zig5, names(zig5, "1", "2", "3"), names(zig5, "1"), 2)
    assert not is_hull(zig5, names(zig5, "1"), names(zig5, "1"), 2)
    for alpha in (1, 2, 3, OMEGA):
        assert is_hull(zig5, zig5.universe, names(zig5, "4"), alpha)


def test_theta_closure_examples(sierp, zig5):
    assert theta_closure(sierp, names(sierp, "b"), 1).names() == ["a", "b"]
    assert closure(sierp, names(sierp, "b")).names() == ["b"]
    assert theta_closure(zig5, names(zig5, "5"), 1).names() == ["4", "5"]
    assert theta_closure(zig5, names(zig5, "5"), 2).names() == ["2", "3", "4", "5"]
    for alpha in (0, 1, 2, OMEGA):
        assert theta_closure(zig5, names(zig5), alpha).names() == []


def test_separation_examples(sierp, zig5):
    d2 = FiniteSpace.discrete("xy")
    assert is_s_n(d2, 0)
    assert s_n_witness(sierp, 0) == ("a", "b")
    # the first failing pair in point order is (1, 2); (2, 3) fails as well
    assert s_n_witness(zig5, 2) == ("1", "2")
    assert "2" in theta_closure(zig5, names(zig5, "3"), 2)


def test_u_alpha_and_regular_examples():
    d = FiniteSpace.discrete("xyz")
    assert all(is_u_alpha(d, a) for a in (1, 2, OMEGA))
    ind = FiniteSpace.indiscrete("xy")
    assert is_regular(ind)
    assert all(is_regular_u_alpha(ind, a) for a in (1, 2, OMEGA))
    assert not is_u_alpha(ind, 1)
    blocks = FiniteSpace.from_opens("abcd", [[], ["a", "b"], ["c", "d"], ["a", "b", "c", "d"]])
    assert is_regular_u_alpha(blocks, 1)
    assert regular_u_alpha_witness(blocks, 1) is None


def test_classify_report(zig5):
    report = classify(zig5, max_n=2)
    assert report["discrete"] is False
    # 1 lies in the closure of 2, so not even S(0)
    assert report["S"]["0"] is False and report["S"]["2"] is False
    assert report["regular"] is False
    assert set(report["U"]) >= {"1", "2", "omega"}


# laws

VALID_PAIRS = [(a, b) for a in (0, 1, 2, OMEGA) for b in (0, 1, 2, OMEGA) if not (b == 0 and a in (1, 2))]


@given(space_and_set())
def test_composition_law_where_it_holds(case):
    space, m = case
    s = space.pset(m)
    for a, b in VALID_PAIRS:
        assert theta_closure(space, theta_closure(space, s, b), a) == theta_closure(space, s, add(a, b))


def test_composition_law_fails_after_plain_closure():
    # cl_theta(cl M) can be larger than cl_theta(M): a finite counterexample
    v = FiniteSpace.from_nbhd(["1", "2", "3"], [0b001, 0b111, 0b100])
    m = v.subset(["1"])
    assert theta_closure(v, closure(v, m), 1).names() == ["1", "2", "3"]
    assert theta_closure(v, m, 1).names() == ["1", "2"]


@given(space_and_set())
def test_monotone_in_depth(case):
    space, m = case
    s = space.pset(m)
    chain = [theta_closure(space, s, a) for a in (0, 1, 2, 3, OMEGA)]
    for lo, hi in zip(chain, chain[1:]):
        assert lo <= hi


@given(space_and_set(), alphas)
def test_closure_operator_axioms(case, alpha):
    space, m = case
    s = space.pset(m)
    c = theta_closure(space, s, alpha)
    assert s <= c
    assert theta_closure(space, space.empty, alpha).bits == 0
    t = space.pset(m | (m >> 1 & space.full))
    assert c <= theta_closure(space, s | t, alpha)


@given(space_and_set())
def test_depth_zero_is_closure_and_depth_one_is_classical(case):
    space, m = case
    s = space.pset(m)
    assert theta_closure(space, s, 0) == closure(space, s)
    assert theta_closure(space, s, 1).bits == oracles.classical_theta_closure(space, m)
    assert closure(space, s).bits == oracles.closure(space, m)
    assert interior(space, s).bits == oracles.interior(space, m)


@given(space_and_set(max_points=4), st.sampled_from([1, 2, 3, OMEGA]))
def test_theta_closure_matches_chain_oracle(case, alpha):
    space, m = case
    assert theta_closure(space, space.pset(m), alpha).bits == oracles.theta_closure(space, m, alpha)


@given(space_and_set(), alphas)
def test_theta_interior_is_dual(case, alpha):
    space, m = case
    s = space.pset(m)
    assert theta_interior(space, s, alpha) == ~theta_closure(space, ~s, alpha)
    assert is_theta_closed(space, space.universe, alpha)


@given(space_and_set(max_points=4, nonempty=True), st.sampled_from([1, 2, 3]))
def test_min_hull_is_minimal(case, alpha):
    space, a = case
    h = min_hull(space, space.pset(a), alpha)
    ch = closure(space, h)
    for w in oracles.hulls(space, a, alpha):
        assert h.bits & ~w == 0
        assert ch.bits & ~oracles.closure(space, w) == 0


@given(space_and_set(nonempty=True))
def test_hull_chain_is_a_chain(case):
    space, a = case
    chain = hull_chain(space, space.pset(a), 4)
    assert chain[0] == min_nbhd(space, space.pset(a))
    for u, v in zip(chain, chain[1:]):
        assert space.is_open(u.bits)
        assert closure(space, u) <= v


@given(space_and_set(nonempty=True))
def test_hull_stabilizes_by_point_count(case):
    space, a = case
    s = space.pset(a)
    top = min_hull(space, s, OMEGA)
    for k in range(space.n, space.n + 3):
        assert min_hull(space, s, k) == top


@given(spaces())
def test_shrink_adjunction(space):
    for v in space.opens:
        b = shrink(space, space.pset(v))
        assert closure(space, b).bits & ~v == 0
        for w in space.opens:
            if oracles.closure(space, w) & ~v == 0:
                assert w & ~b.bits == 0


@given(spaces(max_points=4), st.sampled_from([1, 2, 3, OMEGA]))
def test_is_hull_matches_chain_enumeration(space, alpha):
    for a in range(1, space.full + 1):
        found = oracles.hulls(space, a, alpha)
        for w in range(space.full + 1):
            assert is_hull(space, space.pset(w), space.pset(a), alpha) == (w in found)


@given(spaces(), st.sampled_from([1, 2, 0]))
def test_shrink_power_zero_is_identity(space, times):
    v = space.pset(space.opens[-1])
    if times == 0:
        assert shrink_power(space, v, 0) == v
    else:
        assert shrink_power(space, v, times) <= v


@given(spaces(), positive_alphas)
def test_u_alpha_iff_discrete(space, alpha):
    assert is_u_alpha(space, alpha) == space.is_discrete


def _t1(space):
    return is_s_n(space, 0)


@given(spaces())
def test_regular_t1_finite_spaces_are_discrete(space):
    if is_regular(space) and _t1(space):
        assert space.is_discrete


@given(spaces())
def test_regular_spaces_separate_separated_pairs_with_hulls(space):
    # for pairs not in each other's closure, regularity gives disjoint-closure hulls
    if not is_regular(space):
        return
    cls = space.singleton_closures(0)
    for x, y in itertools.combinations(range(space.n), 2):
        if not cls[y] >> x & 1 and not cls[x] >> y & 1:
            for alpha in (1, 2, OMEGA):
                hx = closure(space, min_hull(space, space.pset(1 << x), alpha))
                hy = closure(space, min_hull(space, space.pset(1 << y), alpha))
                assert not (hx & hy)


def test_regular_nondiscrete_spaces_exist():
    from thetaext.enumeration import enumerate_topologies
    found = [s for n in range(1, 5) for s in enumerate_topologies(n)
             if is_regular(s) and not s.is_discrete]
    assert found
    assert any(is_regular_u_alpha(s, 1) for s in found)
