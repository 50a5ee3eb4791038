import itertools

import pytest

from thetaext import oracles
from thetaext.enumeration import (CapExceeded, InstanceFilter, canonical_table, enumerate_instances,
                                  enumerate_topologies, preorder_tables)
from thetaext.space import FiniteSpace

LABELLED = {1: 1, 2: 4, 3: 29, 4: 355, 5: 6942}
UNLABELLED = {1: 1, 2: 3, 3: 9, 4: 33, 5: 139}


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
def test_counts(n):
    assert sum(1 for _ in enumerate_topologies(n)) == LABELLED[n]
    assert sum(1 for _ in enumerate_topologies(n, up_to_homeomorphism=True)) == UNLABELLED[n]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_matches_raw_family_filter(n):
    ours = {frozenset(s.opens) for s in enumerate_topologies(n)}
    assert ours == set(oracles.raw_topologies(n))


def test_two_point_spaces():
    kinds = sorted(tuple(s.opens) for s in enumerate_topologies(2))
    assert kinds == sorted([(0, 3), (0, 1, 3), (0, 2, 3), (0, 1, 2, 3)])


def test_cap():
    with pytest.raises(CapExceeded):
        list(enumerate_topologies(6))
    assert sum(1 for _ in enumerate_topologies(6, up_to_homeomorphism=True, cap=6)) == 718


def _isomorphic(a, b):
    n = len(a)
    for perm in itertools.permutations(range(n)):
        if all(_relabel(a[x], perm) == b[perm[x]] for x in range(n)):
            return True
    return False


def _relabel(mask, perm):
    return sum(1 << perm[i] for i in range(len(perm)) if mask >> i & 1)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_canonical_form_matches_pairwise_isomorphism(n):
    tables = preorder_tables(n)
    for a, b in itertools.combinations(tables[:: max(1, len(tables) // 40)], 2):
        assert (canonical_table(a) == canonical_table(b)) == _isomorphic(a, b)


def test_determinism():
    flt = InstanceFilter(max_x_points=3, max_y_points=2)
    first = [i.to_dict() for i in enumerate_instances(flt)]
    second = [i.to_dict() for i in enumerate_instances(flt)]
    assert first == second


def test_one_point_codomain_has_constant_maps():
    from thetaext.maps import extension_exists
    for inst in enumerate_instances(InstanceFilter(max_x_points=2, max_y_points=1)):
        assert len(set(inst.mapping.values())) == 1
        assert extension_exists(inst)


def test_contains_hand_built_instances(sierp_ext, x3):
    flt = InstanceFilter(max_x_points=2, max_y_points=2, y_class="discrete", proper_dense=True)
    assert any(_same(i, sierp_ext) for i in enumerate_instances(flt))
    flt = InstanceFilter(max_x_points=3, max_y_points=2, y_class="discrete")
    assert any(_same(i, x3) for i in enumerate_instances(flt))


def _same(a, b):
    return a.to_dict() == b.to_dict()


def test_filter_rejects_bad_values():
    with pytest.raises(ValueError):
        InstanceFilter(max_x_points=0)
    with pytest.raises(ValueError):
        InstanceFilter(y_class="hausdorffish")


def test_nontrivial_regular_spaces_occur():
    from thetaext.separation import is_regular, is_regular_u_alpha, is_u_alpha
    spaces = [s for n in range(1, 5) for s in enumerate_topologies(n)]
    assert all(s.is_discrete for s in spaces if is_u_alpha(s, 1))
    assert any(is_regular(s) and not s.is_discrete for s in spaces)
    assert any(is_regular_u_alpha(s, 2) and not s.is_discrete for s in spaces)
