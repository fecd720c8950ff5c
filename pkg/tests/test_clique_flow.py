"""Size-vector flow solver for Nash stability on cliques."""

import pytest

from ggasp import (
    NS,
    Assignment,
    UnsupportedTopology,
    oracle_find,
    solve_ns_clique,
    verify,
)

from conftest import clique_instance


def test_stalker_regression(stalker):
    """The must-assign rule: with one slot for the activity, matching the
    loner leaves the stalker with a valid deviation, so every size vector
    fails and the instance has no Nash stable assignment."""
    assert solve_ns_clique(stalker) is None


def test_single_player(single):
    assert solve_ns_clique(single) == Assignment((1,))


def test_rejects_non_clique(no_is):
    with pytest.raises(UnsupportedTopology):
        solve_ns_clique(no_is)


def test_agrees_with_oracle():
    for s in range(100):
        inst = clique_instance(s)
        found = solve_ns_clique(inst)
        want = oracle_find(inst, NS)
        assert (found is None) == (want is None), f"corpus index {s}"
        if found is not None:
            assert verify(inst, found, NS) is None, f"corpus index {s}"


def test_all_void_when_nobody_cares():
    from ggasp import validate_instance
    inst = validate_instance({
        "players": 3,
        "activities": ["a"],
        "edges": [[1, 2], [1, 3], [2, 3]],
        "preferences": [[[[0, 1]]]] * 3,
    })
    assert solve_ns_clique(inst) == Assignment((0, 0, 0))


def test_parallel_matches_sequential():
    for s in (3, 17, 40):
        inst = clique_instance(s)
        assert solve_ns_clique(inst, jobs=2) == solve_ns_clique(inst)
