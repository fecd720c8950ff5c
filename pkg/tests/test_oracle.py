"""Brute-force oracle: exact enumeration semantics and pruning soundness."""

import itertools
from collections import deque

import pytest

from ggasp import (
    CR,
    IS,
    NS,
    Assignment,
    BudgetExceeded,
    VOID,
    check_feasible,
    check_ir,
    enumerate_feasible_ir,
    gen_random,
    oracle_find,
)



def _scratch_feasible_ir(inst, vector):
    """Feasibility + IR from first principles, independent of the package
    verifiers: BFS connectivity per group and tier-rank IR per player."""
    for a in range(1, inst.p + 1):
        group = [i for i, c in enumerate(vector, start=1) if c == a]
        if len(group) <= 1:
            continue
        seen = {group[0]}
        queue = deque([group[0]])
        while queue:
            u = queue.popleft()
            for x, y in inst.edges:
                for u2, v2 in ((x, y), (y, x)):
                    if u2 == u and v2 in group and v2 not in seen:
                        seen.add(v2)
                        queue.append(v2)
        if len(seen) != len(group):
            return False
    for i, c in enumerate(vector, start=1):
        if c == VOID:
            continue
        size = sum(1 for x in vector if x == c)
        pref = inst.prefs[i - 1]
        if pref.rank((c, size)) > pref.rank((VOID, 1)):
            return False
    return True


def test_counts_match_unpruned_filter():
    for s in range(25):
        inst = gen_random(600 + s, ["path", "general", "star"][s % 3],
                          2 + s % 5, 1 + s % 2, 0.4, 0.2)
        visited = []
        enumerate_feasible_ir(inst, lambda a: visited.append(a.choices) and None)
        expected = [
            vec for vec in itertools.product(range(inst.p + 1), repeat=inst.n)
            if _scratch_feasible_ir(inst, vec)
        ]
        assert visited == expected  # same set, same lexicographic order


def test_visited_assignments_are_feasible_ir():
    inst = gen_random(77, "general", 6, 2, 0.5, 0.2)
    def check(a):
        assert check_feasible(inst, a) is None
        assert check_ir(inst, a) is None
    enumerate_feasible_ir(inst, lambda a: check(a))


def test_fixture_counts(stalker, no_is, single):
    assert enumerate_feasible_ir(single) == 2
    seen = []
    enumerate_feasible_ir(stalker, lambda a: seen.append(a.choices) and None)
    assert seen == [(0, 0), (1, 0)]
    both_active = []
    enumerate_feasible_ir(
        no_is, lambda a: both_active.append(a) if a[1] != VOID and a[2] != VOID else None
    )
    assert len(both_active) == 9


def test_oracle_find_on_fixtures(stalker, no_is, no_core, single):
    assert oracle_find(stalker, NS) is None
    assert oracle_find(no_is, IS) is None
    assert oracle_find(no_core, CR) is None
    assert oracle_find(single, NS) == Assignment((1,))
    assert oracle_find(single, CR) == Assignment((1,))


def test_budget_exceeded():
    inst = gen_random(88, "clique", 6, 3, 0.6, 0.2)
    with pytest.raises(BudgetExceeded):
        enumerate_feasible_ir(inst, budget=5)


def test_visitor_can_stop_early():
    inst = gen_random(89, "path", 5, 2, 0.6, 0.2)
    seen = []

    def stop_after_three(a):
        seen.append(a)
        return len(seen) == 3

    enumerate_feasible_ir(inst, stop_after_three)
    assert len(seen) == 3
