"""Core-stability solvers.

With a single non-void activity a core stable assignment always exists:
take the largest size s such that the players accepting (activity, s)
have a big enough connected cluster, and fill a connected coalition of
exactly that size.  Any would-be blocking coalition must strictly
contain the chosen group, and maximality of s denies it.

With more activities, assignments are enumerated directly: every group
is a connected subset, so assigning each activity a connected subset or
nothing (pairwise disjoint) covers all feasible assignments.  That is
exponential in general but polynomial on paths, and a step budget keeps
it honest elsewhere.
"""

from __future__ import annotations

from collections import deque

from .graph import connected_prefix, enumerate_connected_subsets
from .model import VOID, Assignment, BudgetExceeded, Instance, UnsupportedTopology
from .stability import CR, verify

DEFAULT_ENUM_BUDGET = 10_000_000


def solve_core_single_activity(instance: Instance) -> Assignment:
    """Core stable assignment for instances with exactly one non-void
    activity; always succeeds."""
    if instance.p != 1:
        raise UnsupportedTopology(
            f"single-activity solver requires exactly one non-void activity, got {instance.p}"
        )
    n = instance.n
    best_size = None
    for s in range(1, n + 1):
        pool = [
            i for i in instance.players
            if instance.rank(i, 1, s) <= instance.rank_void[i - 1]
        ]
        if len(pool) >= s and _largest_component(instance, pool) >= s:
            best_size = s
    if best_size is None:
        return instance.all_void()
    pool = [
        i for i in instance.players
        if instance.rank(i, 1, best_size) <= instance.rank_void[i - 1]
    ]
    members = connected_prefix(instance, (), pool, best_size)
    assert members is not None
    choices = [VOID] * n
    for i in members:
        choices[i - 1] = 1
    return Assignment(tuple(choices))


def solve_core_connected_enum(
    instance: Instance, budget: int = DEFAULT_ENUM_BUDGET
) -> Assignment | None:
    """First core stable assignment under exhaustive enumeration of
    (connected subset or nothing) per activity, or None if the core is
    empty.  Raises :class:`BudgetExceeded` when the option space is too
    large to enumerate within ``budget`` steps."""
    subsets = enumerate_connected_subsets(instance, budget=budget)
    kappa = len(subsets)
    if (kappa + 1) ** instance.p > budget:
        raise BudgetExceeded(
            f"({kappa}+1)^{instance.p} assignments exceed the budget of {budget}"
        )

    n, p = instance.n, instance.p
    choices = [VOID] * n
    steps = 0

    def assign_from(a: int, occupied: set[int]) -> Assignment | None:
        nonlocal steps
        if a > p:
            steps += 1
            if steps > budget:
                raise BudgetExceeded(f"core enumeration exceeded {budget} steps")
            candidate = Assignment(tuple(choices))
            return candidate if verify(instance, candidate, CR) is None else None
        found = assign_from(a + 1, occupied)
        if found is not None:
            return found
        for subset in subsets:
            if occupied.isdisjoint(subset):
                for i in subset:
                    choices[i - 1] = a
                found = assign_from(a + 1, occupied | set(subset))
                for i in subset:
                    choices[i - 1] = VOID
                if found is not None:
                    return found
        return None

    return assign_from(1, set())


def _largest_component(instance: Instance, players) -> int:
    remaining = set(players)
    best = 0
    while remaining:
        start = min(remaining)
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in instance.adjacency[u]:
                if v in remaining and v not in comp:
                    comp.add(v)
                    queue.append(v)
        remaining -= comp
        best = max(best, len(comp))
    return best
