"""Ground-truth brute-force solver.

Enumerates every feasible individually rational assignment by guessing
each player's activity in turn, in lexicographic order of the choice
vector (void < activity 1 < ... < activity p).  Two prunes keep the
search at desk scale:

* a partial group is abandoned when no completion size is acceptable to
  all of its current members,
* a partial group is abandoned when its members no longer lie in one
  component of the graph induced by themselves plus the unassigned
  players (so the group can never become connected).

Both prunes are necessary conditions only; leaves are checked exactly.
"""

from __future__ import annotations

from collections import deque
from concurrent.futures import ProcessPoolExecutor
from typing import Callable

from .model import VOID, Assignment, BudgetExceeded, Instance, weak_ir_activities
from .stability import verify


def _allowed_sizes(instance: Instance) -> dict[tuple[int, int], frozenset[int]]:
    """(player, activity) -> group sizes the player accepts over doing nothing."""
    table = {}
    for i in instance.players:
        rv = instance.rank_void[i - 1]
        for a in range(1, instance.p + 1):
            table[(i, a)] = frozenset(
                k for k in range(1, instance.n + 1) if instance.rank(i, a, k) <= rv
            )
    return table


def _group_connectable(instance: Instance, members: list[int], next_player: int) -> bool:
    """Can the group still become connected using only unassigned players?"""
    if len(members) <= 1:
        return True
    usable = set(members) | set(range(next_player, instance.n + 1))
    adj = instance.adjacency
    target = set(members)
    start = members[0]
    reached = {start}
    queue = deque([start])
    hit = 1
    while queue and hit < len(target):
        u = queue.popleft()
        for v in adj[u]:
            if v in usable and v not in reached:
                reached.add(v)
                if v in target:
                    hit += 1
                queue.append(v)
    return hit == len(target)


def enumerate_feasible_ir(
    instance: Instance,
    visit: Callable[[Assignment], object] | None = None,
    budget: int | None = None,
    _first_choice: int | None = None,
) -> int:
    """Visit every feasible IR assignment exactly once, in lexicographic
    order of the choice vector; returns the number visited.

    ``visit`` may return a truthy value to stop the enumeration early.
    ``budget`` caps the number of search nodes expanded.
    ``_first_choice`` pins player 1's activity (used to split the search
    across workers).
    """
    n, p = instance.n, instance.p
    sizes_ok = _allowed_sizes(instance)
    menu = {i: (VOID,) + weak_ir_activities(instance, i) for i in instance.players}
    if _first_choice is not None:
        menu[1] = (_first_choice,) if _first_choice in menu[1] else ()
    choices = [VOID] * n
    members: dict[int, list[int]] = {a: [] for a in range(1, p + 1)}
    state = {"visited": 0, "nodes": 0, "stop": False}

    def viable(a: int, next_player: int) -> bool:
        group = members[a]
        lo, hi = len(group), len(group) + (n - next_player + 1)
        allowed = frozenset(range(lo, hi + 1))
        for j in group:
            allowed &= sizes_ok[(j, a)]
            if not allowed:
                return False
        return _group_connectable(instance, group, next_player)

    def at_leaf() -> bool:
        for a in range(1, p + 1):
            group = members[a]
            if not group:
                continue
            size = len(group)
            if any(size not in sizes_ok[(j, a)] for j in group):
                return False
            if not _group_connectable(instance, group, n + 1):
                return False
        return True

    def search(i: int) -> None:
        if state["stop"]:
            return
        state["nodes"] += 1
        if budget is not None and state["nodes"] > budget:
            raise BudgetExceeded(f"oracle exceeded {budget} search nodes")
        if i > n:
            if at_leaf():
                state["visited"] += 1
                if visit is not None and visit(Assignment(tuple(choices))):
                    state["stop"] = True
            return
        for a in menu[i]:
            choices[i - 1] = a
            if a == VOID:
                search(i + 1)
            else:
                members[a].append(i)
                if viable(a, i + 1):
                    search(i + 1)
                members[a].pop()
            if state["stop"]:
                break
        choices[i - 1] = VOID

    search(1)
    return state["visited"]


def _find_in_branch(args) -> tuple[int, tuple[int, ...] | None]:
    instance, concept, first_choice, budget = args
    found: list[Assignment] = []

    def visitor(assignment: Assignment) -> bool:
        if verify(instance, assignment, concept) is None:
            found.append(assignment)
            return True
        return False

    enumerate_feasible_ir(instance, visitor, budget, _first_choice=first_choice)
    return first_choice, found[0].choices if found else None


def oracle_find(
    instance: Instance,
    concept: str,
    budget: int | None = None,
    jobs: int = 1,
) -> Assignment | None:
    """First stable assignment in enumeration order, or None if no
    feasible IR assignment is stable (an exhaustive proof of emptiness)."""
    if jobs > 1:
        first_menu = (VOID,) + weak_ir_activities(instance, 1)
        tasks = [(instance, concept, c, budget) for c in first_menu]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = dict(pool.map(_find_in_branch, tasks))
        for c in first_menu:  # branch order = enumeration order
            if results[c] is not None:
                return Assignment(results[c])
        return None

    found: list[Assignment] = []

    def visitor(assignment: Assignment) -> bool:
        if verify(instance, assignment, concept) is None:
            found.append(assignment)
            return True
        return False

    enumerate_feasible_ir(instance, visitor, budget)
    return found[0] if found else None
