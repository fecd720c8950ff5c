"""Connectivity primitives and topology classification for the communication graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .model import BudgetExceeded, Instance


@dataclass(frozen=True)
class Topology:
    """Exact classification of the communication graph.

    ``kind`` is the most specific single label; the boolean facets let
    dispatch code ask the question it actually cares about (a path is
    also a tree and a forest, a K2 is also a clique).
    """

    kind: str
    components: tuple[tuple[int, ...], ...]
    max_component_size: int
    is_clique: bool
    is_path: bool
    is_star: bool
    is_tree: bool
    is_forest: bool


def components(instance: Instance) -> tuple[tuple[int, ...], ...]:
    """Connected components as sorted tuples, ordered by smallest member."""
    seen: set[int] = set()
    comps = []
    adj = instance.adjacency
    for start in instance.players:
        if start in seen:
            continue
        comp = {start}
        queue = deque([start])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v not in comp:
                    comp.add(v)
                    queue.append(v)
        seen |= comp
        comps.append(tuple(sorted(comp)))
    return tuple(comps)


def is_connected_subset(instance: Instance, subset) -> bool:
    """True iff ``subset`` is empty or induces a connected subgraph."""
    members = set(subset)
    if not members:
        return True
    adj = instance.adjacency
    start = next(iter(members))
    reached = {start}
    queue = deque([start])
    while queue:
        u = queue.popleft()
        for v in adj[u]:
            if v in members and v not in reached:
                reached.add(v)
                queue.append(v)
    return len(reached) == len(members)


def enumerate_connected_subsets(instance: Instance, budget: int | None = None) -> list[tuple[int, ...]]:
    """All non-empty connected subsets, ordered by size then members.

    Raises :class:`BudgetExceeded` as soon as the count would pass
    ``budget`` (callers use this to refuse hopeless enumerations).
    """
    adj = instance.adjacency
    found: set[frozenset[int]] = set()
    stack: list[frozenset[int]] = []
    for i in instance.players:
        s = frozenset((i,))
        found.add(s)
        stack.append(s)
    if budget is not None and len(found) > budget:
        raise BudgetExceeded(f"more than {budget} connected subsets")
    while stack:
        current = stack.pop()
        for u in current:
            for v in adj[u]:
                if v in current:
                    continue
                grown = current | {v}
                if grown not in found:
                    found.add(grown)
                    if budget is not None and len(found) > budget:
                        raise BudgetExceeded(f"more than {budget} connected subsets")
                    stack.append(grown)
    return sorted((tuple(sorted(s)) for s in found), key=lambda t: (len(t), t))


def classify_topology(instance: Instance) -> Topology:
    comps = components(instance)
    n = instance.n
    m = len(instance.edges)
    max_size = max(len(c) for c in comps)
    connected = len(comps) == 1
    forest = m == n - len(comps)  # every component a tree
    tree = connected and forest

    degrees = {i: len(instance.adjacency[i]) for i in instance.players}
    clique = connected and m == n * (n - 1) // 2
    if n == 1:
        path = star = True
    else:
        path = tree and all(d <= 2 for d in degrees.values()) \
            and sum(1 for d in degrees.values() if d == 1) == 2
        star = tree and max(degrees.values()) == n - 1

    if clique:
        kind = "clique"
    elif path:
        kind = "path"
    elif star:
        kind = "star"
    elif tree:
        kind = "tree"
    elif forest:
        kind = "forest"
    elif not connected:
        kind = "small-components"
    else:
        kind = "general"

    return Topology(
        kind=kind,
        components=comps,
        max_component_size=max_size,
        is_clique=clique,
        is_path=path,
        is_star=star,
        is_tree=tree,
        is_forest=forest,
    )


def connected_prefix(instance: Instance, seed, allowed, size: int) -> tuple[int, ...] | None:
    """Grow ``seed`` inside ``allowed`` to a connected set of exactly ``size``.

    Growth is breadth-first with smaller players dequeued first, so the
    result is deterministic.  With an empty seed, each component of the
    induced subgraph on ``allowed`` is tried in order of its smallest
    vertex.  Returns None when no such set exists.
    """
    seed_set = set(seed)
    allowed_set = set(allowed)
    if not seed_set <= allowed_set or len(seed_set) > size:
        return None
    adj = instance.adjacency

    def grow(start: list[int]) -> tuple[int, ...] | None:
        chosen = list(start)
        in_set = set(start)
        queue = deque(sorted(start))
        while queue and len(chosen) < size:
            u = queue.popleft()
            for v in adj[u]:
                if v in allowed_set and v not in in_set:
                    in_set.add(v)
                    chosen.append(v)
                    queue.append(v)
                    if len(chosen) == size:
                        break
        return tuple(sorted(chosen)) if len(chosen) == size else None

    if seed_set:
        return grow(sorted(seed_set))
    remaining = set(allowed_set)
    while remaining:
        root = min(remaining)
        comp = {root}
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v in remaining and v not in comp:
                    comp.add(v)
                    queue.append(v)
        remaining -= comp
        if len(comp) >= size:
            result = grow([min(comp)])
            if result is not None:
                return result
    return None
