"""Individual stability on acyclic graphs.

Two solvers: the forest table solver (same engine as Nash stability,
with the joiner-acceptance refinements), and a polynomial greedy that
always succeeds when every activity is copyable, i.e. has at least n
preference-identical copies, so a fresh copy is always available.
"""

from __future__ import annotations

from collections import deque

from .graph import classify_topology
from .model import VOID, Assignment, Instance, UnsupportedTopology, equivalent
from .treedp import TreeTables, solve_forest


class IsTreeTable(TreeTables):
    """Individual-stability tables for one tree component."""

    def __init__(self, instance: Instance, component, used: int, **kwargs):
        super().__init__(instance, component, used, concept="is", **kwargs)


def solve_is_forest(
    instance: Instance,
    coloring: str = "deterministic",
    seed: int | None = None,
    eps: float = 1e-6,
) -> Assignment | None:
    """Individually stable assignment of a forest instance, or None."""
    return solve_forest(instance, "is", coloring=coloring, seed=seed, eps=eps)


def solve_is_copyable_acyclic(instance: Instance) -> Assignment:
    """Individually stable assignment when all activities are copyable
    and the graph is a forest; always returns one.

    Bottom-up over each rooted tree: when node i is reached, its
    children's subtree assignments are merged with i void; i then takes
    her most preferred available move into a group (ties to the lowest
    activity index).  After the seed move, single-player improvement
    moves inside i's subtree are applied to a fixpoint (lowest player
    first, best target first): going void, starting alone on a fresh
    copy, or joining an adjacent group that unanimously accepts.  Each
    such move is itself a valid deviation, so a fixpoint over the whole
    tree has none left.  A mover's abandoned group may split; the pieces
    are re-coloured onto fresh equivalent copies, which copyability
    guarantees exist.
    """
    topo = classify_topology(instance)
    if not topo.is_forest:
        raise UnsupportedTopology("solver requires an acyclic communication graph")

    n, p = instance.n, instance.p
    # equivalence classes, computed once; the class lookup also backs the
    # copyability precondition (every class needs at least n copies)
    class_of: dict[int, int] = {}
    classes: list[list[int]] = []
    for a in range(1, p + 1):
        for idx, cls in enumerate(classes):
            if equivalent(instance, a, cls[0]):
                cls.append(a)
                class_of[a] = idx
                break
        else:
            class_of[a] = len(classes)
            classes.append([a])
    for cls in classes:
        if len(cls) < n:
            name = instance.activities[cls[0] - 1]
            raise UnsupportedTopology(f"activity {cls[0]} ({name}) is not copyable")

    adj = instance.adjacency
    choice: dict[int, int] = {i: VOID for i in instance.players}
    members: dict[int, list[int]] = {}

    def current_rank(j: int) -> int:
        a = choice[j]
        if a == VOID:
            return instance.rank_void[j - 1]
        return instance.rank(j, a, len(members[a]))

    def free_copy(act: int) -> int:
        for b in classes[class_of[act]]:
            if not members.get(b):
                return b
        raise AssertionError("copyability guarantees a free copy")

    def detach(j: int) -> None:
        """Remove j from its group; re-colour split remainders onto fresh
        equivalent copies so every group stays connected."""
        old = choice[j]
        choice[j] = VOID
        if old == VOID:
            return
        rest = [m for m in members[old] if m != j]
        if not rest:
            del members[old]
            return
        pieces = _induced_components(instance, rest)
        members[old] = pieces[0]
        for piece in pieces[1:]:
            fresh = free_copy(old)
            members[fresh] = piece
            for m in piece:
                choice[m] = fresh

    def add_to(j: int, act: int) -> None:
        detach(j)
        members.setdefault(act, []).append(j)
        choice[j] = act

    def best_move(j: int, region: set[int]) -> int | None:
        """Best strictly improving single move for j, or None.

        Targets: the void activity when j's current alternative is below
        doing nothing, a fresh copy alone, or an adjacent group inside
        ``region`` whose members all accept one more player.  Returns the
        target activity (VOID meaning drop out)."""
        cur = current_rank(j)
        best_rank = instance.rank_void[j - 1]
        best_act = VOID if best_rank < cur else None
        if best_act is None:
            best_rank = cur
        for a in range(1, p + 1):
            group = members.get(a, ())
            if group:
                if choice[j] == a:
                    continue
                if not any(m in adj[j] for m in group):
                    continue
                if not set(group) <= region:
                    continue
                size = len(group) + 1
                if not all(
                    instance.rank(m, a, size) <= instance.rank(m, a, size - 1)
                    for m in group
                ):
                    continue
            else:
                size = 1
            r = instance.rank(j, a, size)
            if r < best_rank:
                best_rank, best_act = r, a
        if best_act is not None and best_act != VOID and not members.get(best_act):
            best_act = free_copy(best_act)
        return best_act

    def settle(region: set[int]) -> None:
        """Apply improvement moves inside ``region`` until none remain."""
        limit = 40 * (n + 1) * (p + 2) + 100
        for _ in range(limit):
            for j in sorted(region):
                target = best_move(j, region)
                if target is not None:
                    if target == VOID:
                        detach(j)
                    else:
                        add_to(j, target)
                    break
            else:
                return
        raise AssertionError("improvement dynamics failed to settle")

    for comp in topo.components:
        root = comp[0]
        inside = set(comp)
        parent: dict[int, int | None] = {root: None}
        order = [root]
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if v in inside and v not in parent:
                    parent[v] = u
                    order.append(v)
                    queue.append(v)
        subtree: dict[int, set[int]] = {v: {v} for v in comp}
        for v in reversed(order):
            if parent[v] is not None:
                subtree[parent[v]] |= subtree[v]

        for i in reversed(order):
            seed = best_move(i, subtree[i])
            if seed is None:
                continue
            if seed == VOID:
                detach(i)
            else:
                add_to(i, seed)
            settle(subtree[i])

    return Assignment(tuple(choice[i] for i in instance.players))


def _induced_components(instance: Instance, players) -> list[list[int]]:
    """Connected components of the induced subgraph, smallest member first."""
    remaining = set(players)
    out: list[list[int]] = []
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
        out.append(sorted(comp))
    return sorted(out, key=lambda c: c[0])
