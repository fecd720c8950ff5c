"""Rooted-tree dynamic programs behind the forest solvers.

One engine decides both Nash stability and individual stability; the two
concepts differ only in which deviations a combined subtree must already
have excluded.  A table entry at node ``i`` is indexed by

    (covered, act, size, inside)

meaning: the subtree under ``i`` admits a partial assignment in which the
set of activities used inside the subtree is exactly ``covered``; ``i``
does ``act`` (0 = void) in a group of ``size`` players of which
``inside`` lie in the subtree; nobody in the subtree has a relevant
deviation decided entirely inside the subtree; and every player in the
subtree likes her own alternative at least as much as starting any
activity outside ``used`` alone (those activities stay empty everywhere,
so that deviation is always open).

Deviations that cross the subtree boundary are settled at the moment a
child is combined into its parent.  Deviations *into* the group at ``i``
are the delicate case:

* For Nash stability the main table already excludes them (an adjacent
  outsider must simply not prefer joining).
* For individual stability the table is refined by two extra truth
  values: ``G`` marks states realisable with some group member vetoing
  any joiner, ``H`` marks states realisable with no adjacent outsider in
  the subtree wanting to join.  A group completed inside a subtree and
  embedded at its parent is safe iff it is G- or H-realisable and the
  parent herself is blocked (cannot join, does not want to, or is
  vetoed).

Children are combined by a small reachability DP over (subset of sibling
activity bundles realised, group members routed so far), which replaces
randomised colour coding and is exact.  A randomised colouring mode
(repeat until the per-check failure probability drops below ``eps``) is
kept for comparison; it needs a seeded RNG and may err on the "no" side
with probability at most ``eps`` per check.
"""

from __future__ import annotations

import math
import random
from collections import deque
from functools import lru_cache

from .graph import classify_topology
from .model import VOID, Assignment, Instance, UnsupportedTopology

F, G, H = 1, 2, 4

NS_TRACKS = (F,)
IS_TRACKS = (F, G, H)

_VOID_STATE = (0, VOID, 1, 1)


@lru_cache(maxsize=None)
def partitions_of_bits(mask: int) -> tuple[tuple[int, ...], ...]:
    """All set partitions of the bits of ``mask`` as tuples of sub-masks.

    Canonical order: each bit in turn joins an existing block or opens a
    new one; blocks keep their creation order (lowest bit first).
    """
    bits = []
    m = mask
    while m:
        b = m & -m
        bits.append(b)
        m ^= b
    if not bits:
        return ((),)
    out: list[tuple[int, ...]] = []

    def rec(idx: int, blocks: list[int]) -> None:
        if idx == len(bits):
            out.append(tuple(blocks))
            return
        b = bits[idx]
        for j in range(len(blocks)):
            blocks[j] |= b
            rec(idx + 1, blocks)
            blocks[j] ^= b
        blocks.append(b)
        rec(idx + 1, blocks)
        blocks.pop()

    rec(0, [])
    return tuple(out)


@lru_cache(maxsize=None)
def size_options(instance: Instance, component: tuple, activity: int) -> tuple[int, ...]:
    """Group sizes for ``activity`` that enough component members accept.

    A group of size k needs k members who each weakly prefer
    (activity, k) to doing nothing, so sizes failing that count can be
    discarded outright.
    """
    comp = tuple(component)
    out = []
    for k in range(1, len(comp) + 1):
        cnt = 0
        for j in comp:
            if instance.rank(j, activity, k) <= instance.rank_void[j - 1]:
                cnt += 1
        if cnt >= k:
            out.append(k)
    return tuple(out)


class TreeTables:
    """Stability tables for one tree component, computed on demand.

    ``used`` is the bitmask of activities assumed used somewhere in the
    final assignment (bit a-1 for activity a).  ``concept`` is ``"ns"``
    or ``"is"``.
    """

    def __init__(
        self,
        instance: Instance,
        component,
        used: int,
        concept: str,
        coloring: str = "deterministic",
        rng: random.Random | None = None,
        eps: float = 1e-6,
    ):
        if concept not in ("ns", "is"):
            raise ValueError(f"concept must be 'ns' or 'is', got {concept!r}")
        if coloring not in ("deterministic", "randomized"):
            raise ValueError(f"unknown coloring mode {coloring!r}")
        if coloring == "randomized" and rng is None:
            raise ValueError("randomized coloring needs a seeded RNG")
        self.instance = instance
        self.comp = tuple(sorted(component))
        self.used = used
        self.concept = concept
        self.coloring = coloring
        self.rng = rng
        self.eps = eps
        self.csize = len(self.comp)

        members = set(self.comp)
        inner_edges = sum(1 for u, v in instance.edges if u in members and v in members)
        self.root = self.comp[0]
        parent: dict[int, int | None] = {self.root: None}
        order = [self.root]
        queue = deque([self.root])
        while queue:
            u = queue.popleft()
            for v in instance.adjacency[u]:
                if v in members and v not in parent:
                    parent[v] = u
                    order.append(v)
                    queue.append(v)
        if len(order) != self.csize or inner_edges != self.csize - 1:
            raise UnsupportedTopology("component does not induce a tree")
        kids: dict[int, list[int]] = {i: [] for i in self.comp}
        for v, u in parent.items():
            if u is not None:
                kids[u].append(v)
        self.children = {i: tuple(sorted(vs)) for i, vs in kids.items()}
        self.subtree_size: dict[int, int] = {}
        for v in reversed(order):
            self.subtree_size[v] = 1 + sum(self.subtree_size[c] for c in self.children[v])

        self._rank_void = {i: instance.rank_void[i - 1] for i in self.comp}
        # best singleton a player could always defect to: doing nothing,
        # or any activity guaranteed unused
        self.best_alone: dict[int, int] = {}
        unused = [a for a in range(1, instance.p + 1) if not (used >> (a - 1)) & 1]
        for i in self.comp:
            best = self._rank_void[i]
            for a in unused:
                r = instance.rank(i, a, 1)
                if r < best:
                    best = r
            self.best_alone[i] = best

        self.k_options: dict[int, tuple[int, ...]] = {}
        m = used
        while m:
            b = m & -m
            a = b.bit_length()
            self.k_options[a] = size_options(instance, self.comp, a)
            m ^= b

        self._groups: dict[tuple, dict[int, int]] = {}
        self._plans: dict[tuple, tuple] = {}
        self._tracks = NS_TRACKS if concept == "ns" else IS_TRACKS

    # ------------------------------------------------------------------
    # table access

    def flags(self, node: int, state: tuple) -> int:
        covered, a, k, t = state
        return self._group(node, covered, a, k).get(t, 0)

    def accepting_states(self, covered: int):
        """Root states at which a stable assignment covering exactly
        ``covered`` exists, with the track that realises each.

        A group containing the root lies fully inside the component, so
        acceptance requires inside == size.  For individual stability a
        root group must be joiner-proof on its own: vetoed (G) or
        unenvied (H).
        """
        tracks = (F,) if self.concept == "ns" else (G, H)
        state = (covered, VOID, 1, 1)
        fl = self.flags(self.root, state)
        for tr in tracks:
            if fl & tr:
                yield state, tr
                break
        m = covered
        while m:
            b = m & -m
            a = b.bit_length()
            m ^= b
            for k in self.k_options.get(a, ()):
                state = (covered, a, k, k)
                fl = self.flags(self.root, state)
                for tr in tracks:
                    if fl & tr:
                        yield state, tr
                        break

    def first_accepting(self, covered: int):
        return next(self.accepting_states(covered), None)

    def decide(self, covered: int) -> bool:
        return self.first_accepting(covered) is not None

    def extract(self, state: tuple, track: int) -> dict[int, int]:
        """Partial assignment (player -> activity) realising a true state."""
        out: dict[int, int] = {}
        self._extract_into(self.root, state, track, out)
        return out

    def _extract_into(self, node: int, state: tuple, track: int, out: dict) -> None:
        covered, a, k, t = state
        out[node] = a
        if not self.children[node]:
            return
        plan = self._plans[(node, covered, a, k, t, track)]
        for child, cstate, ctrack in plan:
            self._extract_into(child, cstate, ctrack, out)

    # ------------------------------------------------------------------
    # table computation

    def _group(self, node: int, covered: int, a: int, k: int) -> dict[int, int]:
        key = (node, covered, a, k)
        cached = self._groups.get(key)
        if cached is None:
            self._groups[key] = cached = {}  # break self-recursion defensively
            cached.update(self._compute_group(node, covered, a, k))
        return cached

    def _compute_group(self, node: int, covered: int, a: int, k: int) -> dict[int, int]:
        inst = self.instance
        if covered & ~self.used:
            return {}
        if a == VOID:
            if k != 1:
                return {}
        else:
            if not (covered >> (a - 1)) & 1:
                return {}
            if k not in self.k_options.get(a, ()):
                return {}
        dsize = self.subtree_size[node]
        if covered.bit_count() > dsize:
            return {}
        # the node's own anchor: she must like (act, size) at least as much
        # as the best singleton she can always defect to
        if inst.rank(node, a, k) > self.best_alone[node]:
            return {}

        children = self.children[node]
        if not children:
            expected = 0 if a == VOID else 1 << (a - 1)
            if covered != expected:
                return {}
            if self.concept == "ns":
                return {1: F}
            fl = F | H
            if a == VOID or inst.rank(node, a, k) < inst.rank(node, a, k + 1):
                fl |= G
            return {1: fl}

        max_t = min(k, dsize)
        min_t = max(1, k - (self.csize - dsize))
        if min_t > max_t:
            return {}

        abit = 0 if a == VOID else 1 << (a - 1)
        parts_pool = covered & ~abit
        result: dict[int, int] = {}
        want = 0
        for tr in self._tracks:
            want |= tr
        todo = {t: want for t in range(min_t, max_t + 1)}

        g_seed = 1 if (a == VOID or inst.rank(node, a, k) < inst.rank(node, a, k + 1)) else 0

        for parts in partitions_of_bits(parts_pool):
            if not todo:
                break
            self._run_partition(node, covered, a, k, parts, children, g_seed, result, todo)
        return result

    def _run_partition(self, node, covered, a, k, parts, children, g_seed, result, todo):
        """Try one split of the sibling activities into bundles, each to be
        realised by exactly one child subtree; update ``result``/``todo``."""
        randomized = self.coloring == "randomized" and len(parts) >= 2
        colorings: list[tuple[int, ...] | None]
        if randomized:
            m = len(parts)
            repeats = math.ceil(m**m * math.log(1.0 / self.eps))
            colorings = [
                tuple(self.rng.randrange(m) for _ in children) for _ in range(repeats)
            ]
        else:
            colorings = [None]

        track_runs = []
        for track in self._tracks:
            if any(flags & track for flags in todo.values()):
                track_runs.append(track)

        for track in track_runs:
            opts_all = [self._child_options(node, c, a, k, parts, track) for c in children]
            if any(not o for o in opts_all):
                continue
            for chi in colorings:
                if chi is None:
                    opts = opts_all
                else:
                    opts = [
                        [o for o in copts if o[0] == 0 or o[0] == (1 << chi[ci])]
                        for ci, copts in enumerate(opts_all)
                    ]
                    if any(not o for o in opts):
                        continue
                self._run_reach(node, covered, a, k, parts, children, opts,
                                track, g_seed, result, todo)
                if not any(flags & track for flags in todo.values()):
                    break

    def _run_reach(self, node, covered, a, k, parts, children, opts,
                   track, g_seed, result, todo):
        full = (1 << len(parts)) - 1
        max_s = max(todo) - 1 if todo else -1
        if max_s < 0:
            return
        flagged = track == G and g_seed == 0
        start = (0, 0, 0) if flagged else (0, 0)
        layer: dict[tuple, None] = {start: None}
        preds: list[dict] = []
        for copts in opts:
            nxt: dict[tuple, tuple] = {}
            for key in layer:
                if flagged:
                    mask, s, flag = key
                else:
                    mask, s = key
                for dmask, ds, gpot, desc in copts:
                    if mask & dmask:
                        continue
                    s2 = s + ds
                    if s2 > max_s:
                        continue
                    if flagged:
                        nk = (mask | dmask, s2, flag | gpot)
                    else:
                        nk = (mask | dmask, s2)
                    if nk not in nxt:
                        nxt[nk] = (key, desc)
            if not nxt:
                return
            preds.append(nxt)
            layer = nxt

        for key in list(layer):
            if flagged:
                mask, s, flag = key
                if flag != 1:
                    continue
            else:
                mask, s = key
            if mask != full:
                continue
            t = s + 1
            if t not in todo or not (todo[t] & track):
                continue
            plan = []
            cur = key
            for ci in reversed(range(len(children))):
                prev, desc = preds[ci][cur]
                cstate, ctrack, gpot = desc
                if flagged and gpot and cur[2] and not prev[2]:
                    ctrack = G
                plan.append((children[ci], cstate, ctrack))
                cur = prev
            plan.reverse()
            self._plans[(node, covered, a, k, t, track)] = tuple(plan)
            result[t] = result.get(t, 0) | track
            remaining = todo[t] & ~track
            if track == F and self.concept == "is":
                # a void node's group conditions are vacuous, and a node
                # vetoing by her own preference makes any realisation G
                if a == VOID:
                    for extra in (G, H):
                        if remaining & extra:
                            self._plans[(node, covered, a, k, t, extra)] = tuple(plan)
                            result[t] |= extra
                            remaining &= ~extra
                elif g_seed and (remaining & G):
                    self._plans[(node, covered, a, k, t, G)] = tuple(plan)
                    result[t] |= G
                    remaining &= ~G
            if remaining:
                todo[t] = remaining
            else:
                del todo[t]

    # ------------------------------------------------------------------
    # per-child pieces

    def _child_options(self, node, child, a, k, parts, track):
        """Moves one child can contribute, as (part-bit, members, g-potential,
        (child-state, child-track, g-potential)) tuples.

        Every child picks exactly one move: stay void (all-void subtree),
        route members into the node's group, realise one sibling bundle
        separated from the group, or both at once.
        """
        inst = self.instance
        ns = self.concept == "ns"
        rv = self._rank_void[child]
        opts = []
        abit = 0 if a == VOID else 1 << (a - 1)
        x_hi = min(k - 1, self.subtree_size[child])

        void_fl = self._group(child, 0, VOID, 1).get(1, 0)
        if void_fl & F:
            if a == VOID or not (ns or track == H) or inst.rank(child, a, k + 1) >= rv:
                opts.append((0, 0, 0, (_VOID_STATE, F, 0)))

        if a != VOID:
            join_track = H if track == H else F
            grp = self._group(child, abit, a, k)
            for x in range(1, x_hi + 1):
                fl = grp.get(x, 0)
                if fl & join_track:
                    gpot = 1 if fl & G else 0
                    opts.append((0, x, gpot, ((abit, a, k, x), join_track, gpot)))

        for pi, pmask in enumerate(parts):
            pick = self._separated_pick(node, child, pmask, a, k, track)
            if pick is not None:
                b, size, ctrack = pick
                opts.append((1 << pi, 0, 0, ((pmask, b, size, size), ctrack, 0)))
            if a != VOID:
                join_track = H if track == H else F
                grp = self._group(child, pmask | abit, a, k)
                for x in range(1, x_hi + 1):
                    fl = grp.get(x, 0)
                    if fl & join_track:
                        gpot = 1 if fl & G else 0
                        opts.append(((1 << pi), x, gpot,
                                     ((pmask | abit, a, k, x), join_track, gpot)))
        return opts

    def _separated_pick(self, node, child, pmask, a, k, track):
        """First alternative (b, size) under which the child realises the
        bundle ``pmask`` fully separated from the node's group.

        Separation requires that neither side of the new tree edge wants
        to defect across it: the node must not prefer joining the child's
        group, and (for Nash stability, or the H refinement) the child
        must not prefer joining the node's.  For individual stability a
        vetoing member (G) also blocks the node.
        """
        inst = self.instance
        ns = self.concept == "ns"
        need_child_calm = ns or track == H
        dchild = self.subtree_size[child]
        rank_node_own = inst.rank(node, a, k)

        candidates = []
        m = pmask
        while m:
            bbit = m & -m
            b = bbit.bit_length()
            m ^= bbit
            for size in self.k_options.get(b, ()):
                if size <= dchild:
                    candidates.append((b, size))
        candidates.append((VOID, 1))

        for b, size in candidates:
            fl = self._group(child, pmask, b, size).get(size, 0)
            if ns:
                if not fl & F:
                    continue
                if b != VOID and rank_node_own > inst.rank(node, b, size + 1):
                    continue
                ctrack = F
            else:
                if not fl & (G | H):
                    continue
                if not (b == VOID or rank_node_own <= inst.rank(node, b, size + 1) or fl & G):
                    continue
                ctrack = G if fl & G else H
            if need_child_calm and a != VOID:
                if inst.rank(child, b, size) > inst.rank(child, a, k + 1):
                    continue
            return (b, size, ctrack)
        return None


def covering_options(instance: Instance, used: int, components: tuple) -> bool:
    """Quick necessary check: every assumed-used activity must admit some
    feasible group size in at least one component."""
    m = used
    while m:
        bbit = m & -m
        a = bbit.bit_length()
        m ^= bbit
        if not any(size_options(instance, comp, a) for comp in components):
            return False
    return True


def solve_forest(
    instance: Instance,
    concept: str,
    coloring: str = "deterministic",
    seed: int | None = None,
    eps: float = 1e-6,
) -> Assignment | None:
    """Stable assignment on a forest, or None if none exists.

    Outer loop over the global set of used activities; components then
    cover that set exactly, each with pairwise disjoint contributions
    (a group can never span two components).  Deterministic: first
    success in a fixed iteration order wins.
    """
    topo = classify_topology(instance)
    if not topo.is_forest:
        raise UnsupportedTopology("solver requires an acyclic communication graph")
    if coloring == "randomized" and seed is None:
        raise ValueError("randomized coloring requires an explicit seed")
    rng = random.Random(seed) if coloring == "randomized" else None
    comps = topo.components
    p = instance.p

    for used in range(1 << p):
        if not covering_options(instance, used, comps):
            continue
        tables = [
            TreeTables(instance, comp, used, concept, coloring, rng, eps)
            for comp in comps
        ]
        steps: list[dict] = []
        frontier: dict[int, None] = {0: None}
        for tb in tables:
            step: dict[int, tuple] = {}
            for cov in frontier:
                rem = used & ~cov
                sub = rem
                while True:
                    acc = tb.first_accepting(sub)
                    if acc is not None:
                        after = cov | sub
                        if after not in step:
                            step[after] = (cov, acc[0], acc[1])
                    if sub == 0:
                        break
                    sub = (sub - 1) & rem
            if not step:
                break
            steps.append(step)
            frontier = step
        else:
            if used in frontier:
                choice: dict[int, int] = {}
                cov = used
                for idx in reversed(range(len(tables))):
                    prev, state, track = steps[idx][cov]
                    choice.update(tables[idx].extract(state, track))
                    cov = prev
                return Assignment(tuple(choice[i] for i in instance.players))
    return None
