"""Nash stability on cliques via per-size-vector flow feasibility.

The outer loop guesses how many players each activity gets (a size
vector); a guess is realisable iff a bipartite flow problem has an
integral solution.  A player may feed an activity only if she weakly
prefers the activity at its guessed size both to doing nothing and to
joining any other activity at its guessed-size-plus-one; players for
whom staying void is itself unstable (they strictly prefer joining
something) must all be matched, which is enforced by saturating their
source arcs first and only then opening the others.  Augmenting paths
leave the source through unsaturated arcs only, so the second phase
never unmatches a must-assign player.
"""

from __future__ import annotations

import itertools
from collections import deque
from concurrent.futures import ProcessPoolExecutor

from .graph import classify_topology
from .model import VOID, Assignment, Instance, UnsupportedTopology

SizeVector = tuple[int, ...]


class FlowNetwork:
    """Integer-capacity network with Edmonds-Karp augmentation.

    Arcs can be added between augmentation rounds; the residual state is
    kept, so later rounds extend the current flow rather than restart.
    """

    def __init__(self):
        self.cap: dict[int, dict[int, int]] = {}

    def add_arc(self, u: int, v: int, capacity: int) -> None:
        self.cap.setdefault(u, {})
        self.cap.setdefault(v, {})
        self.cap[u][v] = self.cap[u].get(v, 0) + capacity
        self.cap[v].setdefault(u, 0)

    def augment(self, source: int, sink: int) -> int:
        """Push flow along shortest residual paths until none remains;
        returns the amount added in this round."""
        total = 0
        while True:
            prev: dict[int, int] = {source: source}
            queue = deque([source])
            while queue and sink not in prev:
                u = queue.popleft()
                for v in sorted(self.cap[u]):
                    if v not in prev and self.cap[u][v] > 0:
                        prev[v] = u
                        queue.append(v)
            if sink not in prev:
                return total
            path = [sink]
            while path[-1] != source:
                path.append(prev[path[-1]])
            path.reverse()
            push = min(self.cap[path[i]][path[i + 1]] for i in range(len(path) - 1))
            for i in range(len(path) - 1):
                u, v = path[i], path[i + 1]
                self.cap[u][v] -= push
                self.cap[v][u] += push
            total += push


def _try_size_vector(instance: Instance, sizes: SizeVector) -> Assignment | None:
    n, p = instance.n, instance.p
    rank = instance.rank
    rank_void = instance.rank_void

    admissible: dict[int, list[int]] = {}
    for i in instance.players:
        acts = []
        for a in range(1, p + 1):
            k = sizes[a - 1]
            if k == 0:
                continue
            r = rank(i, a, k)
            if r > rank_void[i - 1]:
                continue
            if any(r > rank(i, b, sizes[b - 1] + 1) for b in range(1, p + 1) if b != a):
                continue
            acts.append(a)
        admissible[i] = acts

    must = [
        i for i in instance.players
        if any(rank(i, b, sizes[b - 1] + 1) < rank_void[i - 1] for b in range(1, p + 1))
    ]
    if any(not admissible[i] for i in must):
        return None
    for a in range(1, p + 1):
        if sizes[a - 1] >= 1 and not any(a in admissible[i] for i in instance.players):
            return None

    source, sink = 0, n + p + 1
    net = FlowNetwork()
    net.cap.setdefault(source, {})
    net.cap.setdefault(sink, {})
    for a in range(1, p + 1):
        if sizes[a - 1] >= 1:
            net.add_arc(n + a, sink, sizes[a - 1])
    for i in instance.players:
        for a in admissible[i]:
            net.add_arc(i, n + a, 1)

    for i in must:
        net.add_arc(source, i, 1)
    if net.augment(source, sink) < len(must):
        return None
    for i in instance.players:
        if i not in must and admissible[i]:
            net.add_arc(source, i, 1)
    net.augment(source, sink)

    target = sum(sizes)
    matched = sum(sizes[a - 1] - net.cap[n + a].get(sink, 0)
                  for a in range(1, p + 1) if sizes[a - 1] >= 1)
    if matched != target:
        return None

    choices = []
    for i in instance.players:
        picked = VOID
        for a in admissible[i]:
            if net.cap[i][n + a] == 0:  # unit arc fully used
                picked = a
                break
        choices.append(picked)
    return Assignment(tuple(choices))


def _scan_chunk(args) -> tuple[int, tuple[int, ...] | None]:
    instance, offset, chunk = args
    for idx, sizes in enumerate(chunk):
        result = _try_size_vector(instance, sizes)
        if result is not None:
            return offset + idx, result.choices
    return -1, None


def solve_ns_clique(instance: Instance, jobs: int = 1) -> Assignment | None:
    """Nash stable assignment on a clique, or None if none exists.

    Size vectors are tried in lexicographic order; the first realisable
    one wins, so output is deterministic (also under ``jobs`` > 1).
    """
    topo = classify_topology(instance)
    if not topo.is_clique:
        raise UnsupportedTopology("flow solver requires a clique communication graph")
    n, p = instance.n, instance.p
    vectors = (
        sizes for sizes in itertools.product(range(n + 1), repeat=p)
        if sum(sizes) <= n
    )
    if jobs <= 1:
        for sizes in vectors:
            result = _try_size_vector(instance, sizes)
            if result is not None:
                return result
        return None

    # waves of `jobs` chunks keep memory bounded and allow an early stop
    # while preserving the sequential first-success order
    chunk_size = 256
    offset = 0
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        while True:
            wave = []
            for _ in range(jobs):
                chunk = tuple(itertools.islice(vectors, chunk_size))
                if not chunk:
                    break
                wave.append((instance, offset, chunk))
                offset += len(chunk)
            if not wave:
                return None
            for _, choices in pool.map(_scan_chunk, wave):
                if choices is not None:
                    return Assignment(choices)
