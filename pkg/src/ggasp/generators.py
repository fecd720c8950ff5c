"""Instance constructors: worked micro-examples, hardness-reduction
instances with per-player role metadata and witness assignments, seeded
random instances, and copyable variants.

The three reductions build, respectively:

* ``clique-ns``  — from finding a k-clique in a regular graph, to Nash
  stability on a clique of players; interval-coded coalition sizes keep
  vertex coalitions apart and two stalker-style gadgets pin the rest.
* ``hitting-set-core`` — from hitting set, to core stability on a star;
  the element universe is tripled so the hitting-set size k survives the
  reduction as 3k.
* ``mcc-ns``     — from multicolored clique, to Nash stability on a
  clique with few players; one gadget per color selects a vertex, one
  per color pair selects an edge, and the gadgets destabilise unless the
  selections agree on endpoints.

All vertex/element labels are normalised to strings so metadata survives
a JSON round trip.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .model import VOID, Assignment, Instance, validate_instance


@dataclass
class ReductionMetadata:
    """Role annotations emitted alongside a generated reduction instance."""

    kind: str
    player_roles: dict[int, str] = field(default_factory=dict)
    activity_roles: dict[int, str] = field(default_factory=dict)
    data: dict = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "player_roles": {str(k): v for k, v in self.player_roles.items()},
            "activity_roles": {str(k): v for k, v in self.activity_roles.items()},
            "data": self.data,
        }

    @classmethod
    def from_dict(cls, d: dict) -> "ReductionMetadata":
        return cls(
            kind=d["kind"],
            player_roles={int(k): v for k, v in d.get("player_roles", {}).items()},
            activity_roles={int(k): v for k, v in d.get("activity_roles", {}).items()},
            data=d.get("data", {}),
        )


# ----------------------------------------------------------------------
# worked examples

def gen_example(name: str, p: int = 1) -> Instance:
    """The three canonical micro-instances.

    ``stalker(p)``: two players, a loner approving every (a, 1) and a
    stalker approving every (a, 2); no Nash stable assignment exists.
    ``no_is``: a 3-player path with strict preferences and no
    individually stable assignment.  ``no_core``: a 3-player path with
    an empty core.
    """
    key = name.replace("-", "_").lower()
    if key == "stalker":
        if p < 1:
            raise ValueError("stalker instance needs at least one activity")
        acts = ["a"] if p == 1 else [f"a{i}" for i in range(1, p + 1)]
        raw = {
            "players": 2,
            "activities": acts,
            "edges": [[1, 2]],
            "preferences": [
                [[[a, 1] for a in range(1, p + 1)], [[0, 1]]],
                [[[a, 2] for a in range(1, p + 1)], [[0, 1]]],
            ],
        }
    elif key == "no_is":
        raw = {
            "players": 3,
            "activities": ["a", "b", "c"],
            "edges": [[1, 2], [2, 3]],
            "preferences": [
                [[[2, 2]], [[1, 1]], [[3, 3]], [[3, 2]], [[3, 1]], [[0, 1]]],
                [[[3, 3]], [[3, 2]], [[1, 2]], [[2, 2]], [[2, 1]], [[0, 1]]],
                [[[3, 3]], [[1, 2]], [[1, 1]], [[0, 1]]],
            ],
        }
    elif key == "no_core":
        raw = {
            "players": 3,
            "activities": ["a", "b"],
            "edges": [[1, 2], [2, 3]],
            "preferences": [
                [[[2, 2]], [[1, 3]], [[0, 1]]],
                [[[1, 2]], [[2, 2]], [[1, 3]], [[0, 1]]],
                [[[1, 3]], [[2, 1]], [[1, 2]], [[0, 1]]],
            ],
        }
    else:
        raise ValueError(f"unknown example {name!r}; expected stalker, no_is or no_core")
    return validate_instance(raw)


# ----------------------------------------------------------------------
# random instances

def gen_random(
    seed: int,
    kind: str,
    n: int,
    p: int,
    approval_density: float = 0.5,
    tie_density: float = 0.2,
) -> Instance:
    """Reproducible random instance on the requested topology.

    Topologies: path, star, clique, tree, forest, general (edge
    probability 0.4).  Each alternative is approved independently with
    ``approval_density``; approved alternatives are shuffled into a
    strict chain whose adjacent entries merge with ``tie_density``.
    """
    if n < 1 or p < 1:
        raise ValueError("need n >= 1 players and p >= 1 activities")
    rng = random.Random(seed)
    edges = _random_edges(rng, kind, n)
    prefs = []
    for _ in range(n):
        approved = [
            (a, k)
            for a in range(1, p + 1)
            for k in range(1, n + 1)
            if rng.random() < approval_density
        ]
        rng.shuffle(approved)
        tiers: list[list[tuple[int, int]]] = []
        for alt in approved:
            if tiers and rng.random() < tie_density:
                tiers[-1].append(alt)
            else:
                tiers.append([alt])
        tiers.append([(VOID, 1)])
        prefs.append([[list(alt) for alt in tier] for tier in tiers])
    if p <= 26:
        names = [chr(ord("a") + i) for i in range(p)]
    else:
        names = [f"a{i}" for i in range(1, p + 1)]
    return validate_instance({
        "players": n,
        "activities": names,
        "edges": [list(e) for e in edges],
        "preferences": prefs,
    })


def _random_edges(rng: random.Random, kind: str, n: int) -> list[tuple[int, int]]:
    kind = kind.replace("_", "-").lower()
    if kind == "path":
        return [(i, i + 1) for i in range(1, n)]
    if kind == "star":
        return [(1, i) for i in range(2, n + 1)]
    if kind == "clique":
        return [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if kind == "tree":
        return [(rng.randint(1, v - 1), v) for v in range(2, n + 1)]
    if kind == "forest":
        return [
            (rng.randint(1, v - 1), v)
            for v in range(2, n + 1)
            if rng.random() < 0.75
        ]
    if kind == "general":
        return [
            (u, v)
            for u in range(1, n + 1)
            for v in range(u + 1, n + 1)
            if rng.random() < 0.4
        ]
    raise ValueError(f"unknown topology kind {kind!r}")


def make_copyable(instance: Instance) -> Instance:
    """Replicate each activity into n preference-identical copies, making
    every activity copyable while preserving the preference structure."""
    n = instance.n

    def copies(a: int) -> list[int]:
        return [(a - 1) * n + j for j in range(1, n + 1)]

    names = [
        f"{name}~{j}"
        for name in instance.activities
        for j in range(1, n + 1)
    ]
    prefs = []
    for pref in instance.prefs:
        tiers = []
        for tier in pref.tiers:
            out = []
            for a, size in sorted(tier):
                if a == VOID:
                    out.append([VOID, 1])
                else:
                    out.extend([c, size] for c in copies(a))
            tiers.append(out)
        prefs.append(tiers)
    return validate_instance({
        "players": n,
        "activities": names,
        "edges": [list(e) for e in sorted(instance.edges)],
        "preferences": prefs,
    })


# ----------------------------------------------------------------------
# clique reduction (k-clique -> Nash stability on a clique)

def _clique_edge_key(u: str, v: str, index: dict[str, int]) -> tuple[str, str]:
    return (u, v) if index[u] < index[v] else (v, u)


def reduce_clique_to_ns(vertices, edges, k: int):
    """Instance on a clique of players that is Nash-stabilisable iff the
    input regular graph has a k-clique.  Returns (instance, metadata)."""
    verts = [str(v) for v in vertices]
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertices")
    if k < 1:
        raise ValueError("k must be at least 1")
    index = {v: i for i, v in enumerate(verts)}
    edge_set: set[tuple[str, str]] = set()
    for e in edges:
        u, v = str(e[0]), str(e[1])
        if u == v or u not in index or v not in index:
            raise ValueError(f"bad edge {e!r}")
        edge_set.add(_clique_edge_key(u, v, index))
    edge_list = sorted(edge_set, key=lambda e: (index[e[0]], index[e[1]]))
    degree = {v: 0 for v in verts}
    for u, v in edge_list:
        degree[u] += 1
        degree[v] += 1
    degrees = set(degree.values())
    if len(degrees) > 1:
        raise ValueError("graph must be regular")
    delta = degrees.pop() if degrees else 0
    if delta < k - 1:
        raise ValueError(f"degree {delta} below k-1={k - 1}")

    n_slots = k
    n_pair = k * (k - 1) // 2
    slot_acts = list(range(1, n_slots + 1))
    pair_acts = list(range(n_slots + 1, n_slots + n_pair + 1))
    x_act = n_slots + n_pair + 1
    act_names = [f"A{i}" for i in range(1, n_slots + 1)] + \
                [f"B{i}" for i in range(1, n_pair + 1)] + ["x"]

    alpha = {v: (j + 1) * (k + 3) + 2 + delta for j, v in enumerate(verts)}
    beta = {e: 1 + 2 * (j + 1) for j, e in enumerate(edge_list)}

    players: list[tuple[str, object]] = []  # (role tag, payload)
    vertex_player: dict[str, int] = {}
    vertex_dummies: dict[str, list[int]] = {}
    edge_players: dict[tuple[str, str], tuple[int, int]] = {}
    edge_dummies: dict[tuple[str, str], list[int]] = {}

    def new_player(tag: str) -> int:
        players.append((tag, None))
        return len(players)

    for v in verts:
        vertex_player[v] = new_player(f"vertex:{v}")
        vertex_dummies[v] = [
            new_player(f"vertex-dummy:{v}#{t}")
            for t in range(1, alpha[v] - delta + k - 2 + 1)
        ]
    for u, v in edge_list:
        first = new_player(f"edge:{u}->{v}")
        second = new_player(f"edge:{v}->{u}")
        edge_players[(u, v)] = (first, second)
        edge_dummies[(u, v)] = [
            new_player(f"edge-dummy:{u}-{v}#{t}")
            for t in range(1, beta[(u, v)] - 2 + 1)
        ]
    b1 = new_player("b1")
    b2 = new_player("b2")
    c1 = new_player("c1")
    c2 = new_player("c2")
    g = new_player("g")
    n_players = len(players)

    def interval_tier(lo: int, hi: int) -> list[list[int]]:
        return [[a, s] for a in slot_acts for s in range(lo, hi + 1)]

    prefs: list[list] = [None] * n_players

    for v in verts:
        tier = interval_tier(alpha[v], alpha[v] + k + 1)
        prefs[vertex_player[v] - 1] = [tier, [[0, 1]]]
        for pid in vertex_dummies[v]:
            prefs[pid - 1] = [tier, [[0, 1]]]
    for (u, v), (first, second) in edge_players.items():
        pair_tier = [[a, beta[(u, v)]] for a in pair_acts]
        prefs[first - 1] = [interval_tier(alpha[u], alpha[u] + k + 1) + pair_tier, [[0, 1]]]
        prefs[second - 1] = [interval_tier(alpha[v], alpha[v] + k + 1) + pair_tier, [[0, 1]]]
        for pid in edge_dummies[(u, v)]:
            prefs[pid - 1] = [pair_tier, [[0, 1]]]
    stabil_tier = [
        [a, s]
        for a in slot_acts
        for v in verts
        for s in range(alpha[v] + 2, alpha[v] + k + 2 + 1)
    ]
    prefs[g - 1] = [stabil_tier, [[x_act, 3]], [[0, 1]]]
    prefs[c1 - 1] = [[[x_act, 1], [x_act, 3]], [[0, 1]]]
    prefs[c2 - 1] = [[[x_act, 2], [x_act, 3]], [[0, 1]]]
    prefs[b1 - 1] = [[[a, 1] for a in slot_acts], [[0, 1]]]
    prefs[b2 - 1] = [[[a, 2] for a in slot_acts], [[0, 1]]]

    clique_edges = [
        [u, v] for u in range(1, n_players + 1) for v in range(u + 1, n_players + 1)
    ]
    instance = validate_instance({
        "players": n_players,
        "activities": act_names,
        "edges": clique_edges,
        "preferences": prefs,
    })
    meta = ReductionMetadata(
        kind="clique-ns",
        player_roles={pid: tag for pid, (tag, _) in enumerate(players, start=1)},
        activity_roles={
            **{a: "clique-slot" for a in slot_acts},
            **{a: "clique-edge" for a in pair_acts},
            x_act: "stabiliser",
        },
        data={
            "vertices": verts,
            "edges": [list(e) for e in edge_list],
            "k": k,
            "delta": delta,
            "alpha": {v: alpha[v] for v in verts},
            "beta": {f"{u}|{v}": beta[(u, v)] for u, v in edge_list},
            "vertex_player": vertex_player,
            "vertex_dummies": vertex_dummies,
            "edge_players": {f"{u}|{v}": list(edge_players[(u, v)]) for u, v in edge_list},
            "edge_dummies": {f"{u}|{v}": edge_dummies[(u, v)] for u, v in edge_list},
            "gadget": {"b1": b1, "b2": b2, "c1": c1, "c2": c2, "g": g},
            "slot_acts": slot_acts,
            "pair_acts": pair_acts,
            "x_act": x_act,
        },
    )
    return instance, meta


# ----------------------------------------------------------------------
# hitting set reduction (hitting set -> core stability on a star)

def reduce_hitting_set_to_core(universe, sets, k: int):
    """Star instance with an activity pair whose core is non-empty iff the
    hitting-set input has a hitting set of size at most k."""
    elems = [str(v) for v in universe]
    if len(set(elems)) != len(elems):
        raise ValueError("duplicate universe elements")
    if not 1 <= k < len(elems):
        raise ValueError(f"need 1 <= k < |universe|, got k={k}, |universe|={len(elems)}")
    family = []
    for s in sets:
        fam = sorted({str(v) for v in s}, key=elems.index)
        if any(v not in elems for v in fam):
            raise ValueError(f"set {s!r} not within the universe")
        family.append(fam)
    m = len(family)

    # triple the instance: elements x_v, y_v, z_v; each input set yields
    # three disjoint copies, renumbered consecutively
    copy_tags = ("x", "y", "z")
    w_order = [(tag, v) for v in elems for tag in copy_tags]
    w_count = len(w_order)
    tripled: list[list[tuple[str, str]]] = []
    for fam in family:
        for tag in copy_tags:
            tripled.append([(tag, v) for v in fam])

    center, s1, s2 = 1, 2, 3
    w_player = {w: 4 + idx for idx, w in enumerate(w_order)}
    next_pid = 4 + w_count
    targets = {i: i + w_count + 1 for i in range(1, 3 * m + 1)}
    dummies: dict[int, list[int]] = {}
    for i in range(1, 3 * m + 1):
        size = targets[i] - len(tripled[i - 1]) - 1
        dummies[i] = list(range(next_pid, next_pid + size))
        next_pid += size
    n_players = next_pid - 1

    a_act, b_act = 1, 2
    top_tier = [[a_act, s] for s in range(4, 3 * k + 3 + 1)]
    b_all = [[b_act, targets[i]] for i in range(1, 3 * m + 1)]

    prefs: list[list] = [None] * n_players
    prefs[center - 1] = [
        [[a_act, 2]], [[b_act, 2]], [[a_act, 3]],
        *([] if not b_all else [b_all]),
        top_tier, [[0, 1]],
    ]
    prefs[s1 - 1] = [top_tier, [[b_act, 2]], [[a_act, 3]], [[0, 1]]]
    prefs[s2 - 1] = [
        top_tier, [[a_act, 3]],
        *([] if not b_all else [b_all]),
        [[b_act, 1]], [[a_act, 2]], [[0, 1]],
    ]
    for w, pid in w_player.items():
        mine = [[b_act, targets[i]] for i in range(1, 3 * m + 1) if w in tripled[i - 1]]
        prefs[pid - 1] = [top_tier, *([] if not mine else [mine]), [[0, 1]]]
    for i in range(1, 3 * m + 1):
        for pid in dummies[i]:
            prefs[pid - 1] = [[[b_act, targets[i]]], [[0, 1]]]

    instance = validate_instance({
        "players": n_players,
        "activities": ["a", "b"],
        "edges": [[center, i] for i in range(2, n_players + 1)],
        "preferences": prefs,
    })
    roles = {center: "center", s1: "s1", s2: "s2"}
    for (tag, v), pid in w_player.items():
        roles[pid] = f"element:{tag}:{v}"
    for i, pids in dummies.items():
        for t, pid in enumerate(pids, start=1):
            roles[pid] = f"set-dummy:{i}#{t}"
    meta = ReductionMetadata(
        kind="hitting-set-core",
        player_roles=roles,
        activity_roles={a_act: "coalition-activity", b_act: "set-activity"},
        data={
            "universe": elems,
            "sets": family,
            "k": k,
            "targets": {str(i): targets[i] for i in range(1, 3 * m + 1)},
            "center": center,
            "s1": s1,
            "s2": s2,
            "w_players": {f"{tag}:{v}": pid for (tag, v), pid in w_player.items()},
            "dummies": {str(i): pids for i, pids in dummies.items()},
        },
    )
    return instance, meta


# ----------------------------------------------------------------------
# multicolored clique reduction (few players)

def reduce_mcc_to_ns(vertices, edges, colors, h: int):
    """Clique instance with 4h + 3h(h-1)/2 players that is Nash-stabilisable
    iff the colored input graph has a colorful h-clique."""
    verts = [str(v) for v in vertices]
    if len(set(verts)) != len(verts):
        raise ValueError("duplicate vertices")
    color_of = {str(v): int(c) for v, c in colors.items()}
    if set(color_of) != set(verts):
        raise ValueError("colors must cover exactly the vertices")
    if h < 1 or set(color_of.values()) != set(range(1, h + 1)):
        raise ValueError(f"colors must be exactly 1..{h}")
    classes = {i: [v for v in verts if color_of[v] == i] for i in range(1, h + 1)}
    sizes = {len(vs) for vs in classes.values()}
    if len(sizes) != 1:
        raise ValueError("need exactly q vertices of each color")
    q = sizes.pop()
    index = {v: i for i, v in enumerate(verts)}
    edge_set: set[tuple[str, str]] = set()
    for e in edges:
        u, v = str(e[0]), str(e[1])
        if u == v or u not in index or v not in index:
            raise ValueError(f"bad edge {e!r}")
        if color_of[u] == color_of[v]:
            raise ValueError(f"monochromatic edge {e!r}")
        edge_set.add((u, v) if index[u] < index[v] else (v, u))
    edge_list = sorted(edge_set, key=lambda e: (index[e[0]], index[e[1]]))

    act_names: list[str] = []
    vertex_act: dict[str, int] = {}
    for i in range(1, h + 1):
        for v in classes[i]:
            act_names.append(f"v:{v}")
            vertex_act[v] = len(act_names)
    edge_act: dict[tuple[str, str], int] = {}
    for u, v in edge_list:
        act_names.append(f"e:{u}|{v}")
        edge_act[(u, v)] = len(act_names)
    color_act: dict[int, int] = {}
    color_act2: dict[int, int] = {}
    for i in range(1, h + 1):
        act_names.append(f"c:{i}")
        color_act[i] = len(act_names)
        act_names.append(f"c':{i}")
        color_act2[i] = len(act_names)
    pair_act: dict[tuple[int, int], int] = {}
    pairs = [(i, j) for i in range(1, h + 1) for j in range(i + 1, h + 1)]
    for i, j in pairs:
        act_names.append(f"c:{i},{j}")
        pair_act[(i, j)] = len(act_names)

    incident = {
        v: [edge_act[e] for e in edge_list if v in e]
        for v in verts
    }

    color_players: dict[int, list[int]] = {}
    pair_players: dict[tuple[int, int], list[int]] = {}
    prefs: list[list] = []
    roles: dict[int, str] = {}

    def vertex_chain(order: list[str]) -> list[list[list[int]]]:
        tiers = []
        for v in order:
            tiers.append([[vertex_act[v], 2]])
            tiers.extend([[e_act, 3]] for e_act in incident[v])
        return tiers

    for i in range(1, h + 1):
        ordered = classes[i]
        pids = []
        prefs.append(vertex_chain(ordered) + [[[color_act[i], 1]], [[0, 1]]])
        pids.append(len(prefs))
        roles[len(prefs)] = f"color:{i}:p1"
        prefs.append(vertex_chain(ordered[::-1]) + [[[color_act2[i], 1]], [[0, 1]]])
        pids.append(len(prefs))
        roles[len(prefs)] = f"color:{i}:p2"
        prefs.append([[[color_act[i], 2]], [[0, 1]]])
        pids.append(len(prefs))
        roles[len(prefs)] = f"color:{i}:p3"
        prefs.append([[[color_act2[i], 2]], [[0, 1]]])
        pids.append(len(prefs))
        roles[len(prefs)] = f"color:{i}:p4"
        color_players[i] = pids

    for i, j in pairs:
        between = [
            edge_act[e] for e in edge_list
            if {color_of[e[0]], color_of[e[1]]} == {i, j}
        ]
        edge_tier = [[e_act, 2] for e_act in between]
        base = ([] if not edge_tier else [edge_tier])
        pids = []
        for tag in ("p1", "p2"):
            prefs.append(base + [[[pair_act[(i, j)], 2]], [[pair_act[(i, j)], 1]], [[0, 1]]])
            pids.append(len(prefs))
            roles[len(prefs)] = f"pair:{i},{j}:{tag}"
        prefs.append([[[pair_act[(i, j)], 3]], [[0, 1]]])
        pids.append(len(prefs))
        roles[len(prefs)] = f"pair:{i},{j}:p3"
        pair_players[(i, j)] = pids

    n_players = len(prefs)
    instance = validate_instance({
        "players": n_players,
        "activities": act_names,
        "edges": [
            [u, v] for u in range(1, n_players + 1) for v in range(u + 1, n_players + 1)
        ],
        "preferences": prefs,
    })
    meta = ReductionMetadata(
        kind="mcc-ns",
        player_roles=roles,
        activity_roles={
            **{vertex_act[v]: f"vertex:{v}" for v in verts},
            **{edge_act[e]: f"edge:{e[0]}|{e[1]}" for e in edge_list},
            **{color_act[i]: f"color:{i}" for i in range(1, h + 1)},
            **{color_act2[i]: f"color2:{i}" for i in range(1, h + 1)},
            **{pair_act[pr]: f"pair:{pr[0]},{pr[1]}" for pr in pairs},
        },
        data={
            "vertices": verts,
            "edges": [list(e) for e in edge_list],
            "colors": color_of,
            "h": h,
            "q": q,
            "vertex_act": vertex_act,
            "edge_act": {f"{u}|{v}": edge_act[(u, v)] for u, v in edge_list},
            "color_players": {str(i): color_players[i] for i in range(1, h + 1)},
            "pair_players": {f"{i},{j}": pair_players[(i, j)] for i, j in pairs},
        },
    )
    return instance, meta


# ----------------------------------------------------------------------
# witness assignments (forward direction of each reduction)

def witness_assignment(instance: Instance, meta: ReductionMetadata, solution) -> Assignment:
    """The stable assignment a reduction promises for a yes-certificate:
    a k-clique, a hitting set of size <= k, or a colorful h-clique."""
    if meta.kind == "clique-ns":
        return _clique_witness(instance, meta, solution)
    if meta.kind == "hitting-set-core":
        return _hitting_set_witness(instance, meta, solution)
    if meta.kind == "mcc-ns":
        return _mcc_witness(instance, meta, solution)
    raise ValueError(f"unknown reduction kind {meta.kind!r}")


def _clique_witness(instance, meta, solution) -> Assignment:
    d = meta.data
    verts = d["vertices"]
    chosen = sorted({str(v) for v in solution}, key=verts.index)
    if len(chosen) != d["k"]:
        raise ValueError(f"solution must have exactly {d['k']} vertices")
    edge_keys = {tuple(e) for e in d["edges"]}
    inner = [
        (u, v) for i, u in enumerate(chosen) for v in chosen[i + 1:]
    ]
    inner = [e if e in edge_keys else (e[1], e[0]) for e in inner]
    if any(e not in edge_keys for e in inner):
        raise ValueError("solution is not a clique in the source graph")
    inner.sort(key=lambda e: (verts.index(e[0]), verts.index(e[1])))

    choices = [VOID] * instance.n
    eta = dict(zip(chosen, d["slot_acts"]))
    xi = dict(zip(inner, d["pair_acts"]))
    chosen_set = set(chosen)
    for v in chosen:
        act = eta[v]
        choices[d["vertex_player"][v] - 1] = act
        for pid in d["vertex_dummies"][v]:
            choices[pid - 1] = act
    for u, v in (tuple(e) for e in d["edges"]):
        first, second = d["edge_players"][f"{u}|{v}"]
        if (u, v) in xi:
            act = xi[(u, v)]
            choices[first - 1] = act
            choices[second - 1] = act
            for pid in d["edge_dummies"][f"{u}|{v}"]:
                choices[pid - 1] = act
        else:
            # an edge player sits in its vertex-side coalition when the
            # other endpoint was not selected
            if u in chosen_set and v not in chosen_set:
                choices[first - 1] = eta[u]
            if v in chosen_set and u not in chosen_set:
                choices[second - 1] = eta[v]
    gadget = d["gadget"]
    for name in ("c1", "c2", "g"):
        choices[gadget[name] - 1] = d["x_act"]
    return Assignment(tuple(choices))


def _hitting_set_witness(instance, meta, solution) -> Assignment:
    d = meta.data
    chosen = sorted({str(v) for v in solution}, key=d["universe"].index)
    if not chosen:
        raise ValueError("witness construction needs a non-empty hitting set")
    if len(chosen) > d["k"]:
        raise ValueError(f"hitting set larger than k={d['k']}")
    for fam in d["sets"]:
        if not set(fam) & set(chosen):
            raise ValueError(f"solution misses the set {fam!r}")
    choices = [VOID] * instance.n
    for pid in (d["center"], d["s1"], d["s2"]):
        choices[pid - 1] = 1
    for v in chosen:
        for tag in ("x", "y", "z"):
            choices[d["w_players"][f"{tag}:{v}"] - 1] = 1
    return Assignment(tuple(choices))


def _mcc_witness(instance, meta, solution) -> Assignment:
    d = meta.data
    chosen = [str(v) for v in solution]
    if len(chosen) != d["h"]:
        raise ValueError(f"solution must have exactly {d['h']} vertices")
    by_color = {}
    for v in chosen:
        if v not in d["colors"]:
            raise ValueError(f"unknown vertex {v!r}")
        c = d["colors"][v]
        if c in by_color:
            raise ValueError("solution vertices must have distinct colors")
        by_color[c] = v
    choices = [VOID] * instance.n
    for i in range(1, d["h"] + 1):
        act = d["vertex_act"][by_color[i]]
        p1, p2 = d["color_players"][str(i)][:2]
        choices[p1 - 1] = act
        choices[p2 - 1] = act
    for i in range(1, d["h"] + 1):
        for j in range(i + 1, d["h"] + 1):
            u, v = by_color[i], by_color[j]
            key = f"{u}|{v}" if f"{u}|{v}" in d["edge_act"] else f"{v}|{u}"
            if key not in d["edge_act"]:
                raise ValueError(f"solution vertices {u}, {v} are not adjacent")
            act = d["edge_act"][key]
            p1, p2 = d["pair_players"][f"{i},{j}"][:2]
            choices[p1 - 1] = act
            choices[p2 - 1] = act
    return Assignment(tuple(choices))
