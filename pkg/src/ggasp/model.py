"""Core data types for group activity selection on social networks.

An instance has players 1..n connected by an undirected communication
graph, non-void activities 1..p (0 denotes the void activity "do
nothing"), and one weak preference order per player over alternatives.
An alternative is a pair ``(activity, group_size)``; the only void
alternative is ``(0, 1)``.

Preference orders are stored as tiers, best tier first.  Alternatives
not listed in any tier share an implicit bottom tier strictly below
every listed tier; the void alternative must always be listed, so the
listed part of an order is "everything at least as good as doing
nothing was worth writing down".

Players and activities are 1-based everywhere in this package.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Mapping

VOID = 0

#: rank assigned to alternatives that cannot exist (group size > n); any
#: comparison against them is vacuously won.
RANK_IMPOSSIBLE = 10**9

Alternative = tuple[int, int]


class InstanceError(ValueError):
    """Raised when raw instance data fails validation.

    ``violations`` lists every problem found, each tagged with its
    player/field location.
    """

    def __init__(self, violations: list[str]):
        self.violations = list(violations)
        super().__init__("; ".join(self.violations))


class BudgetExceeded(RuntimeError):
    """An enumeration or search exceeded its configured node budget."""


class UnsupportedTopology(ValueError):
    """A solver was invoked on an instance outside its precondition."""


@dataclass(frozen=True)
class PreferenceOrder:
    """Weak order over alternatives, stored as tiers (best first)."""

    tiers: tuple[frozenset[Alternative], ...]

    @cached_property
    def _rank(self) -> dict[Alternative, int]:
        table: dict[Alternative, int] = {}
        for idx, tier in enumerate(self.tiers):
            for alt in tier:
                table[alt] = idx
        return table

    @property
    def bottom(self) -> int:
        """Rank shared by every unlisted alternative."""
        return len(self.tiers)

    def rank(self, alt: Alternative) -> int:
        return self._rank.get(alt, len(self.tiers))

    def listed(self) -> frozenset[Alternative]:
        return frozenset(a for tier in self.tiers for a in tier)


@dataclass(frozen=True)
class Instance:
    """A validated instance; immutable, safe to share across solvers."""

    n: int
    activities: tuple[str, ...]
    edges: frozenset[tuple[int, int]]
    prefs: tuple[PreferenceOrder, ...]

    @property
    def p(self) -> int:
        return len(self.activities)

    @property
    def players(self) -> range:
        return range(1, self.n + 1)

    @cached_property
    def adjacency(self) -> dict[int, tuple[int, ...]]:
        nbrs: dict[int, list[int]] = {i: [] for i in self.players}
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return {i: tuple(sorted(vs)) for i, vs in nbrs.items()}

    @cached_property
    def rank_void(self) -> tuple[int, ...]:
        return tuple(pref.rank((VOID, 1)) for pref in self.prefs)

    def rank(self, player: int, activity: int, size: int) -> int:
        """Tier index of ``(activity, size)`` for ``player``; lower is better.

        Sizes above n rank as RANK_IMPOSSIBLE: no group can ever reach
        them, so "at least as good as joining" holds vacuously.
        """
        if size > self.n:
            return RANK_IMPOSSIBLE
        return self.prefs[player - 1].rank((activity, size))

    def prefers(self, player: int, alt1: Alternative, alt2: Alternative) -> bool:
        """Strict preference of alt1 over alt2."""
        return self.rank(player, *alt1) < self.rank(player, *alt2)

    def weakly_prefers(self, player: int, alt1: Alternative, alt2: Alternative) -> bool:
        return self.rank(player, *alt1) <= self.rank(player, *alt2)

    def all_void(self) -> "Assignment":
        return Assignment((VOID,) * self.n)


@dataclass(frozen=True)
class Assignment:
    """Player -> activity map; ``choices[i-1]`` is player i's activity (0 = void)."""

    choices: tuple[int, ...]

    def __getitem__(self, player: int) -> int:
        return self.choices[player - 1]

    def __len__(self) -> int:
        return len(self.choices)

    @cached_property
    def groups(self) -> dict[int, tuple[int, ...]]:
        """Non-void activity -> sorted tuple of its players."""
        out: dict[int, list[int]] = {}
        for i, a in enumerate(self.choices, start=1):
            if a != VOID:
                out.setdefault(a, []).append(i)
        return {a: tuple(members) for a, members in out.items()}

    def group(self, activity: int) -> tuple[int, ...]:
        return self.groups.get(activity, ())

    def coalition(self, player: int) -> tuple[int, ...]:
        a = self[player]
        return (player,) if a == VOID else self.groups[a]

    def alternative(self, player: int) -> Alternative:
        a = self[player]
        return (VOID, 1) if a == VOID else (a, len(self.groups[a]))


def _check_alternative(alt, n: int, p: int, where: str, problems: list[str]) -> Alternative | None:
    try:
        activity, size = int(alt[0]), int(alt[1])
    except (TypeError, ValueError, IndexError):
        problems.append(f"{where}: alternative {alt!r} is not an (activity, size) pair")
        return None
    if activity < 0 or activity > p:
        problems.append(f"{where}: activity index {activity} out of range [0, {p}]")
        return None
    if activity == VOID and size != 1:
        problems.append(f"{where}: void alternative must have size 1, got {size}")
        return None
    if size < 1 or size > n:
        problems.append(f"{where}: size {size} exceeds n={n}" if size > n
                        else f"{where}: size {size} below 1")
        return None
    return (activity, size)


def validate_instance(raw: Mapping) -> Instance:
    """Validate raw instance data and build an :class:`Instance`.

    ``raw`` is a mapping with keys ``players`` (int), ``activities``
    (list of names), ``edges`` (list of [u, v] pairs) and
    ``preferences`` (per player, a list of tiers; each tier a list of
    [activity_index, size] pairs, activity index 0 meaning void).

    Raises :class:`InstanceError` carrying the full list of violations.
    """
    problems: list[str] = []

    try:
        n = int(raw["players"])
    except (KeyError, TypeError, ValueError):
        raise InstanceError(["players: missing or not an integer"])
    if n < 1:
        raise InstanceError([f"players: must be at least 1, got {n}"])

    activities = tuple(str(a) for a in raw.get("activities", ()))
    p = len(activities)

    edges: set[tuple[int, int]] = set()
    for e in raw.get("edges", ()):
        try:
            u, v = int(e[0]), int(e[1])
        except (TypeError, ValueError, IndexError):
            problems.append(f"edge {e!r}: not a pair of players")
            continue
        if u == v:
            problems.append(f"edge {{{u},{v}}}: self-loop")
            continue
        if not (1 <= u <= n and 1 <= v <= n):
            problems.append(f"edge {{{u},{v}}}: endpoint out of range [1, {n}]")
            continue
        edges.add((min(u, v), max(u, v)))

    raw_prefs = raw.get("preferences", ())
    if len(raw_prefs) != n:
        problems.append(f"preferences: expected {n} players, got {len(raw_prefs)}")
        raise InstanceError(problems)

    prefs: list[PreferenceOrder] = []
    for pid, tiers_raw in enumerate(raw_prefs, start=1):
        seen: set[Alternative] = set()
        tiers: list[frozenset[Alternative]] = []
        for tidx, tier_raw in enumerate(tiers_raw, start=1):
            where = f"player {pid}, tier {tidx}"
            tier: set[Alternative] = set()
            for alt_raw in tier_raw:
                alt = _check_alternative(alt_raw, n, p, where, problems)
                if alt is None:
                    continue
                if alt in seen:
                    problems.append(f"{where}: alternative {alt} listed twice")
                    continue
                seen.add(alt)
                tier.add(alt)
            if not tier:
                problems.append(f"{where}: empty tier")
                continue
            tiers.append(frozenset(tier))
        if (VOID, 1) not in seen:
            problems.append(f"player {pid}: the void alternative (0, 1) must be listed")
        prefs.append(PreferenceOrder(tuple(tiers)))

    if problems:
        raise InstanceError(problems)
    return Instance(n=n, activities=activities, edges=frozenset(edges), prefs=tuple(prefs))


def compare(instance: Instance, player: int, alt1: Alternative, alt2: Alternative) -> int:
    """Total comparison: 1 if alt1 is better for player, -1 if alt2 is, 0 if tied."""
    r1 = instance.rank(player, *alt1)
    r2 = instance.rank(player, *alt2)
    return (r2 > r1) - (r1 > r2)


def approves(instance: Instance, player: int, alt: Alternative) -> bool:
    """True iff the player strictly prefers ``alt`` to doing nothing."""
    return instance.rank(player, *alt) < instance.rank_void[player - 1]


def equivalent(instance: Instance, a: int, b: int) -> bool:
    """Two non-void activities are equivalent if every player ranks them
    identically at every group size."""
    if a == b:
        return True
    for i in instance.players:
        for size in range(1, instance.n + 1):
            if instance.rank(i, a, size) != instance.rank(i, b, size):
                return False
    return True


def is_copyable(instance: Instance, activity: int) -> bool:
    """An activity is copyable if at least n activities (itself included)
    are equivalent to it, so availability never binds."""
    count = 0
    for b in range(1, instance.p + 1):
        if equivalent(instance, activity, b):
            count += 1
            if count >= instance.n:
                return True
    return count >= instance.n


def weak_ir_activities(instance: Instance, player: int) -> tuple[int, ...]:
    """Activities the player could join at some size without dropping
    below doing nothing (the individually-rational menu)."""
    rv = instance.rank_void[player - 1]
    out = []
    for a in range(1, instance.p + 1):
        if any(instance.rank(player, a, k) <= rv for k in range(1, instance.n + 1)):
            out.append(a)
    return tuple(out)
