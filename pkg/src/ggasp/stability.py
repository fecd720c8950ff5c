"""Verifiers for feasibility, individual rationality, Nash / individual /
core stability.  Every failed check returns a concrete witness that
re-validates against the definition it violates.

Witness search order is deterministic: players ascending then activities
ascending for deviations; activity ascending, then size ascending, then
breadth-first coalition growth for core blocks.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import connected_prefix, is_connected_subset
from .model import VOID, Assignment, Instance

NS = "ns"
IS = "is"
CR = "cr"
CONCEPTS = (NS, IS, CR)


@dataclass(frozen=True)
class NsDeviation:
    player: int
    activity: int


@dataclass(frozen=True)
class IsDeviation:
    player: int
    activity: int


@dataclass(frozen=True)
class CoreBlock:
    coalition: tuple[int, ...]
    activity: int


@dataclass(frozen=True)
class IrViolation:
    player: int


@dataclass(frozen=True)
class InfeasibleGroup:
    activity: int


StabilityWitness = NsDeviation | IsDeviation | CoreBlock | IrViolation | InfeasibleGroup


def check_feasible(instance: Instance, assignment: Assignment) -> InfeasibleGroup | None:
    """Every non-void group must induce a connected subgraph; void players
    are unconstrained."""
    for a in sorted(assignment.groups):
        if not is_connected_subset(instance, assignment.groups[a]):
            return InfeasibleGroup(a)
    return None


def check_ir(instance: Instance, assignment: Assignment) -> IrViolation | None:
    """Each player must weakly prefer her alternative to doing nothing."""
    for i in instance.players:
        a, size = assignment.alternative(i)
        if instance.rank(i, a, size) > instance.rank_void[i - 1]:
            return IrViolation(i)
    return None


def is_valid_ns_deviation(instance: Instance, assignment: Assignment, player: int, activity: int) -> bool:
    """Player strictly gains by joining the activity's group and the grown
    group stays connected."""
    if activity == VOID or assignment[player] == activity:
        return False
    group = assignment.group(activity)
    if not is_connected_subset(instance, group + (player,)):
        return False
    cur = assignment.alternative(player)
    return instance.prefers(player, (activity, len(group) + 1), cur)


def is_valid_is_deviation(instance: Instance, assignment: Assignment, player: int, activity: int) -> bool:
    """An NS-deviation additionally accepted by every current group member."""
    if not is_valid_ns_deviation(instance, assignment, player, activity):
        return False
    group = assignment.group(activity)
    new_size = len(group) + 1
    return all(
        instance.weakly_prefers(j, (activity, new_size), (activity, len(group)))
        for j in group
    )


def find_ns_deviation(instance: Instance, assignment: Assignment) -> NsDeviation | None:
    for i in instance.players:
        for a in range(1, instance.p + 1):
            if is_valid_ns_deviation(instance, assignment, i, a):
                return NsDeviation(i, a)
    return None


def find_is_deviation(instance: Instance, assignment: Assignment) -> IsDeviation | None:
    for i in instance.players:
        for a in range(1, instance.p + 1):
            if is_valid_is_deviation(instance, assignment, i, a):
                return IsDeviation(i, a)
    return None


def find_core_block(instance: Instance, assignment: Assignment) -> CoreBlock | None:
    """First strongly blocking (coalition, activity) pair, or None.

    For each activity a and target size s, the candidate pool is every
    player who strictly prefers (a, s) to her current alternative.  A
    block of size s exists iff the pool's component around the current
    group pi^a (which is connected or empty) holds at least s players;
    the coalition is extracted by breadth-first growth. Activities with
    an empty current group are included: a fresh coalition may block
    with an unused activity.
    """
    current = [assignment.alternative(i) for i in instance.players]
    for a in range(1, instance.p + 1):
        group = assignment.group(a)
        for s in range(1, instance.n + 1):
            pool = [
                i for i in instance.players
                if instance.prefers(i, (a, s), current[i - 1])
            ]
            if len(pool) < s:
                continue
            pool_set = set(pool)
            if not all(j in pool_set for j in group):
                continue
            coalition = connected_prefix(instance, group, pool_set, s)
            if coalition is not None:
                return CoreBlock(coalition, a)
    return None


def verify(instance: Instance, assignment: Assignment, concept: str) -> StabilityWitness | None:
    """None iff the assignment is stable under the given concept
    (``ns``, ``is`` or ``cr``); otherwise the first witness found."""
    if len(assignment) != instance.n:
        raise ValueError(f"assignment length {len(assignment)} != {instance.n} players")
    witness = check_feasible(instance, assignment)
    if witness is not None:
        return witness
    witness = check_ir(instance, assignment)
    if witness is not None:
        return witness
    if concept == NS:
        return find_ns_deviation(instance, assignment)
    if concept == IS:
        return find_is_deviation(instance, assignment)
    if concept == CR:
        return find_core_block(instance, assignment)
    raise ValueError(f"unknown concept {concept!r}; expected one of {CONCEPTS}")
