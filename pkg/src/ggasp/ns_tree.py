"""Nash stability on forests: fixed-parameter solver in the number of
activities, built on the rooted-tree tables in :mod:`ggasp.treedp`."""

from __future__ import annotations

from .model import Assignment, Instance
from .treedp import TreeTables, solve_forest


class NsTreeTable(TreeTables):
    """Nash-stability tables for one tree component."""

    def __init__(self, instance: Instance, component, used: int, **kwargs):
        super().__init__(instance, component, used, concept="ns", **kwargs)


def solve_ns_tree(instance: Instance, component, used, covered) -> dict[int, int] | None:
    """Stable partial assignment of one tree component, or None.

    ``used`` is the set of activities assumed used in the full
    assignment, ``covered`` the subset this component must use exactly.
    Activities outside ``covered`` are contributed by other components
    only.  Returns a player -> activity dict over the component.
    """
    used_mask = _mask(used)
    covered_mask = _mask(covered)
    tables = NsTreeTable(instance, component, used_mask)
    acc = tables.first_accepting(covered_mask)
    if acc is None:
        return None
    state, track = acc
    return tables.extract(state, track)


def solve_ns_forest(
    instance: Instance,
    coloring: str = "deterministic",
    seed: int | None = None,
    eps: float = 1e-6,
) -> Assignment | None:
    """Nash stable assignment of a forest instance, or None if none exists."""
    return solve_forest(instance, "ns", coloring=coloring, seed=seed, eps=eps)


def _mask(activities) -> int:
    mask = 0
    for a in activities:
        mask |= 1 << (a - 1)
    return mask
