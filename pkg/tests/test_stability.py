"""Stability verifiers: feasibility, IR, deviations, core blocks, dispatch."""

import random

from ggasp import (
    CR,
    IS,
    NS,
    Assignment,
    CoreBlock,
    InfeasibleGroup,
    IrViolation,
    IsDeviation,
    NsDeviation,
    check_feasible,
    check_ir,
    enumerate_connected_subsets,
    enumerate_feasible_ir,
    find_core_block,
    find_is_deviation,
    find_ns_deviation,
    gen_random,
    is_valid_is_deviation,
    is_valid_ns_deviation,
    verify,
)



def test_check_feasible(no_is):
    assert check_feasible(no_is, Assignment((3, 3, 3))) is None
    assert check_feasible(no_is, Assignment((1, 0, 1))) == InfeasibleGroup(1)
    assert check_feasible(no_is, Assignment((0, 0, 0))) is None


def test_check_ir(stalker, single):
    # the loner never listed (a,2), so being dragged into a pair breaks IR
    assert check_ir(stalker, Assignment((1, 1))) == IrViolation(1)
    assert check_ir(stalker, Assignment((1, 0))) is None
    assert check_ir(single, Assignment((1,))) is None


def test_ns_deviation_examples(stalker, no_core, single):
    assert is_valid_ns_deviation(stalker, Assignment((1, 0)), 2, 1)
    assert is_valid_ns_deviation(single, Assignment((0,)), 1, 1)
    assert is_valid_ns_deviation(no_core, Assignment((0, 0, 0)), 3, 2)


def test_is_deviation_reproduces_listed_items(no_is):
    assert is_valid_is_deviation(no_is, Assignment((1, 2, 0)), 1, 2)
    assert is_valid_is_deviation(no_is, Assignment((3, 3, 3)), 1, 1)
    assert is_valid_is_deviation(no_is, Assignment((3, 2, 1)), 2, 1)


def test_find_deviations(stalker, no_is, single):
    assert find_ns_deviation(stalker, Assignment((1, 0))) == NsDeviation(2, 1)
    assert find_ns_deviation(single, Assignment((1,))) is None
    assert find_is_deviation(single, Assignment((1,))) is None
    # scan order gives 1 -> a first; the listed witness 3 -> a stays valid
    found = find_is_deviation(no_is, Assignment((3, 2, 0)))
    assert found == IsDeviation(1, 1)
    assert is_valid_is_deviation(no_is, Assignment((3, 2, 0)), 3, 1)


def test_find_core_block(no_core, single):
    block = find_core_block(no_core, Assignment((0, 0, 0)))
    assert block == CoreBlock((2, 3), 1)
    assert find_core_block(single, Assignment((1,))) is None


def test_every_feasible_ir_assignment_of_no_core_is_blocked(no_core):
    blocked = []
    enumerate_feasible_ir(no_core, lambda a: blocked.append(find_core_block(no_core, a)) and None)
    assert blocked and all(b is not None for b in blocked)


def test_verify_dispatch(stalker, no_is, single):
    assert verify(single, Assignment((1,)), NS) is None
    assert verify(single, Assignment((1,)), IS) is None
    assert verify(single, Assignment((1,)), CR) is None
    # loner alone vetoes the stalker in the core sense
    assert verify(stalker, Assignment((1, 0)), CR) is None
    witnesses = []
    enumerate_feasible_ir(no_is, lambda a: witnesses.append(verify(no_is, a, IS)) and None)
    assert witnesses and all(w is not None for w in witnesses)


def _naive_strong_block(inst, assignment):
    """Blocking pair straight from the definition: a connected coalition
    containing the activity's current group, all strictly better off."""
    current = {i: assignment.alternative(i) for i in inst.players}
    for coalition in enumerate_connected_subsets(inst):
        for a in range(1, inst.p + 1):
            if not set(assignment.group(a)) <= set(coalition):
                continue
            size = len(coalition)
            if all(
                inst.rank(i, a, size) < inst.rank(i, *current[i])
                for i in coalition
            ):
                return coalition, a
    return None


def test_core_block_agrees_with_naive_enumeration():
    rng = random.Random(5)
    checked = 0
    for s in range(40):
        inst = gen_random(300 + s, ["path", "star", "tree", "general"][s % 4],
                          2 + s % 7, 1 + s % 2, 0.4, 0.2)
        assignments = []
        enumerate_feasible_ir(inst, lambda a: assignments.append(a) and None)
        rng.shuffle(assignments)
        for assignment in assignments[:6]:
            fast = find_core_block(inst, assignment)
            naive = _naive_strong_block(inst, assignment)
            assert (fast is None) == (naive is None)
            checked += 1
    assert checked > 50


def test_witness_soundness():
    """Every witness returned by a verifier re-validates against its
    own definition."""
    rng = random.Random(6)
    for s in range(40):
        inst = gen_random(400 + s, "general", 2 + s % 6, 1 + s % 3, 0.45, 0.25)
        for _ in range(8):
            assignment = Assignment(tuple(rng.randint(0, inst.p) for _ in inst.players))
            for concept in (NS, IS, CR):
                w = verify(inst, assignment, concept)
                if w is None:
                    continue
                if isinstance(w, InfeasibleGroup):
                    assert check_feasible(inst, assignment) == w
                elif isinstance(w, IrViolation):
                    alt = assignment.alternative(w.player)
                    assert inst.rank(w.player, *alt) > inst.rank_void[w.player - 1]
                elif isinstance(w, NsDeviation):
                    assert is_valid_ns_deviation(inst, assignment, w.player, w.activity)
                elif isinstance(w, IsDeviation):
                    assert is_valid_is_deviation(inst, assignment, w.player, w.activity)
                elif isinstance(w, CoreBlock):
                    size = len(w.coalition)
                    assert set(assignment.group(w.activity)) <= set(w.coalition)
                    assert all(
                        inst.rank(i, w.activity, size) < inst.rank(i, *assignment.alternative(i))
                        for i in w.coalition
                    )


def test_ns_stable_implies_is_stable():
    for s in range(40):
        inst = gen_random(500 + s, "general", 2 + s % 6, 1 + s % 3, 0.45, 0.25)
        stable = []

        def grab(a):
            if verify(inst, a, NS) is None:
                stable.append(a)
            return len(stable) >= 3

        enumerate_feasible_ir(inst, grab)
        for assignment in stable:
            assert verify(inst, assignment, IS) is None
