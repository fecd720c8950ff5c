"""Model types: validation, comparison, approval, equivalence, copyability."""

import itertools
import random

import pytest

from ggasp import (
    VOID,
    InstanceError,
    approves,
    compare,
    equivalent,
    gen_random,
    is_copyable,
    validate_instance,
)
from ggasp.cli import instance_from_dict, instance_to_dict

from conftest import build_f4


def test_stalker_is_valid(stalker):
    assert stalker.n == 2
    assert stalker.p == 1
    assert stalker.edges == frozenset({(1, 2)})


def test_self_loop_rejected():
    with pytest.raises(InstanceError, match="self-loop"):
        validate_instance({
            "players": 2,
            "activities": ["a"],
            "edges": [[1, 1]],
            "preferences": [[[[0, 1]]], [[[0, 1]]]],
        })


def test_oversized_alternative_rejected():
    with pytest.raises(InstanceError, match="exceeds n"):
        validate_instance({
            "players": 3,
            "activities": ["a", "b", "c"],
            "edges": [[1, 2], [2, 3]],
            "preferences": [
                [[[3, 4]], [[0, 1]]],
                [[[0, 1]]],
                [[[0, 1]]],
            ],
        })


def test_void_must_be_listed():
    with pytest.raises(InstanceError, match="void alternative"):
        validate_instance({
            "players": 1,
            "activities": ["a"],
            "edges": [],
            "preferences": [[[[1, 1]]]],
        })


def test_duplicate_alternative_rejected():
    with pytest.raises(InstanceError, match="twice"):
        validate_instance({
            "players": 1,
            "activities": ["a"],
            "edges": [],
            "preferences": [[[[1, 1]], [[1, 1]], [[0, 1]]]],
        })


def test_compare_examples(no_core, no_is):
    # player 2 of the empty-core instance puts (a,2) above (b,2)
    assert compare(no_core, 2, (1, 2), (2, 2)) == 1
    assert compare(no_core, 2, (2, 2), (1, 2)) == -1
    # reflexivity
    assert compare(no_core, 1, (2, 2), (2, 2)) == 0
    # both unlisted for player 3 of the no-IS instance: bottom tier
    assert compare(no_is, 3, (2, 2), (3, 1)) == 0


def test_unlisted_below_listed(no_is):
    # player 1 lists (c,1) last; (a,2) is unlisted and strictly worse
    assert compare(no_is, 1, (3, 1), (1, 2)) == 1


def test_approves(stalker):
    assert approves(stalker, 2, (1, 2))
    assert not approves(stalker, 2, (1, 1))
    assert not approves(stalker, 1, (VOID, 1))
    assert not approves(stalker, 2, (VOID, 1))


def test_approves_matches_compare(no_is):
    for i in no_is.players:
        for a in range(1, no_is.p + 1):
            for k in range(1, no_is.n + 1):
                assert approves(no_is, i, (a, k)) == (compare(no_is, i, (a, k), (VOID, 1)) == 1)


def test_equivalent_and_copyable(stalker, no_is):
    # p=1 < n=2, so the lone activity cannot be copyable
    assert not is_copyable(stalker, 1)
    # player 1 ranks (b,2) but not (a,2), so a and b differ at size 2
    assert not equivalent(no_is, 1, 2)
    assert equivalent(no_is, 1, 1)


def test_replicated_activity_is_copyable():
    inst = validate_instance({
        "players": 2,
        "activities": ["a1", "a2"],
        "edges": [[1, 2]],
        "preferences": [
            [[[1, 1], [2, 1]], [[0, 1]]],
            [[[1, 2], [2, 2]], [[0, 1]]],
        ],
    })
    assert is_copyable(inst, 1)
    assert is_copyable(inst, 2)


def test_compare_is_total_preorder():
    rng = random.Random(11)
    for s in range(20):
        inst = gen_random(800 + s, "general", 2 + s % 5, 1 + s % 3, 0.5, 0.3)
        alts = [(a, k) for a in range(1, inst.p + 1) for k in range(1, inst.n + 1)]
        alts.append((VOID, 1))
        for _ in range(50):
            x, y, z = (rng.choice(alts) for _ in range(3))
            i = rng.randint(1, inst.n)
            # completeness: exactly one relation holds
            assert compare(inst, i, x, y) == -compare(inst, i, y, x)
            # transitivity of weak preference on the sampled triple
            if compare(inst, i, x, y) >= 0 and compare(inst, i, y, z) >= 0:
                assert compare(inst, i, x, z) >= 0


def test_serialization_round_trip():
    for s in range(10):
        inst = gen_random(900 + s, "forest", 2 + s % 6, 1 + s % 3, 0.5, 0.4)
        back = instance_from_dict(instance_to_dict(inst))
        assert back.n == inst.n and back.activities == inst.activities
        assert back.edges == inst.edges
        alts = [(a, k) for a in range(1, inst.p + 1) for k in range(1, inst.n + 1)]
        alts.append((VOID, 1))
        for i in inst.players:
            for x, y in itertools.combinations(alts, 2):
                assert compare(inst, i, x, y) == compare(back, i, x, y)


def test_f4_fixture():
    f4 = build_f4()
    assert f4.n == 1 and f4.p == 1 and not f4.edges
    assert approves(f4, 1, (1, 1))
