"""Shared fixtures: the four micro-instances and the seeded random corpora."""

from __future__ import annotations

import pytest

from ggasp import gen_example, gen_random, make_copyable, validate_instance


def build_f4():
    """One player approving only (a, 1); no edges."""
    return validate_instance({
        "players": 1,
        "activities": ["a"],
        "edges": [],
        "preferences": [[[[1, 1]], [[0, 1]]]],
    })


@pytest.fixture(scope="session")
def stalker():
    return gen_example("stalker")


@pytest.fixture(scope="session")
def no_is():
    return gen_example("no_is")


@pytest.fixture(scope="session")
def no_core():
    return gen_example("no_core")


@pytest.fixture(scope="session")
def single():
    return build_f4()


# corpora: parameters are functions of the index so every run sees the
# same instances

def forest_instance(s: int):
    kind = "tree" if s % 2 == 0 else "forest"
    return gen_random(2000 + s, kind, 2 + s % 7, 1 + s % 3,
                      0.25 + 0.07 * (s % 9), 0.15 * (s % 4))


def clique_instance(s: int):
    return gen_random(4000 + s, "clique", 2 + s % 6, 1 + s % 3,
                      0.25 + 0.07 * (s % 10), 0.15 * (s % 4))


def single_activity_instance(s: int):
    return gen_random(5000 + s, "general", 2 + s % 7, 1,
                      0.3 + 0.06 * (s % 8), 0.2)


def path_instance(s: int):
    return gen_random(6000 + s, "path", 2 + s % 7, 1 + s % 2,
                      0.3 + 0.06 * (s % 8), 0.2)


def copyable_instance(s: int):
    kind = ["tree", "forest", "path", "star"][s % 4]
    base = gen_random(7000 + s, kind, 2 + s % 7, 1 + s % 3,
                      0.25 + 0.07 * (s % 9), 0.15 * (s % 4))
    return make_copyable(base)
