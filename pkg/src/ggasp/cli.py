"""Command-line front end: generate, solve, verify, reduce, bench.

Instance files are JSON::

    {
      "players": 3,
      "activities": ["a", "b"],
      "edges": [[1, 2], [2, 3]],
      "preferences": [
        [[["b", 2]], [["a", 3]], [["void", 1]]],
        ...
      ]
    }

``preferences`` holds one entry per player: a list of tiers (best
first), each tier a list of [activity-name-or-"void", size] pairs.
Assignment files are a JSON list of activity names or "void", one per
player in player order.

Exit codes: 0 = stable assignment found / verification ran, 1 = provably
no stable assignment exists, 2 = invalid input, 3 = budget exceeded or
unsupported topology for the chosen algorithm.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .clique_flow import solve_ns_clique
from .core_algo import DEFAULT_ENUM_BUDGET, solve_core_connected_enum, solve_core_single_activity
from .generators import (
    gen_example,
    gen_random,
    make_copyable,
    reduce_clique_to_ns,
    reduce_hitting_set_to_core,
    reduce_mcc_to_ns,
    witness_assignment,
)
from .graph import classify_topology
from .is_tree import solve_is_copyable_acyclic, solve_is_forest
from .model import (
    VOID,
    Assignment,
    BudgetExceeded,
    Instance,
    InstanceError,
    UnsupportedTopology,
    validate_instance,
)
from .ns_tree import solve_ns_forest
from .oracle import oracle_find
from .stability import CR, IS, NS, CoreBlock, InfeasibleGroup, IrViolation, IsDeviation, NsDeviation, verify

VOID_NAME = "void"


# ----------------------------------------------------------------------
# file formats

def instance_to_dict(instance: Instance) -> dict:
    def name(a: int) -> str:
        return VOID_NAME if a == VOID else instance.activities[a - 1]

    return {
        "players": instance.n,
        "activities": list(instance.activities),
        "edges": [list(e) for e in sorted(instance.edges)],
        "preferences": [
            [[[name(a), s] for a, s in sorted(tier)] for tier in pref.tiers]
            for pref in instance.prefs
        ],
    }


def instance_from_dict(data: dict) -> Instance:
    activities = [str(a) for a in data.get("activities", ())]
    if len(set(activities)) != len(activities):
        raise InstanceError(["activities: duplicate names"])
    if VOID_NAME in activities:
        raise InstanceError([f"activities: {VOID_NAME!r} is reserved"])
    index = {name: i + 1 for i, name in enumerate(activities)}
    index[VOID_NAME] = VOID

    def resolve(alt, where):
        try:
            name, size = alt[0], alt[1]
        except (TypeError, IndexError):
            raise InstanceError([f"{where}: malformed alternative {alt!r}"])
        if name not in index:
            raise InstanceError([f"{where}: unknown activity {name!r}"])
        return [index[name], size]

    prefs = []
    for pid, tiers in enumerate(data.get("preferences", ()), start=1):
        prefs.append([
            [resolve(alt, f"player {pid}, tier {t}") for alt in tier]
            for t, tier in enumerate(tiers, start=1)
        ])
    return validate_instance({
        "players": data.get("players"),
        "activities": activities,
        "edges": data.get("edges", ()),
        "preferences": prefs,
    })


def dump_instance(instance: Instance) -> str:
    return json.dumps(instance_to_dict(instance), indent=2) + "\n"


def load_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return instance_from_dict(json.load(fh))


def assignment_to_names(instance: Instance, assignment: Assignment) -> list[str]:
    return [
        VOID_NAME if a == VOID else instance.activities[a - 1]
        for a in assignment.choices
    ]


def assignment_from_names(instance: Instance, names) -> Assignment:
    if len(names) != instance.n:
        raise InstanceError(
            [f"assignment: expected {instance.n} entries, got {len(names)}"]
        )
    index = {name: i + 1 for i, name in enumerate(instance.activities)}
    index[VOID_NAME] = VOID
    choices = []
    for pid, name in enumerate(names, start=1):
        if name not in index:
            raise InstanceError([f"assignment, player {pid}: unknown activity {name!r}"])
        choices.append(index[name])
    return Assignment(tuple(choices))


def load_assignment(instance: Instance, path: str) -> Assignment:
    with open(path, encoding="utf-8") as fh:
        return assignment_from_names(instance, json.load(fh))


def witness_line(instance: Instance, witness) -> str:
    def name(a: int) -> str:
        return VOID_NAME if a == VOID else instance.activities[a - 1]

    if isinstance(witness, NsDeviation):
        return f"NS-DEVIATION player={witness.player} activity={name(witness.activity)}"
    if isinstance(witness, IsDeviation):
        return f"IS-DEVIATION player={witness.player} activity={name(witness.activity)}"
    if isinstance(witness, CoreBlock):
        coalition = ",".join(str(i) for i in witness.coalition)
        return f"CORE-BLOCK activity={name(witness.activity)} coalition={coalition}"
    if isinstance(witness, IrViolation):
        return f"IR-VIOLATION player={witness.player}"
    if isinstance(witness, InfeasibleGroup):
        return f"INFEASIBLE-GROUP activity={name(witness.activity)}"
    raise ValueError(f"unknown witness {witness!r}")


# ----------------------------------------------------------------------
# solving

def _solve_with(instance: Instance, concept: str, algo: str, args) -> Assignment | None:
    topo = classify_topology(instance)
    if algo == "auto":
        return _solve_auto(instance, concept, topo, args)
    if algo == "oracle":
        return oracle_find(instance, concept, budget=args.budget, jobs=args.jobs)
    if algo == "tree":
        if concept == CR:
            raise UnsupportedTopology("tree solver handles ns and is only")
        solver = solve_ns_forest if concept == NS else solve_is_forest
        return solver(instance, coloring=args.coloring, seed=args.seed, eps=args.eps)
    if algo == "flow":
        if concept != NS:
            raise UnsupportedTopology("flow solver handles ns only")
        return solve_ns_clique(instance, jobs=args.jobs)
    if algo == "core-single":
        if concept != CR:
            raise UnsupportedTopology("core-single handles cr only")
        return solve_core_single_activity(instance)
    if algo == "core-enum":
        if concept != CR:
            raise UnsupportedTopology("core-enum handles cr only")
        return solve_core_connected_enum(instance, budget=args.budget or DEFAULT_ENUM_BUDGET)
    if algo == "is-copyable":
        if concept != IS:
            raise UnsupportedTopology("is-copyable handles is only")
        return solve_is_copyable_acyclic(instance)
    raise InstanceError([f"unknown algorithm {algo!r}"])


def _solve_auto(instance: Instance, concept: str, topo, args) -> Assignment | None:
    """Dispatch on topology: tree tables on forests, flow on cliques (ns),
    the dedicated core constructions when they apply; otherwise the
    exhaustive oracle within its budget."""
    if concept == NS:
        if topo.is_clique:
            return solve_ns_clique(instance, jobs=args.jobs)
        if topo.is_forest:
            return solve_ns_forest(instance, coloring=args.coloring, seed=args.seed, eps=args.eps)
    elif concept == IS:
        if topo.is_forest:
            return solve_is_forest(instance, coloring=args.coloring, seed=args.seed, eps=args.eps)
    elif concept == CR:
        if instance.p == 1:
            return solve_core_single_activity(instance)
        if topo.is_path or topo.is_star:
            try:
                return solve_core_connected_enum(instance, budget=args.budget or DEFAULT_ENUM_BUDGET)
            except BudgetExceeded:
                pass
    return oracle_find(instance, concept, budget=args.budget, jobs=args.jobs)


# ----------------------------------------------------------------------
# commands

def _cmd_generate(args) -> int:
    if args.kind == "random":
        instance = gen_random(
            args.seed if args.seed is not None else 0,
            args.topology, args.n, args.p,
            args.approval_density, args.tie_density,
        )
    else:
        instance = gen_example(args.kind, p=args.activities)
    if args.copyable:
        instance = make_copyable(instance)
    text = dump_instance(instance)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return 0


def _cmd_solve(args) -> int:
    instance = load_instance(args.infile)
    assignment = _solve_with(instance, args.concept, args.algo, args)
    if assignment is None:
        print("NONE")
        return 1
    print(json.dumps(assignment_to_names(instance, assignment)))
    return 0


def _cmd_verify(args) -> int:
    instance = load_instance(args.infile)
    assignment = load_assignment(instance, args.assignment)
    witness = verify(instance, assignment, args.concept)
    if witness is None:
        print("STABLE")
    else:
        print(f"UNSTABLE {witness_line(instance, witness)}")
    return 0


def _cmd_reduce(args) -> int:
    with open(args.infile, encoding="utf-8") as fh:
        problem = json.load(fh)
    if args.kind == "clique":
        instance, meta = reduce_clique_to_ns(problem["vertices"], problem["edges"], args.k)
    elif args.kind == "hitting-set":
        instance, meta = reduce_hitting_set_to_core(problem["universe"], problem["sets"], args.k)
    else:
        instance, meta = reduce_mcc_to_ns(
            problem["vertices"], problem["edges"], problem["colors"], args.k
        )
    with open(f"{args.out}.json", "w", encoding="utf-8") as fh:
        fh.write(dump_instance(instance))
    with open(f"{args.out}.meta.json", "w", encoding="utf-8") as fh:
        json.dump(meta.to_dict(), fh, indent=2, sort_keys=True)
        fh.write("\n")
    if args.solution:
        with open(args.solution, encoding="utf-8") as fh:
            solution = json.load(fh)
        witness = witness_assignment(instance, meta, solution)
        names = assignment_to_names(instance, witness)
        out = args.witness_out or f"{args.out}.witness.json"
        with open(out, "w", encoding="utf-8") as fh:
            json.dump(names, fh)
            fh.write("\n")
    return 0


def _cmd_bench(args) -> int:
    if args.suite != "desk":
        raise InstanceError([f"unknown suite {args.suite!r}"])
    from .oracle import oracle_find as find

    rows = []

    def run(name, fn, expect):
        start = time.perf_counter()
        got = fn()
        rows.append((name, "ok" if got == expect else f"FAIL ({got!r} != {expect!r})",
                     time.perf_counter() - start))

    f1 = gen_example("stalker")
    f2 = gen_example("no_is")
    f3 = gen_example("no_core")
    run("stalker has no ns (oracle)", lambda: find(f1, NS) is None, True)
    run("stalker has no ns (tree)", lambda: solve_ns_forest(f1) is None, True)
    run("no-is has no is (oracle)", lambda: find(f2, IS) is None, True)
    run("no-is has no is (tree)", lambda: solve_is_forest(f2) is None, True)
    run("no-core has empty core (oracle)", lambda: find(f3, CR) is None, True)
    run("no-core has empty core (enum)", lambda: solve_core_connected_enum(f3) is None, True)

    def agree(solver, concept, kind, count, n, p):
        def check():
            bad = 0
            for s in range(count):
                inst = gen_random(9000 + s, kind, 2 + s % n, 1 + s % p, 0.45, 0.2)
                if (solver(inst) is None) != (find(inst, concept) is None):
                    bad += 1
            return bad
        return check

    run("ns tree vs oracle, 30 forests", agree(solve_ns_forest, NS, "forest", 30, 7, 3), 0)
    run("is tree vs oracle, 30 forests", agree(solve_is_forest, IS, "forest", 30, 7, 3), 0)
    run("ns flow vs oracle, 30 cliques", agree(solve_ns_clique, NS, "clique", 30, 6, 3), 0)

    def core_single():
        bad = 0
        for s in range(20):
            inst = gen_random(9500 + s, "general", 2 + s % 6, 1, 0.5, 0.3)
            out = solve_core_single_activity(inst)
            if verify(inst, out, CR) is not None:
                bad += 1
        return bad

    run("core single-activity verified, 20 instances", core_single, 0)

    def copyable():
        bad = 0
        for s in range(20):
            inst = make_copyable(gen_random(9700 + s, "tree", 2 + s % 5, 1 + s % 2, 0.5, 0.3))
            out = solve_is_copyable_acyclic(inst)
            if verify(inst, out, IS) is not None:
                bad += 1
        return bad

    run("copyable greedy verified, 20 instances", copyable, 0)

    width = max(len(r[0]) for r in rows)
    ok = True
    for name, status, seconds in rows:
        print(f"{name:<{width}}  {status:<6}  {seconds:7.2f}s")
        ok = ok and status == "ok"
    print("suite:", "ok" if ok else "FAIL")
    return 0 if ok else 1


# ----------------------------------------------------------------------
# argument parsing

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ggasp",
        description="Group activity selection on social networks: solve and verify stability.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write an instance file")
    gen.add_argument("kind", choices=["stalker", "no-is", "no-core", "random"])
    gen.add_argument("--activities", type=int, default=1,
                     help="activity count for the stalker instance")
    gen.add_argument("--seed", type=int, default=None)
    gen.add_argument("--topology", default="path",
                     choices=["path", "star", "clique", "tree", "forest", "general"])
    gen.add_argument("--n", type=int, default=6)
    gen.add_argument("--p", type=int, default=2)
    gen.add_argument("--approval-density", type=float, default=0.5)
    gen.add_argument("--tie-density", type=float, default=0.2)
    gen.add_argument("--copyable", action="store_true",
                     help="replicate every activity into n equivalent copies")
    gen.add_argument("--out", default=None)

    solve = sub.add_parser("solve", help="find a stable assignment or prove none exists")
    solve.add_argument("--concept", required=True, choices=[NS, IS, CR])
    solve.add_argument("--algo", default="auto",
                       choices=["auto", "oracle", "tree", "flow",
                                "core-enum", "core-single", "is-copyable"])
    solve.add_argument("--in", dest="infile", required=True)
    solve.add_argument("--budget", type=int, default=None)
    solve.add_argument("--jobs", type=int, default=1)
    solve.add_argument("--coloring", default="deterministic",
                       choices=["deterministic", "randomized"])
    solve.add_argument("--seed", type=int, default=None,
                       help="required for randomized coloring")
    solve.add_argument("--eps", type=float, default=1e-6)

    ver = sub.add_parser("verify", help="check a given assignment")
    ver.add_argument("--concept", required=True, choices=[NS, IS, CR])
    ver.add_argument("--in", dest="infile", required=True)
    ver.add_argument("--assignment", required=True)

    red = sub.add_parser("reduce", help="emit a hardness-reduction instance")
    red.add_argument("kind", choices=["clique", "hitting-set", "mcc"])
    red.add_argument("--in", dest="infile", required=True,
                     help="JSON problem description")
    red.add_argument("--k", type=int, required=True,
                     help="clique size / hitting-set bound / color count")
    red.add_argument("--out", required=True, help="output path prefix")
    red.add_argument("--solution", default=None,
                     help="JSON certificate; also emit its witness assignment")
    red.add_argument("--witness-out", default=None)

    bench = sub.add_parser("bench", help="run the desk-scale smoke suite")
    bench.add_argument("--suite", default="desk")

    return parser


_COMMANDS = {
    "generate": _cmd_generate,
    "solve": _cmd_solve,
    "verify": _cmd_verify,
    "reduce": _cmd_reduce,
    "bench": _cmd_bench,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return _COMMANDS[args.command](args)
    except (BudgetExceeded, UnsupportedTopology) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (InstanceError, json.JSONDecodeError, OSError, KeyError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
