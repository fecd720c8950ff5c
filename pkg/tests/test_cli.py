"""Command-line interface: file formats, subcommands, exit codes,
deterministic output."""

import json

import pytest

from ggasp import IS, Assignment, verify
from ggasp.cli import (
    assignment_from_names,
    assignment_to_names,
    dump_instance,
    instance_from_dict,
    load_instance,
    main,
)


def write_instance(tmp_path, instance, name="inst.json"):
    path = tmp_path / name
    path.write_text(dump_instance(instance), encoding="utf-8")
    return str(path)


def test_instance_file_round_trip(tmp_path, no_core):
    path = write_instance(tmp_path, no_core)
    back = load_instance(path)
    assert back == no_core


def test_duplicate_activity_names_rejected():
    with pytest.raises(Exception, match="duplicate"):
        instance_from_dict({
            "players": 1, "activities": ["a", "a"], "edges": [],
            "preferences": [[[["void", 1]]]],
        })


def test_void_name_reserved():
    with pytest.raises(Exception, match="reserved"):
        instance_from_dict({
            "players": 1, "activities": ["void"], "edges": [],
            "preferences": [[[["void", 1]]]],
        })


def test_assignment_names(no_core):
    assignment = Assignment((2, 2, 0))
    names = assignment_to_names(no_core, assignment)
    assert names == ["b", "b", "void"]
    assert assignment_from_names(no_core, names) == assignment


def test_solve_tree_on_stalker(tmp_path, stalker, capsys):
    path = write_instance(tmp_path, stalker)
    code = main(["solve", "--concept", "ns", "--algo", "tree", "--in", path])
    assert code == 1
    assert capsys.readouterr().out.strip() == "NONE"


def test_verify_core_block(tmp_path, no_core, capsys):
    path = write_instance(tmp_path, no_core)
    assignment = tmp_path / "assignment.json"
    assignment.write_text(json.dumps(["void", "void", "void"]), encoding="utf-8")
    code = main(["verify", "--concept", "cr", "--in", path,
                 "--assignment", str(assignment)])
    assert code == 0
    out = capsys.readouterr().out.strip()
    assert out == "UNSTABLE CORE-BLOCK activity=a coalition=2,3"


def test_verify_stable(tmp_path, single, capsys):
    path = write_instance(tmp_path, single)
    assignment = tmp_path / "assignment.json"
    assignment.write_text(json.dumps(["a"]), encoding="utf-8")
    code = main(["verify", "--concept", "ns", "--in", path,
                 "--assignment", str(assignment)])
    assert code == 0
    assert capsys.readouterr().out.strip() == "STABLE"


def test_solve_is_copyable(tmp_path, capsys):
    code = main(["generate", "no-is", "--copyable",
                 "--out", str(tmp_path / "f2c.json")])
    assert code == 0
    code = main(["solve", "--concept", "is", "--algo", "is-copyable",
                 "--in", str(tmp_path / "f2c.json")])
    assert code == 0
    names = json.loads(capsys.readouterr().out)
    inst = load_instance(str(tmp_path / "f2c.json"))
    assert verify(inst, assignment_from_names(inst, names), IS) is None


def test_solve_outputs_are_deterministic(tmp_path, capsys):
    main(["generate", "random", "--seed", "5", "--topology", "forest",
          "--n", "7", "--p", "2", "--out", str(tmp_path / "r.json")])
    capsys.readouterr()
    runs = []
    for _ in range(2):
        main(["solve", "--concept", "ns", "--algo", "auto",
              "--in", str(tmp_path / "r.json")])
        runs.append(capsys.readouterr().out)
    assert runs[0] == runs[1]


def test_auto_dispatch_clique_and_core(tmp_path, capsys):
    main(["generate", "random", "--seed", "6", "--topology", "clique",
          "--n", "5", "--p", "2", "--out", str(tmp_path / "c.json")])
    capsys.readouterr()
    code = main(["solve", "--concept", "ns", "--in", str(tmp_path / "c.json")])
    assert code in (0, 1)
    main(["generate", "random", "--seed", "7", "--topology", "general",
          "--n", "5", "--p", "1", "--out", str(tmp_path / "s.json")])
    capsys.readouterr()
    code = main(["solve", "--concept", "cr", "--in", str(tmp_path / "s.json")])
    assert code == 0  # single activity always has a core stable outcome


def test_exit_codes(tmp_path, stalker, capsys):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json", encoding="utf-8")
    assert main(["solve", "--concept", "ns", "--in", str(bad)]) == 2
    capsys.readouterr()

    path = write_instance(tmp_path, stalker)
    # tree algorithm refuses core stability
    assert main(["solve", "--concept", "cr", "--algo", "tree", "--in", path]) == 3
    capsys.readouterr()

    # a tiny oracle budget is exhausted immediately
    main(["generate", "random", "--seed", "8", "--topology", "clique",
          "--n", "6", "--p", "3", "--out", str(tmp_path / "big.json")])
    capsys.readouterr()
    code = main(["solve", "--concept", "cr", "--algo", "oracle",
                 "--budget", "3", "--in", str(tmp_path / "big.json")])
    assert code == 3
    capsys.readouterr()

    # flow on a path is an unsupported topology
    main(["generate", "no-is", "--out", str(tmp_path / "p.json")])
    capsys.readouterr()
    assert main(["solve", "--concept", "ns", "--algo", "flow",
                 "--in", str(tmp_path / "p.json")]) == 3
    capsys.readouterr()


def test_reduce_command(tmp_path, capsys):
    problem = tmp_path / "g.json"
    problem.write_text(json.dumps({
        "vertices": ["v1", "v2", "v3"],
        "edges": [["v1", "v2"], ["v1", "v3"], ["v2", "v3"]],
    }), encoding="utf-8")
    solution = tmp_path / "sol.json"
    solution.write_text(json.dumps(["v1", "v2"]), encoding="utf-8")
    prefix = str(tmp_path / "red")
    code = main(["reduce", "clique", "--in", str(problem), "--k", "2",
                 "--out", prefix, "--solution", str(solution)])
    assert code == 0
    meta = json.loads((tmp_path / "red.meta.json").read_text(encoding="utf-8"))
    assert meta["kind"] == "clique-ns"
    code = main(["verify", "--concept", "ns", "--in", prefix + ".json",
                 "--assignment", prefix + ".witness.json"])
    assert code == 0
    assert capsys.readouterr().out.strip() == "STABLE"


def test_oracle_jobs_match(tmp_path, capsys):
    main(["generate", "random", "--seed", "9", "--topology", "general",
          "--n", "6", "--p", "2", "--out", str(tmp_path / "j.json")])
    capsys.readouterr()
    main(["solve", "--concept", "ns", "--algo", "oracle",
          "--in", str(tmp_path / "j.json")])
    seq = capsys.readouterr().out
    main(["solve", "--concept", "ns", "--algo", "oracle", "--jobs", "2",
          "--in", str(tmp_path / "j.json")])
    par = capsys.readouterr().out
    assert seq == par


def test_generate_to_stdout(capsys):
    assert main(["generate", "stalker"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["players"] == 2
