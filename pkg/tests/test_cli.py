import json

import pytest

from dpdi.cli import main

C3 = "3 3\n0 1\n1 2\n2 0\n"
PATH3 = "3 2\n0 1\n1 2\n"
DIGON = "2 2\n0 1\n1 0\n"


def bidirected_text(n, edges):
    arcs = sorted([(u, v) for u, v in edges] + [(v, u) for u, v in edges])
    return f"{n} {len(arcs)}\n" + "".join(f"{u} {v}\n" for u, v in arcs)


BK4 = bidirected_text(4, [(i, j) for i in range(4) for j in range(i + 1, 4)])
DIAMOND = bidirected_text(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)])


def write(tmp_path, name, text):
    target = tmp_path / name
    target.write_text(text)
    return str(target)


def test_analyze_text(tmp_path, capsys):
    assert main(["analyze", write(tmp_path, "c3.dg", C3)]) == 0
    out = capsys.readouterr().out
    assert "vertices: 3" in out
    assert "(0, 1, 2): DirectedCycle(3)" in out
    assert "dp-degree-colorable: no" in out
    assert "degree bound: at-bound" in out


def test_analyze_structured(tmp_path, capsys):
    assert main(["analyze", write(tmp_path, "c3.dg", C3), "--format", "structured"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["vertices"] == 3
    assert payload["connected"] and payload["eulerian"]
    assert payload["blocks"] == [{"vertices": [0, 1, 2], "brick": "DirectedCycle(3)"}]
    assert payload["dpDegreeColorable"] is False
    assert payload["brooksGap"] == "at-bound"


def test_analyze_format_error(tmp_path, capsys):
    bad = write(tmp_path, "bad.dg", "5 5\n0 1\n1 2\n")
    assert main(["analyze", bad]) == 2
    err = capsys.readouterr().err
    assert "header promises 5 arcs, file has 2" in err
    assert err.startswith("dpdi: ")


def test_analyze_missing_file(tmp_path, capsys):
    assert main(["analyze", str(tmp_path / "nope.dg")]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_chromatic_all(tmp_path, capsys):
    target = write(tmp_path, "c3.dg", C3)
    assert main(["chromatic", target, "--kind", "all", "--format", "structured"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload == {
        "dichromatic": 2,
        "listChromatic": 2,
        "dpChromatic": 2,
        "greedyBound": 2,
    }


def test_chromatic_reports_list_lower_bound(tmp_path, capsys):
    target = write(tmp_path, "bk4.dg", BK4)
    assert main(["chromatic", target, "--kind", "all", "--format", "structured"]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["listChromatic"] is None
    assert payload["listLowerBound"] == 4
    assert payload["dpChromatic"] == 4


def test_chromatic_list_capped_text(tmp_path, capsys):
    target = write(tmp_path, "bk4.dg", BK4)
    assert main(["chromatic", target, "--kind", "list"]) == 0
    assert "list: at least 4" in capsys.readouterr().out


def test_chromatic_list_rejects_large_hosts(tmp_path, capsys):
    target = write(tmp_path, "b5.dg", "5 2\n0 1\n1 0\n")
    assert main(["chromatic", target, "--kind", "list"]) == 2
    assert "up to 4 vertices" in capsys.readouterr().err


def test_certify_uncolorable_round_trip(tmp_path, capsys):
    target = write(tmp_path, "c3.dg", C3)
    cover_path = tmp_path / "c3.cover.json"
    code = main(
        ["certify", target, "--cover-out", str(cover_path), "--format", "structured"]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dpDegreeColorable"] is False
    assert payload["certificate"]["kind"] == "badCover"
    assert payload["certificate"]["cover"]["sizes"] == [1, 1, 1]

    assert main(["solve", target, "--cover", str(cover_path)]) == 0
    out = capsys.readouterr().out
    assert "colorable: no" in out


def test_certify_colorable_emits_transversal(tmp_path, capsys):
    target = write(tmp_path, "path.dg", PATH3)
    transversal_path = tmp_path / "path.tr"
    code = main(
        [
            "certify",
            target,
            "--transversal-out",
            str(transversal_path),
            "--format",
            "structured",
        ]
    )
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["dpDegreeColorable"] is True
    assert payload["certificate"]["kind"] == "transversal"
    assert payload["certificate"]["coverSizes"] == [1, 1, 1]
    assert transversal_path.read_text() == "0 0\n1 0\n2 0\n"


def test_solve_reports_transversal(tmp_path, capsys):
    target = write(tmp_path, "digon.dg", DIGON)
    cover = {
        "sizes": [2, 2],
        "matchings": [
            {"arc": [0, 1], "pairs": [[0, 0], [1, 1]]},
            {"arc": [1, 0], "pairs": [[0, 0], [1, 1]]},
        ],
    }
    cover_path = write(tmp_path, "digon.cover.json", json.dumps(cover))
    out_path = tmp_path / "digon.tr"
    code = main(
        ["solve", target, "--cover", cover_path, "--transversal-out", str(out_path)]
    )
    assert code == 0
    assert "colorable: yes" in capsys.readouterr().out
    assert out_path.read_text() == "0 0\n1 1\n"


def test_solve_rejects_mismatched_cover(tmp_path, capsys):
    target = write(tmp_path, "c3.dg", C3)
    cover = {"sizes": [1, 1], "matchings": []}
    cover_path = write(tmp_path, "short.cover.json", json.dumps(cover))
    assert main(["solve", target, "--cover", cover_path]) == 2
    assert "got 2 sizes for 3 vertices" in capsys.readouterr().err


def test_verify_ok(tmp_path, capsys):
    code = main(["verify", "--suite", "bricks", "--max-n", "4", "--format", "structured"])
    assert code == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["suite"] == "bricks"
    assert payload["instancesChecked"] == 8
    assert payload["disagreements"] == []


def test_verify_bidirected_accepts_sampling_controls(capsys):
    code = main(
        [
            "verify",
            "--suite",
            "bidirected",
            "--max-n",
            "3",
            "--samples",
            "3",
            "--seed",
            "5",
        ]
    )
    assert code == 0
    assert "suite: bidirected" in capsys.readouterr().out


def test_verify_rejects_sampling_on_other_suites(capsys):
    code = main(["verify", "--suite", "merge", "--max-n", "2", "--samples", "3"])
    assert code == 2
    assert "bidirected suite only" in capsys.readouterr().err


def test_budget_flag_exit(tmp_path, capsys):
    target = write(tmp_path, "diamond.dg", DIAMOND)
    code = main(["chromatic", target, "--kind", "dp", "--budget-covers", "10"])
    assert code == 3
    assert "covers budget of 10 exceeded" in capsys.readouterr().err


def test_budget_env_exit(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv("DPDI_BUDGET_NODES", "1")
    target = write(tmp_path, "c3.dg", C3)
    cover = {
        "sizes": [1, 1, 1],
        "matchings": [
            {"arc": [0, 1], "pairs": [[0, 0]]},
            {"arc": [1, 2], "pairs": [[0, 0]]},
            {"arc": [2, 0], "pairs": [[0, 0]]},
        ],
    }
    cover_path = write(tmp_path, "c3.cover.json", json.dumps(cover))
    assert main(["solve", target, "--cover", cover_path]) == 3
    assert "nodes budget of 1 exceeded" in capsys.readouterr().err


def test_budget_must_be_positive(tmp_path, capsys):
    target = write(tmp_path, "c3.dg", C3)
    assert main(["chromatic", target, "--kind", "dp", "--budget-nodes", "0"]) == 2
    assert "positive" in capsys.readouterr().err
