"""End-to-end CLI behavior: emission formats, determinism, exit codes."""

from __future__ import annotations

import json

import pytest

from tricent.cli import main

from conftest import DATA_DIR

KARATE = str(DATA_DIR / "karate.net")


def run_cli(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


# ------------------------------------------------------------------------ rank


def test_rank_tc_golden_column(capsys):
    code, out, err = run_cli(capsys, "rank", KARATE, "--measure", "tc", "--k", "5")
    assert code == 0 and err == ""
    lines = out.splitlines()
    assert lines[0] == "rank,node,score"
    assert [line.split(",")[1] for line in lines[1:]] == ["1", "34", "33", "2", "3"]


def test_rank_ec_top1(capsys):
    code, out, _ = run_cli(capsys, "rank", KARATE, "--measure", "ec", "--k", "1")
    assert code == 0
    assert out.splitlines()[1].split(",")[1] == "34"


def test_rank_json_shape(capsys):
    code, out, _ = run_cli(capsys, "rank", KARATE, "--measure", "tc", "--k", "3", "--format", "json")
    assert code == 0
    doc = json.loads(out)
    assert doc["graph"] == "karate"
    assert doc["command"] == "rank"
    assert doc["params"]["measure"] == "TC"
    assert [row["node"] for row in doc["rows"]] == [1, 34, 33]


def test_rank_csv_json_value_agreement(capsys):
    _, csv_out, _ = run_cli(capsys, "rank", KARATE, "--k", "5")
    _, json_out, _ = run_cli(capsys, "rank", KARATE, "--k", "5", "--format", "json")
    doc = json.loads(json_out)
    for line, row in zip(csv_out.splitlines()[1:], doc["rows"]):
        rank, node, score = line.split(",")
        assert int(rank) == row["rank"]
        assert int(node) == row["node"]
        assert float(score) == row["score"]


def test_rank_tsv(capsys):
    code, out, _ = run_cli(capsys, "rank", KARATE, "--k", "2", "--format", "tsv")
    assert code == 0
    assert out.splitlines()[0] == "rank\tnode\tscore"


# --------------------------------------------------------------------- compare


def test_compare_emits_golden_body(capsys):
    code, out, _ = run_cli(capsys, "compare", KARATE, "--k", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "TR,BC,CNC,EC,PR,TC"
    assert lines[1] == "1,1,1,34,34,1"
    assert lines[2] == "34,34,3,1,1,34"
    assert lines[3] == "33,33,34,3,33,33"
    assert lines[4] == "2,3,32,33,2,2"
    assert lines[5] == "3,32,9,2,3,3"


def test_compare_measure_subset(capsys):
    code, out, _ = run_cli(capsys, "compare", KARATE, "--k", "2", "--measures", "tc,bc")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "TC,BC"
    assert lines[1] == "1,1"


def test_compare_json_round_trip(capsys):
    _, out, _ = run_cli(capsys, "compare", KARATE, "--k", "2", "--format", "json")
    doc = json.loads(out)
    assert doc["rows"][0]["TC"] == 1
    assert doc["rows"][0]["PR"] == 34
    assert doc["rows"][1]["TC"] == 34


# ---------------------------------------------------------------------- ablate


def test_ablate_table9_karate_column(capsys):
    code, out, _ = run_cli(capsys, "ablate", KARATE, "--k", "5")
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "graph,measure,density,removed"
    rows = {line.split(",")[1]: line.split(",") for line in lines[1:]}
    assert rows["TC"][2] == "0.0468"
    assert rows["BC"][2] == "0.0567"
    assert rows["CNC"][2] == "0.0739"
    assert rows["TC"][3] == "1 34 33 2 3"


def test_ablate_plot_series_appended(capsys):
    code, out, _ = run_cli(capsys, "ablate", KARATE, "--k", "5", "--plot-series")
    assert code == 0
    blocks = out.split("\n\n")
    assert len(blocks) == 2
    series_lines = blocks[1].splitlines()
    assert series_lines[0] == "network,TR,BC,CNC,EC,PR,TC"
    assert series_lines[1].startswith("karate,0.0468,0.0567,0.0739,")


def test_ablate_random_baseline_row(capsys):
    code, out, _ = run_cli(capsys, "ablate", KARATE, "--k", "5", "--random-baseline", "--seed", "7")
    assert code == 0
    rand_rows = [line for line in out.splitlines() if ",RAND," in line]
    assert len(rand_rows) == 1
    density = float(rand_rows[0].split(",")[2])
    assert 0.0 < density < 0.14  # below the intact karate density


def test_ablate_json_includes_plot(capsys):
    _, out, _ = run_cli(
        capsys, "ablate", KARATE, "--k", "5", "--plot-series", "--format", "json"
    )
    doc = json.loads(out)
    assert doc["plot"]["networks"] == ["karate"]
    assert doc["plot"]["series"]["TC"] == [0.0468]
    tc_rows = [r for r in doc["rows"] if r["measure"] == "TC"]
    assert tc_rows[0]["density"] == 0.0468
    assert tc_rows[0]["removed"] == [1, 34, 33, 2, 3]


# ------------------------------------------------------------------------ info


def test_info_counts(capsys):
    code, out, _ = run_cli(capsys, "info", KARATE)
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "nodes,edges,density,triangles"
    cells = lines[1].split(",")
    assert cells[0] == "34" and cells[1] == "78" and cells[3] == "45"


def test_info_empty_edgelist(tmp_path, capsys):
    empty = tmp_path / "empty.edges"
    empty.write_text("")
    code, out, _ = run_cli(capsys, "info", str(empty))
    assert code == 0
    assert out.splitlines()[1] == "0,0,undefined,0"
    code, out, _ = run_cli(capsys, "info", str(empty), "--format", "json")
    assert json.loads(out)["rows"][0]["density"] is None


# ------------------------------------------------------------------ exit codes


def test_missing_file_exits_2(capsys):
    code, out, err = run_cli(capsys, "rank", "no-such-file.net")
    assert code == 2
    assert out == ""  # nothing on the data stream
    assert "cannot read" in err


def test_malformed_pajek_exits_2(tmp_path, capsys):
    bad = tmp_path / "bad.net"
    bad.write_text("*Vertices 2\n*Edges\n1 99\n")
    code, out, err = run_cli(capsys, "rank", str(bad))
    assert code == 2
    assert out == ""
    assert "line 3" in err


def test_convergence_failure_exits_3(capsys):
    code, out, err = run_cli(capsys, "rank", KARATE, "--measure", "pr", "--max-iter", "1")
    assert code == 3
    assert out == ""
    assert "converge" in err


def test_oversized_k_exits_4(capsys):
    code, out, err = run_cli(capsys, "ablate", KARATE, "--k", "34")
    assert code == 4
    assert out == ""
    assert "node count" in err


def test_bad_usage_exits_2(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["rank", KARATE, "--measure", "bogus"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rank", KARATE, "--k", "0"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["rank", KARATE, "--damping", "1.5"])
    assert exc.value.code == 2


# --------------------------------------------------------------- determinism


def test_byte_identical_reruns(capsys):
    first = run_cli(capsys, "compare", KARATE, "--k", "5")
    second = run_cli(capsys, "compare", KARATE, "--k", "5")
    assert first == second
    third = run_cli(capsys, "ablate", KARATE, "--k", "5", "--random-baseline")
    fourth = run_cli(capsys, "ablate", KARATE, "--k", "5", "--random-baseline")
    assert third == fourth


def test_output_uses_lf_endings(capsys):
    _, out, _ = run_cli(capsys, "compare", KARATE, "--k", "3")
    assert "\r" not in out
    assert out.endswith("\n")
    assert not out.endswith("\n\n")
