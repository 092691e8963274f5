"""End-to-end tests of the command line through main()."""
import sys
import json
from pathlib import Path

ROOT = Path(__file__).parent
sys.path.insert(0, str(ROOT / "src"))
sys.path.insert(0, str(ROOT))

from main import EXIT_FAILS, EXIT_HOLDS, EXIT_UNDECIDED, EXIT_USAGE, main

DESIGN60 = str(ROOT / "Input" / "design60.txt")
DESIGN8 = str(ROOT / "Input" / "design8.txt")
MUTILATED = str(ROOT / "Input" / "mutilated.txt")


def test_generate_to_file(tmp_path, capsys):
    out = tmp_path / "design.txt"
    code = main(["generate", "--group-size", "6", "--groups", "10", "--out", str(out)])
    assert code == EXIT_HOLDS
    assert out.read_bytes() == Path(DESIGN60).read_bytes()
    printed = capsys.readouterr().out
    assert "blocks: 30" in printed
    assert "guarantee threshold: 6" in printed
    assert f"written: {out}" in printed


def test_generate_to_stdout(capsys):
    code = main(["generate", "--group-size", "2", "--groups", "4"])
    captured = capsys.readouterr()
    assert code == EXIT_HOLDS
    assert captured.out == Path(DESIGN8).read_text(encoding="utf-8")
    assert "blocks: 12" in captured.err


def test_generate_rejects_odd_group_size(capsys):
    assert main(["generate", "--group-size", "5", "--groups", "10"]) == EXIT_USAGE
    assert "even" in capsys.readouterr().err


def test_verify_all_methods_hold(capsys):
    code = main(["verify", DESIGN60, "--subset-size", "6", "--mode", "all", "--jobs", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_HOLDS
    assert out.count("outcome: HOLDS") == 3
    assert "method: structural" in out
    assert "scanned: 50063860" in out
    assert "certificate size: 5" in out


def test_verify_mutilated_exhaustive(capsys):
    code = main(["verify", MUTILATED, "--subset-size", "6", "--mode", "exhaustive", "--jobs", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_FAILS
    assert "outcome: FAILS" in out
    assert "counterexample: 4 10 13 25 37 49" in out


def test_verify_mutilated_all_methods_fail(capsys):
    code = main(["verify", MUTILATED, "--subset-size", "6", "--jobs", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_FAILS
    assert out.count("outcome: FAILS") == 3
    assert "missing recombined block (m=1, u=2, v=2)" in out


def test_verify_with_scan_strategy(capsys):
    code = main(["verify", DESIGN8, "--subset-size", "3", "--mode", "exhaustive", "--strategy", "scan", "--jobs", "1"])
    assert code == EXIT_HOLDS
    assert "scanned: 56" in capsys.readouterr().out


def test_verify_budget_undecided(capsys):
    code = main(["verify", DESIGN60, "--subset-size", "5", "--mode", "graph", "--budget", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_UNDECIDED
    assert "outcome: UNDECIDED" in out
    assert "upper bound: 5" in out


def test_verify_budget_settled_by_cover(capsys):
    code = main(["verify", DESIGN60, "--subset-size", "6", "--mode", "graph", "--budget", "1"])
    out = capsys.readouterr().out
    assert code == EXIT_HOLDS
    assert "certificate size: 5" in out
    assert "alpha:" not in out


def test_verify_zero_jobs(capsys):
    code = main(["verify", DESIGN8, "--subset-size", "3", "--mode", "exhaustive", "--jobs", "0"])
    assert code == EXIT_USAGE
    assert "jobs must be >= 1" in capsys.readouterr().err


def test_verify_json_lines(capsys):
    code = main(["--json", "verify", DESIGN60, "--subset-size", "6", "--mode", "graph"])
    lines = capsys.readouterr().out.strip().splitlines()
    assert code == EXIT_HOLDS
    assert len(lines) == 1
    record = json.loads(lines[0])
    assert record["method"] == "graph"
    assert record["outcome"] == "HOLDS"
    assert record["alpha"] == 5
    assert record["certificate_size"] == 5
    assert record["counterexample"] is None


def test_verify_structural_on_unstructured_file(tmp_path, capsys):
    plain = tmp_path / "plain.txt"
    plain.write_text("4 2 2\n1 2\n3 4\n", encoding="utf-8")
    assert main(["verify", str(plain), "--subset-size", "2", "--mode", "structural"]) == EXIT_USAGE
    assert "inapplicable" in capsys.readouterr().err


def test_verify_malformed_file(capsys):
    path = str(ROOT / "Input" / "malformed" / "duplicate_member.txt")
    assert main(["verify", path, "--subset-size", "2"]) == EXIT_USAGE
    assert "line 3:" in capsys.readouterr().err


def test_verify_undecodable_file(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_bytes(b"60 6 1\n1 2 3 4 5 \xff\n")
    assert main(["verify", str(bad), "--subset-size", "6", "--mode", "graph"]) == EXIT_USAGE
    assert "line 2: not valid UTF-8" in capsys.readouterr().err
    fixture = str(ROOT / "Input" / "malformed" / "invalid_utf8.txt")
    assert main(["stats", fixture]) == EXIT_USAGE


def test_verify_missing_file():
    assert main(["verify", "Input/does_not_exist.txt", "--subset-size", "6"]) == EXIT_USAGE


def test_usage_errors():
    assert main([]) == EXIT_USAGE
    assert main(["verify", DESIGN60, "--subset-size", "6", "--mode", "fast"]) == EXIT_USAGE
    assert main(["generate", "--groups", "10"]) == EXIT_USAGE


def test_witness_pair_collision(capsys):
    code = main(["witness", DESIGN60, "--set", "1,7,13,25,37,49"])
    assert code == EXIT_HOLDS
    assert capsys.readouterr().out == "PAIR m=1 u=1 v=1 → block 11: 1 2 3 7 8 9\n"


def test_witness_base_collision(capsys):
    code = main(["witness", DESIGN60, "--set", "1,2,13,25,37,49"])
    assert code == EXIT_HOLDS
    assert capsys.readouterr().out == "BASE i=1 → block 1: 1 2 3 4 5 6\n"


def test_witness_json(capsys):
    assert main(["--json", "witness", DESIGN60, "--set", "4,10,13,25,37,49"]) == EXIT_HOLDS
    record = json.loads(capsys.readouterr().out)
    assert record["case"] == "PAIR"
    assert record["block_index"] == 14
    assert record["block"] == "4 5 6 10 11 12"
    assert (record["pair_index"], record["u"], record["v"]) == (1, 2, 2)


def test_witness_errors(capsys):
    assert main(["witness", DESIGN60, "--set", "1,13,25,37,49"]) == EXIT_USAGE
    assert "guarantee threshold not met" in capsys.readouterr().err
    assert main(["witness", DESIGN60, "--set", "1,x,13"]) == EXIT_USAGE
    assert main(["witness", MUTILATED, "--set", "1,7,13,25,37,49"]) == EXIT_USAGE


def test_stats(capsys):
    assert main(["stats", DESIGN60]) == EXIT_HOLDS
    lines = capsys.readouterr().out.splitlines()
    assert lines == [
        "covered pairs: 330",
        "uncovered pairs: 1440",
        "multiplicity histogram: {1: 270, 3: 60}",
        "alpha: 5",
        "alpha witness: 1 13 25 37 49",
        "clique cover size: 5",
    ]


def test_stats_irredundancy(capsys):
    assert main(["stats", DESIGN60, "--irredundancy"]) == EXIT_HOLDS
    out = capsys.readouterr().out
    assert "necessary blocks (s=6): 30/30" in out
    assert "unnecessary blocks" not in out


def test_stats_json(capsys):
    assert main(["--json", "stats", DESIGN8, "--irredundancy"]) == EXIT_HOLDS
    record = json.loads(capsys.readouterr().out)
    assert record["covered_pairs"] == 12
    assert record["multiplicity_histogram"] == {"1": 12}
    assert record["alpha"] == 2
    assert record["necessary_blocks"] == 12
    assert record["total_blocks"] == 12
    assert record["unnecessary"] is None


def test_stats_budget_undecided(capsys):
    assert main(["stats", DESIGN60, "--budget", "1"]) == EXIT_UNDECIDED
    assert "alpha: undecided (0..5)" in capsys.readouterr().out


def test_verify_graph_below_threshold(capsys):
    code = main(["verify", DESIGN60, "--subset-size", "5", "--mode", "graph"])
    out = capsys.readouterr().out
    assert code == EXIT_FAILS
    assert "alpha: 5" in out
    assert "counterexample: 1 13 25 37 49" in out


def test_witness_small_set_with_collision(capsys):
    assert main(["witness", DESIGN60, "--set", "1,2,3"]) == EXIT_HOLDS
    assert capsys.readouterr().out == "BASE i=1 → block 1: 1 2 3 4 5 6\n"
