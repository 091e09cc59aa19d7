import json

import pytest

from treelift.cli import main


def run(args):
    return main([str(a) for a in args])


def test_gen_petersen_header(tmp_path, capsys):
    out = tmp_path / "p.txt"
    assert run(["gen", "--family", "petersen", "-o", out]) == 0
    assert out.read_text().splitlines()[0] == "10 15"
    assert "girth=5" in capsys.readouterr().out


def test_gen_cycle_header(tmp_path):
    out = tmp_path / "c6.txt"
    assert run(["gen", "--family", "cycle:6", "-o", out]) == 0
    assert out.read_text().splitlines()[0] == "6 6"


def test_gen_random_with_floor(tmp_path, capsys):
    out = tmp_path / "r.txt"
    code = run(["gen", "--family", "random:20:3", "--girth-min", 5, "--seed", 1, "-o", out])
    assert code == 0
    assert out.read_text().splitlines()[0] == "20 30"


def test_gen_exhaustion_is_explicit(tmp_path, capsys):
    out = tmp_path / "r.txt"
    code = run(
        ["gen", "--family", "random:14:3", "--girth-min", 8, "--seed", 0, "--max-tries", 20, "-o", out]
    )
    assert code == 2
    assert "20 attempts" in capsys.readouterr().err
    assert not out.exists()


def test_gen_bad_family_usage_error(tmp_path, capsys):
    assert run(["gen", "--family", "dodecahedron", "-o", tmp_path / "x.txt"]) == 2


def test_lift_materialization_and_mapping(tmp_path):
    base = tmp_path / "p.txt"
    run(["gen", "--family", "petersen", "-o", base])
    lifted = tmp_path / "lift.txt"
    mapping = tmp_path / "map.txt"
    assert run(["lift", base, "-o", lifted, "--mapping", mapping]) == 0
    assert lifted.read_text().splitlines()[0] == "640 960"
    lines = mapping.read_text().splitlines()
    assert lines[0] == "0 0 000000"
    assert lines[-1] == "639 9 111111"


def test_analyze_json_report_contents(tmp_path):
    base = tmp_path / "c8.txt"
    run(["gen", "--family", "cycle:8", "-o", base])
    report_path = tmp_path / "r.json"
    assert run(["analyze", base, "-o", report_path]) == 0
    report = json.loads(report_path.read_text())
    assert report["schema"] == "treelift-report-v1"
    assert report["base"]["n"] == 8 and report["base"]["regular"] == 2
    assert report["lift"]["vertices"] == 16
    assert report["embedding"]["distortion"] == "1"
    assert report["bound"]["distortion_within_bound"] is True
    assert report["verdict_sweep"]["all_pass"] is True
    assert report["all_pass"] is True


def test_analyze_disconnected_no_partial_report(tmp_path, capsys):
    bad = tmp_path / "bad.txt"
    bad.write_text("4 2\n0 1\n2 3\n")
    report_path = tmp_path / "r.json"
    assert run(["analyze", bad, "-o", report_path]) == 2
    assert not report_path.exists()
    assert "connected" in capsys.readouterr().err


def test_analyze_sampled_reports_byte_identical(tmp_path):
    base = tmp_path / "p.txt"
    run(["gen", "--family", "petersen", "-o", base])
    r1, r2 = tmp_path / "r1.json", tmp_path / "r2.json"
    args = ["analyze", base, "--pairs", "sample:500", "--seed", 7]
    assert run(args + ["-o", r1]) == 0
    assert run(args + ["-o", r2]) == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_analyze_csv_rows_sorted_and_flat(tmp_path):
    base = tmp_path / "c5.txt"
    run(["gen", "--family", "cycle:5", "-o", base])
    out = tmp_path / "pairs.csv"
    assert run(["analyze", base, "--format", "csv", "-o", out]) == 0
    lines = out.read_text().splitlines()
    assert lines[0].startswith("x_base,x_label,y_base,y_label,pairs_covered,distance,l1,ratio")
    # 10-vertex lift: 5 zero-label representatives against later vertices
    keys = []
    for ln in lines[1:]:
        parts = ln.split(",")
        keys.append((int(parts[0]), parts[1], int(parts[2]), parts[3]))
        assert parts[15] == "pass"
    assert keys == sorted(keys)


def test_verify_reduced_matrix_passes(tmp_path):
    report_path = tmp_path / "v.json"
    code = run(
        [
            "verify",
            "--instances",
            "k4,cycle:3",
            "--random-count",
            0,
            "--pairs",
            "sample:100",
            "--seed",
            3,
            "--oracle-pairs",
            100,
            "-o",
            report_path,
        ]
    )
    assert code == 0
    report = json.loads(report_path.read_text())
    assert report["all_pass"] is True
    labels = [inst["label"] for inst in report["instances"]]
    assert labels == ["k4", "cycle:3"]
    for inst in report["instances"]:
        assert inst["checks"]["cut_partition"]["pass"] is True
        assert inst["checks"]["oracle_distance_table"]["pass"] is True


def test_verify_reports_byte_identical(tmp_path):
    args = [
        "verify",
        "--instances",
        "cycle:4,k4",
        "--random-count",
        1,
        "--pairs",
        "sample:1000",
        "--seed",
        7,
        "--oracle-pairs",
        200,
    ]
    r1, r2 = tmp_path / "v1.json", tmp_path / "v2.json"
    assert run(args + ["-o", r1]) == 0
    assert run(args + ["-o", r2]) == 0
    assert r1.read_bytes() == r2.read_bytes()


def test_verify_fault_injection_fails_with_cut_violation(tmp_path, capsys):
    report_path = tmp_path / "f.json"
    code = run(
        ["verify", "--fault-inject", "--pairs", "sample:200", "--seed", 1, "--oracle-pairs", 100, "-o", report_path]
    )
    assert code == 1
    report = json.loads(report_path.read_text())
    assert report["all_pass"] is False
    inst = report["instances"][0]
    assert inst["label"] == "petersen[fault]"
    cp = inst["checks"]["cut_partition"]
    assert cp["pass"] is False
    assert any("crosses cuts" in v for v in cp["violations"])
    assert "FAIL" in capsys.readouterr().out


def test_env_var_cap_override(tmp_path, capsys, monkeypatch):
    base = tmp_path / "p.txt"
    run(["gen", "--family", "petersen", "-o", base])
    monkeypatch.setenv("TREELIFT_MAX_VERTICES", "100")
    assert run(["analyze", base, "-o", tmp_path / "r.json"]) == 2
    err = capsys.readouterr().err
    assert "640" in err and "100" in err


def test_mcgee_gen_available(tmp_path):
    out = tmp_path / "m.txt"
    assert run(["gen", "--family", "mcgee", "-o", out]) == 0
    assert out.read_text().splitlines()[0] == "24 36"
