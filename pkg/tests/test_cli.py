import hashlib
import json
import pathlib
import subprocess
import sys

from cising.cli import main

JOBS = pathlib.Path(__file__).parent / "jobs"

GOLDEN = [
    ("tangent", "tangent_cone.json"),
    ("chevalley", "chevalley_a1.json"),
    ("resolve", "resolve_two_quadrics.json"),
    ("ext", "ext_dual_numbers.json"),
    ("fgcheck", "fgcheck_hypersurface.json"),
    ("fgcheck", "fgcheck_quotient_module.json"),
    ("tower", "tower_cone.json"),
    ("squarezero", "squarezero_cone.json"),
    ("minimize", "minimize_cone.json"),
    ("validate", "validate_findings.json"),
]


def run_cli(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_tangent_report(capsys):
    code, out, err = run_cli(capsys, "tangent", str(JOBS / "tangent_cone.json"))
    assert code == 0 and err == ""
    assert "bracket, output coordinate 1:" in out
    assert "  2  0\n  0  2\n" in out
    assert "direct = snake: true" in out
    assert "status: ok" in out


def test_off_locus_point_exits_2(capsys):
    code, out, err = run_cli(capsys, "tangent",
                             str(JOBS / "tangent_offlocus.json"))
    assert code == 2
    assert out == ""
    assert "zero locus" in err


def test_malformed_polynomial_exits_1(capsys):
    code, out, err = run_cli(capsys, "resolve", str(JOBS / "bad_parse.json"))
    assert code == 1
    assert "error:" in err


def test_declared_command_mismatch_exits_1(capsys):
    code, _, err = run_cli(capsys, "ext", str(JOBS / "tangent_cone.json"))
    assert code == 1
    assert "declares command" in err


def test_unknown_flag_exits_1(capsys):
    code, _, err = run_cli(capsys, "resolve",
                           str(JOBS / "resolve_two_quadrics.json"), "--bogus")
    assert code == 1


def test_missing_file_exits_1(capsys):
    code, _, err = run_cli(capsys, "resolve", str(JOBS / "no_such_job.json"))
    assert code == 1
    assert "cannot read" in err


def test_invalid_json_exits_1(capsys, tmp_path):
    path = tmp_path / "broken.json"
    path.write_text("not json at all")
    code, _, err = run_cli(capsys, "resolve", str(path))
    assert code == 1
    assert "not valid JSON" in err


def test_non_regular_sequence_exits_2(capsys, tmp_path):
    path = tmp_path / "job.json"
    path.write_text(json.dumps({
        "variables": ["x", "y"], "map": ["x*y", "x^2"], "degree": 3}))
    code, _, err = run_cli(capsys, "resolve", str(path))
    assert code == 2


def test_width_cap_exits_3(capsys):
    code, _, err = run_cli(capsys, "resolve",
                           str(JOBS / "resolve_two_quadrics.json"),
                           "--max-width", "3")
    assert code == 3
    assert "error:" in err


def test_monomial_cap_exits_3(capsys):
    code, _, err = run_cli(capsys, "resolve",
                           str(JOBS / "resolve_two_quadrics.json"),
                           "--max-monomials", "4")
    assert code == 3


def test_validate_reports_findings(capsys):
    code, out, _ = run_cli(capsys, "validate",
                           str(JOBS / "validate_findings.json"),
                           "--format", "json")
    assert code == 0
    report = json.loads(out)
    findings = report["result"]["findings"]
    assert len(findings) == 2
    assert any("'z'" in f for f in findings)
    assert any("window" in f for f in findings)


def test_validate_clean_job(capsys):
    code, out, _ = run_cli(capsys, "validate", str(JOBS / "tangent_cone.json"))
    assert code == 0
    assert "findings: none" in out


def test_json_report_structure(capsys):
    path = JOBS / "fgcheck_hypersurface.json"
    code, out, _ = run_cli(capsys, "fgcheck", str(path), "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert set(report) == {"command", "cross_checks", "input_sha256", "result"}
    assert report["input_sha256"] == hashlib.sha256(path.read_bytes()).hexdigest()
    assert report["result"]["verdict"] == "CertifiedFG"
    assert report["result"]["certificate"] == {"period": 2, "start": 3}
    assert report["cross_checks"]["operators commute"] is True


def test_quotient_module_verdict(capsys):
    code, out, _ = run_cli(capsys, "fgcheck",
                           str(JOBS / "fgcheck_quotient_module.json"),
                           "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["verdict"] == "WindowFG"
    assert report["result"]["betti"] == [1] * 11


def test_tower_report_values(capsys):
    code, out, _ = run_cli(capsys, "tower", str(JOBS / "tower_cone.json"),
                           "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["hilbert"] == [1, 2, 3, 4, 5, 6, 6, 6, 6]
    assert report["result"]["agrees_with_ambient_through"] == 5


def test_squarezero_report_values(capsys):
    code, out, _ = run_cli(capsys, "squarezero",
                           str(JOBS / "squarezero_cone.json"),
                           "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["stages"] == [True, True, True]
    assert report["cross_checks"]["all stages square to zero"] is True


def test_minimize_report_values(capsys):
    code, out, _ = run_cli(capsys, "minimize", str(JOBS / "minimize_cone.json"),
                           "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["minimal_degrees"] == [0, 1]
    assert report["result"]["hstar"][0] == [0, 1]
    assert report["cross_checks"]["cohomology preserved"] is True


def test_degree_flag_overrides(capsys):
    code, out, _ = run_cli(capsys, "ext", str(JOBS / "ext_dual_numbers.json"),
                           "--degree", "4", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["dims"] == [1, 1, 1, 1, 1]


def test_window_flag_overrides(capsys):
    code, out, _ = run_cli(capsys, "fgcheck",
                           str(JOBS / "fgcheck_hypersurface.json"),
                           "--window", "6:10", "--format", "json")
    assert code == 0
    report = json.loads(out)
    assert report["result"]["window"] == [6, 10]


def test_all_golden_jobs_byte_identical(capsys):
    for command, name in GOLDEN:
        for fmt in ("text", "json"):
            first = run_cli(capsys, command, str(JOBS / name), "--format", fmt)
            second = run_cli(capsys, command, str(JOBS / name), "--format", fmt)
            assert first[0] == 0 and second[0] == 0, name
            assert first[1] == second[1], (name, fmt)
            assert first[1].endswith("\n")


def test_subprocess_byte_identical():
    args = [sys.executable, "-m", "cising.cli", "resolve",
            str(JOBS / "resolve_two_quadrics.json"), "--format", "json"]
    first = subprocess.run(args, capture_output=True)
    second = subprocess.run(args, capture_output=True)
    assert first.returncode == 0 and second.returncode == 0
    assert first.stdout == second.stdout
    assert first.stdout


def test_report_embeds_job_digest(capsys):
    for command, name in GOLDEN:
        path = JOBS / name
        digest = hashlib.sha256(path.read_bytes()).hexdigest()
        code, out, _ = run_cli(capsys, command, str(path))
        assert code == 0
        assert f"input sha256: {digest}" in out
