"""CLI subcommands, exit codes, and output stability."""

import json

import pytest

from uqgraph.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_build_writes_dimacs(capsys, tmp_path):
    out = tmp_path / "d5.col"
    code, _, _ = run(capsys, "build", "--q", "5", "--out", str(out))
    assert code == 0
    text = out.read_text()
    assert "p edge 25 50" in text
    assert text.count("\ne ") == 50


def test_build_rejects_non_prime_power(capsys):
    code, _, err = run(capsys, "build", "--q", "6")
    assert code == 2
    assert "prime power" in err


def test_build_rejects_even_prime_power(capsys):
    code, _, _ = run(capsys, "build", "--q", "8")
    assert code == 2


def test_build_rejects_dimension_one(capsys):
    code, _, _ = run(capsys, "build", "--q", "7", "--m", "1")
    assert code == 2


def test_color_paper_overrides(capsys, tmp_path):
    out = tmp_path / "c7.txt"
    code, stdout, _ = run(
        capsys, "color", "--q", "7", "--a", "5", "--t", "3", "--json",
        "--out", str(out),
    )
    assert code == 0
    record = json.loads(stdout)
    assert record["k"] == 4 and record["proper"] is True
    assert record["a"] == 5 and record["t"] == 3
    assert out.read_text().startswith("# q=7 m=2 k=4")


def test_color_q9(capsys):
    code, stdout, _ = run(capsys, "color", "--q", "9", "--json")
    assert code == 0
    record = json.loads(stdout)
    assert record["k"] == 6 and record["proper"] is True


def test_color_q3_unavailable(capsys):
    code, _, err = run(capsys, "color", "--q", "3")
    assert code == 2
    assert "q > 3" in err or "q=3" in err


def test_color_rejects_bad_override(capsys):
    code, _, _ = run(capsys, "color", "--q", "7", "--a", "0")
    assert code == 2


def test_chi_q7(capsys):
    code, stdout, _ = run(capsys, "chi", "--q", "7")
    assert code == 0
    record = json.loads(stdout)
    assert record["status"] == "exact"
    assert record["lower"] == record["upper"] == 4
    assert set(record) == {"q", "m", "status", "lower", "upper", "nodes", "millis"}


def test_chi_q5(capsys):
    code, stdout, _ = run(capsys, "chi", "--q", "5")
    record = json.loads(stdout)
    assert code == 0 and record["status"] == "exact" and record["upper"] == 3


def test_chi_budget_gives_valid_bracket(capsys):
    code, stdout, _ = run(capsys, "chi", "--q", "13", "--nodes", "10")
    assert code == 0
    record = json.loads(stdout)
    assert record["lower"] <= record["upper"]


def test_spectrum_both_methods_agree(capsys):
    code, stdout, _ = run(capsys, "spectrum", "--q", "7", "--json")
    assert code == 0
    payload = json.loads(stdout)
    dense, cayley = payload["spectra"]
    assert dense["method"] == "dense" and cayley["method"] == "cayley"
    assert dense["lambda1"] == pytest.approx(cayley["lambda1"], abs=1e-6)
    assert dense["lambdaMin"] == pytest.approx(cayley["lambdaMin"], abs=1e-6)
    assert payload["diagnostics"]["withinTwoSqrtQ"] is True


def test_spectrum_single_method(capsys):
    code, stdout, _ = run(capsys, "spectrum", "--q", "5", "--method", "dense", "--json")
    assert code == 0
    payload = json.loads(stdout)
    (record,) = payload["spectra"]
    assert record["method"] == "dense"
    assert record["lambda1"] == pytest.approx(4.0)


def test_spectrum_file_output(capsys, tmp_path):
    out = tmp_path / "spec.txt"
    code, _, _ = run(capsys, "spectrum", "--q", "5", "--method", "cayley", "--out", str(out))
    assert code == 0
    first_value, first_count = out.read_text().splitlines()[0].split()
    assert float(first_value) == pytest.approx(4.0)
    assert int(first_count) >= 1


def test_triangles_output(capsys):
    code, stdout, _ = run(capsys, "triangles", "--q", "11", "--json")
    assert code == 0
    record = json.loads(stdout)
    assert record["triangles"] == 484
    assert record["predictedTriangleFree"] is None
    code, stdout, _ = run(capsys, "triangles", "--q", "7", "--json")
    record = json.loads(stdout)
    assert record["triangles"] == 0 and record["predictedTriangleFree"] is True


def test_verify_round_trip(capsys, tmp_path):
    out = tmp_path / "c9.txt"
    code, _, _ = run(capsys, "color", "--q", "9", "--out", str(out))
    assert code == 0
    code, stdout, _ = run(capsys, "verify", str(out))
    assert code == 0
    assert "proper" in stdout


def test_verify_missing_vertex_is_input_error(capsys, tmp_path):
    path = tmp_path / "broken.txt"
    lines = ["# q=5 m=2 k=3\n"] + [f"{i} 0\n" for i in range(24)]
    path.write_text("".join(lines))
    code, _, err = run(capsys, "verify", str(path))
    assert code == 2
    assert "vertex" in err


def test_verify_improper_file(capsys, tmp_path):
    path = tmp_path / "improper.txt"
    lines = ["# q=5 m=2 k=1\n"] + [f"{i} 0\n" for i in range(25)]
    path.write_text("".join(lines))
    code, stdout, _ = run(capsys, "verify", str(path))
    assert code == 1
    assert "violation" in stdout


def test_report_single_q(capsys):
    code, stdout, _ = run(capsys, "report", "--q", "7", "--json")
    assert code == 0
    (record,) = json.loads(stdout)
    assert record["chiUpper"] == 4 and record["chiStatus"] == "exact"
    assert record["triangles"] == 0
    assert record["constructionColors"] == 4
    assert record["checks"]["degreeFormula"] is True
    assert record["checks"]["aqIdentity"] is True
    assert record["checks"]["colorCount"] is True
    assert record["checks"]["hoffmanLeChi"] is True


def test_report_range_skips_non_prime_powers(capsys):
    code, stdout, err = run(capsys, "report", "--q", "5..9", "--json")
    assert code == 0
    records = json.loads(stdout)
    assert [record["q"] for record in records] == [5, 7, 9]
    assert "skipping q=6" in err
    assert "skipping q=8" in err


def test_report_is_byte_identical(capsys):
    _, first, _ = run(capsys, "report", "--q", "5..7", "--json")
    _, second, _ = run(capsys, "report", "--q", "5..7", "--json")
    assert first == second


def test_report_text_mode(capsys):
    code, stdout, _ = run(capsys, "report", "--q", "5")
    assert code == 0
    assert "-- q=5" in stdout
    assert "chiStatus: exact" in stdout


def test_report_empty_range_is_input_error(capsys):
    code, _, err = run(capsys, "report", "--q", "9..5")
    assert code == 2
    assert "range" in err


def test_chi_writes_witness_coloring(capsys, tmp_path):
    out = tmp_path / "witness.txt"
    code, _, _ = run(capsys, "chi", "--q", "5", "--out", str(out))
    assert code == 0
    code, stdout, _ = run(capsys, "verify", str(out))
    assert code == 0
    assert "3 colors" in stdout
