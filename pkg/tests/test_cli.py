"""Command-line interface: formats, exit codes, round-trips."""

import csv
import io
import json
from fractions import Fraction

import pytest

import coinrace.cli as cli
from coinrace.advantage import advantage_at
from coinrace.game import GameParams
from coinrace.polynomial import Poly


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_poly_text(capsys):
    code, out, _ = run_cli(capsys, "poly", "--n", "3", "--alpha", "1", "--beta", "1")
    assert code == 0
    assert out.strip() == "1 - 2p + 5p^2 - 4p^3 + p^4"


def test_poly_degenerate_text(capsys):
    code, out, _ = run_cli(capsys, "poly", "--n", "2", "--alpha", "2", "--beta", "1")
    assert code == 0
    assert out.startswith("1 (degenerate")


def test_poly_domain_error_exit_2(capsys):
    code, _, err = run_cli(capsys, "poly", "--n", "5", "--alpha", "0", "--beta", "1")
    assert code == 2
    assert "alpha must be > 0" in err


def test_usage_error_exit_2(capsys):
    code, _, _ = run_cli(capsys, "poly", "--n", "5", "--alpha", "x", "--beta", "1")
    assert code == 2


def test_poly_json_round_trip(capsys):
    code, out, _ = run_cli(
        capsys, "poly", "--n", "7", "--alpha", "2", "--beta", "3", "--format", "json"
    )
    assert code == 0
    doc = json.loads(out)
    poly = Poly(Fraction(c) for c in doc["coefficients"])
    assert poly(Fraction(1, 2)) == advantage_at(GameParams(7, 2, 3), Fraction(1, 2))
    assert doc["degree"] == len(doc["coefficients"]) - 1


def test_rational_flag_spellings_agree(capsys):
    _, out_frac, _ = run_cli(capsys, "poly", "--n", "5", "--alpha", "3/2", "--beta", "1")
    _, out_dec, _ = run_cli(capsys, "poly", "--n", "5", "--alpha", "1.5", "--beta", "1")
    assert out_frac == out_dec
    assert "p^" in out_frac  # a non-trivial polynomial, not the degenerate constant


def test_pmf_json_schema(capsys):
    code, out, _ = run_cli(
        capsys, "pmf", "--n", "3", "--alpha", "1", "--beta", "1", "--format", "json"
    )
    assert code == 0
    assert json.loads(out) == {"l": 2, "m": 3, "pmf": {"2": [0, 2, -1], "3": [1, -2, 1]}}


def test_pmf_text(capsys):
    _, out, _ = run_cli(capsys, "pmf", "--n", "2", "--alpha", "2", "--beta", "1")
    assert out.strip() == "k=1: 1"


def test_minimize_text(capsys):
    code, out, _ = run_cli(capsys, "minimize", "--n", "5", "--alpha", "1", "--beta", "1")
    assert code == 0
    value = float(out.splitlines()[1].split("=")[1])
    assert abs(value - 0.700) <= 5e-4


def test_minimize_degenerate(capsys):
    _, out, _ = run_cli(capsys, "minimize", "--n", "2", "--alpha", "2", "--beta", "1")
    assert "degenerate" in out


def test_pstar_values(capsys):
    for alpha, beta, expected in [("1", "1", 0.267949192), ("2", "1", 0.354248688), ("1", "2", 0.177124344)]:
        code, out, _ = run_cli(
            capsys, "pstar", "--alpha", alpha, "--beta", beta, "--format", "json"
        )
        assert code == 0
        assert abs(json.loads(out)["p_star"] - expected) <= 1e-8


def test_simulate_deterministic_bias(capsys):
    code, out, _ = run_cli(
        capsys,
        "simulate", "--n", "5", "--alpha", "1", "--beta", "1",
        "--p", "0", "--trials", "100", "--seed", "7", "--format", "json",
    )
    assert code == 0
    assert json.loads(out)["frequency"] == 1.0


def test_simulate_rejects_bias_above_one(capsys):
    code, _, _ = run_cli(
        capsys, "simulate", "--n", "5", "--alpha", "1", "--beta", "1", "--p", "1.5"
    )
    assert code == 2


def test_simulate_at_limit_bias(capsys):
    code, out, _ = run_cli(
        capsys,
        "simulate", "--n", "5", "--alpha", "1", "--beta", "1",
        "--at-pstar", "--trials", "2000", "--seed", "7", "--format", "json",
    )
    assert code == 0
    assert abs(json.loads(out)["frequency"] - 0.700) < 0.05


def test_table_csv_row_counts(capsys):
    code, out, _ = run_cli(capsys, "table", "1", "--format", "csv")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert len(rows) == 13  # header + 12 rows
    assert rows[1] == ["1", "1", "1", "1"]  # n=1 is the constant game


def test_table_3_degenerate_rows(capsys):
    _, out, _ = run_cli(capsys, "table", "3", "--format", "csv")
    rows = {r[0]: r[3] for r in list(csv.reader(io.StringIO(out)))[1:]}
    assert rows["2"] == "1" and rows["4"] == "1"


def test_table_unknown_index(capsys):
    code, _, err = run_cli(capsys, "table", "7")
    assert code == 2
    assert "unknown table" in err


def test_table_6_reports_and_annotates(capsys):
    code, out, _ = run_cli(capsys, "table", "6", "--format", "csv", "--tol", "1e-6")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))[1:]
    assert len(rows) == 18
    flagged = [r for r in rows if r[5]]
    assert flagged, "known-inconsistent reference rows must be annotated"
    clean = [r for r in rows if not r[5]]
    assert len(clean) >= 12


@pytest.mark.parametrize("fmt", ["text", "json", "csv", "latex"])
@pytest.mark.parametrize(
    "argv",
    [
        ["poly", "--n", "5", "--alpha", "1", "--beta", "1"],
        ["pmf", "--n", "5", "--alpha", "1", "--beta", "1"],
        ["minimize", "--n", "5", "--alpha", "1", "--beta", "1"],
        ["minimize", "--n", "2", "--alpha", "2", "--beta", "1"],
        ["pstar", "--alpha", "2", "--beta", "3"],
        ["simulate", "--n", "5", "--alpha", "1", "--beta", "1", "--p", "1/3",
         "--trials", "50", "--seed", "1"],
        ["table", "2"],
        ["table", "6", "--tol", "1e-4"],
        ["verify", "--max-n", "2", "--max-alpha", "1", "--max-beta", "2"],
    ],
)
def test_every_command_renders_in_every_format(capsys, argv, fmt):
    code, out, err = run_cli(capsys, *argv, "--format", fmt)
    assert code == 0
    assert out.strip()


def test_verify_reports_match(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--max-n", "5", "--max-alpha", "2", "--max-beta", "2"
    )
    assert code == 0
    assert out.strip().endswith("20/20 cases match")


def test_verify_default_grid(capsys):
    code, out, _ = run_cli(
        capsys, "verify", "--max-n", "8", "--max-alpha", "3", "--max-beta", "3"
    )
    assert code == 0
    assert out.strip() == "72/72 cases match"


def test_verify_detects_corruption(capsys, monkeypatch):
    from types import MappingProxyType

    from coinrace.polynomial import Poly
    from coinrace.stopping import hit_time_distribution

    def corrupted(params):
        dist = hit_time_distribution(params)
        pmf = dict(dist.pmf)
        if params.n == 3 and params.alpha == 1 and params.beta == 1:
            last = max(pmf)
            pmf[last] = pmf[last] + Poly((0, 1))
        return type(dist)(dist.bounds, MappingProxyType(pmf))

    monkeypatch.setattr(cli, "hit_time_distribution", corrupted)
    code, out, _ = run_cli(
        capsys, "verify", "--max-n", "4", "--max-alpha", "1", "--max-beta", "1"
    )
    assert code == 1
    assert "mismatch: n=3 alpha=1 beta=1" in out
    assert "3/4 cases match" in out
