"""End-to-end CLI tests (subprocess, real exit codes)."""

import csv
import io
import json
import math
import subprocess
import sys

import pytest


def run_cli(*args, cwd=None):
    return subprocess.run(
        [sys.executable, "-m", "tensorbound", *args],
        capture_output=True,
        text=True,
        cwd=cwd,
    )


def parse_kv(text):
    """Parse the aligned key/value lines of text reports."""
    out = {}
    for line in text.splitlines():
        if ":" in line and not line.startswith(" "):
            key, _, value = line.partition(":")
            out[key.strip()] = value.strip()
    return out


@pytest.fixture(scope="module")
def demo_dir(tmp_path_factory):
    """One directory with every canonical instance file written once."""
    path = tmp_path_factory.mktemp("demos")
    for spec in (
        ["demo", "chsh"],
        ["demo", "heisenberg"],
        ["demo", "two-spin"],
        ["demo", "counterexample"],
        ["demo", "clifford", "--m", "4"],
        ["demo", "star", "--m", "5"],
    ):
        proc = run_cli(*spec, "--dir", str(path))
        assert proc.returncode == 0, proc.stderr
    return path


class TestBound:
    def test_heisenberg_text(self, demo_dir):
        proc = run_cli("bound", str(demo_dir / "demo-heisenberg.json"))
        assert proc.returncode == 0
        values = parse_kv(proc.stdout)
        assert values["complete_bound"] == "9"
        assert values["exact_norm_squared"] == "9"

    def test_chsh_json(self, demo_dir):
        proc = run_cli(
            "bound", str(demo_dir / "demo-chsh.json"), "--output", "json"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["complete_bound"] == pytest.approx(8.0, abs=1e-9)
        assert payload["exact_norm_squared"] == pytest.approx(8.0, abs=1e-9)
        assert payload["indexing"] == "1-based"
        assert payload["provenance"]["sparse_bound"].startswith("graph-restricted")

    def test_chsh_csv(self, demo_dir):
        proc = run_cli("bound", str(demo_dir / "demo-chsh.json"), "--output", "csv")
        assert proc.returncode == 0
        rows = list(csv.DictReader(io.StringIO(proc.stdout)))
        assert len(rows) == 1
        assert float(rows[0]["complete_bound"]) == pytest.approx(8.0, abs=1e-9)
        assert rows[0]["sparse_bound"] == ""

    def test_counterexample_exits_one_with_violation(self, demo_dir):
        proc = run_cli("bound", str(demo_dir / "counterexample.json"))
        assert proc.returncode == 1
        assert "VIOLATED" in proc.stdout
        assert "non-edge (1,3): lhs 2  rhs 0" in proc.stdout
        assert "edge domination fails" in proc.stderr

    def test_counterexample_no_graph_passes(self, demo_dir):
        proc = run_cli("bound", str(demo_dir / "counterexample.json"), "--no-graph")
        assert proc.returncode == 0
        assert parse_kv(proc.stdout)["baseline_bound"] == "5"

    def test_external_graph_override(self, demo_dir, tmp_path):
        graph_file = tmp_path / "complete3.json"
        graph_file.write_text(json.dumps({"edges": [[0, 1], [0, 2], [1, 2]]}))
        proc = run_cli(
            "bound",
            str(demo_dir / "counterexample.json"),
            "--graph",
            str(graph_file),
            "--output",
            "json",
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["graph_constant"] == 1.0
        assert payload["sparse_bound"] == pytest.approx(5.0, abs=1e-9)

    def test_missing_file_exits_three(self):
        proc = run_cli("bound", "no-such-file.json")
        assert proc.returncode == 3
        assert "error" in proc.stderr

    def test_invalid_instance_exits_one(self, tmp_path):
        bad = tmp_path / "bad.json"
        bad.write_text(json.dumps({"schema_version": "tensorbound/1", "dim_h": 2}))
        proc = run_cli("bound", str(bad))
        assert proc.returncode == 1

    def test_dim_cap_flag_disables_exact(self, demo_dir):
        proc = run_cli(
            "--dim-cap", "2",
            "bound", str(demo_dir / "demo-two-spin.json"),
            "--output", "json",
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["exact_norm_squared"] is None
        assert payload["complete_bound"] == pytest.approx(4.0, abs=1e-9)


class TestExact:
    def test_two_spin_spectrum(self, demo_dir):
        proc = run_cli(
            "exact", str(demo_dir / "demo-two-spin.json"), "--output", "json"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["spectral_norm"] == pytest.approx(2.0, abs=1e-9)
        assert payload["eigenvalues"] == pytest.approx([-2, 0, 0, 2], abs=1e-9)

    def test_over_cap_exits_one(self, demo_dir):
        proc = run_cli("--dim-cap", "2", "exact", str(demo_dir / "demo-two-spin.json"))
        assert proc.returncode == 1
        assert "cap" in proc.stderr


class TestCheckDomination:
    def test_violated_exits_one(self, demo_dir):
        proc = run_cli("check-domination", str(demo_dir / "counterexample.json"))
        assert proc.returncode == 1
        assert "VIOLATED" in proc.stdout

    def test_satisfied_exits_zero(self, demo_dir):
        proc = run_cli(
            "check-domination", str(demo_dir / "demo-star-5.json"), "--output", "json"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["satisfied"] is True
        assert payload["weighted"] is True

    def test_unweighted_flag(self, demo_dir):
        proc = run_cli(
            "check-domination",
            str(demo_dir / "demo-star-5.json"),
            "--unweighted",
            "--output",
            "json",
        )
        assert proc.returncode == 0
        assert json.loads(proc.stdout)["weighted"] is False

    def test_requires_graph(self, demo_dir):
        proc = run_cli("check-domination", str(demo_dir / "demo-chsh.json"))
        assert proc.returncode == 2


class TestCertify:
    def test_chsh_weights_and_threshold(self):
        proc = run_cli(
            "certify",
            "--weights", "1,1,1,1",
            "--beta", "2.8284271",
            "--threshold", "2",
            "--output", "json",
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["excess"] == pytest.approx(4.0, abs=1e-5)
        (counting,) = payload["counting"]
        assert counting["pairs"] == 2

    def test_trivial_beta_all_zero(self):
        proc = run_cli(
            "certify", "--weights", "1,1", "--beta", "1", "--threshold", "0.5",
            "--output", "json",
        )
        payload = json.loads(proc.stdout)
        assert payload["excess"] == 0.0
        assert payload["counting"][0]["pairs"] == 0

    def test_heisenberg_instance_with_beta(self, demo_dir):
        proc = run_cli(
            "certify",
            str(demo_dir / "demo-heisenberg.json"),
            "--beta", "3",
            "--threshold", "2",
            "--output", "json",
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["beta_source"] == "supplied"
        assert payload["counting"][0]["pairs"] == 3

    def test_instance_computes_beta_when_omitted(self, demo_dir):
        proc = run_cli(
            "certify", str(demo_dir / "demo-chsh.json"), "--output", "json"
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["beta_source"] == "computed"
        assert payload["beta"] == pytest.approx(2 * math.sqrt(2), abs=1e-9)

    def test_phi_threshold_variant(self):
        proc = run_cli(
            "certify",
            "--weights", "1,1,1,1",
            "--beta", "2.8284271",
            "--phi-threshold", "2",
            "--c-max", "1",
            "--output", "json",
        )
        payload = json.loads(proc.stdout)
        assert payload["phi_threshold_variant"]["pairs"] == 2

    def test_bad_threshold_exits_one(self):
        proc = run_cli(
            "certify", "--weights", "1,1", "--beta", "2", "--threshold", "-1"
        )
        assert proc.returncode == 1
        assert "positive" in proc.stderr

    def test_usage_errors_exit_two(self, demo_dir):
        assert run_cli("certify", "--beta", "2").returncode == 2
        assert (
            run_cli(
                "certify", str(demo_dir / "demo-chsh.json"), "--weights", "1,1"
            ).returncode
            == 2
        )
        assert (
            run_cli(
                "certify", "--weights", "1,1", "--beta", "2", "--phi-threshold", "1"
            ).returncode
            == 2
        )

    def test_weights_with_graph_is_asserted(self, tmp_path):
        graph_file = tmp_path / "g.json"
        graph_file.write_text(json.dumps({"edges": [[0, 1], [1, 2]]}))
        proc = run_cli(
            "certify",
            "--weights", "1,1,1",
            "--beta", "2",
            "--graph", str(graph_file),
            "--output", "json",
        )
        assert proc.returncode == 0
        payload = json.loads(proc.stdout)
        assert payload["domination"] == "asserted, not verified"
        assert payload["graph_constant"] == 3.0

    def test_instance_with_violating_graph_exits_one(self, demo_dir):
        proc = run_cli(
            "certify", str(demo_dir / "counterexample.json"), "--beta", "2"
        )
        assert proc.returncode == 1
        assert "edge domination fails" in proc.stderr


class TestDemo:
    def test_writes_file_and_reports(self, tmp_path):
        proc = run_cli("demo", "clifford", "--m", "3", "--dir", str(tmp_path))
        assert proc.returncode == 0
        assert (tmp_path / "demo-clifford-3.json").exists()
        assert "wrote" in proc.stderr
        assert parse_kv(proc.stdout)["complete_bound"] == "9"

    def test_counterexample_demo_exits_zero(self, tmp_path):
        proc = run_cli("demo", "counterexample", "--dir", str(tmp_path))
        assert proc.returncode == 0
        assert "VIOLATED" in proc.stdout

    def test_m_flag_usage_errors(self, tmp_path):
        assert run_cli("demo", "clifford", "--dir", str(tmp_path)).returncode == 2
        assert (
            run_cli("demo", "chsh", "--m", "3", "--dir", str(tmp_path)).returncode == 2
        )

    def test_unknown_demo_rejected(self):
        assert run_cli("demo", "nonsense").returncode == 2


class TestSweep:
    def test_small_sweep_passes(self):
        proc = run_cli("sweep", "--trials", "25", "--seed", "9")
        assert proc.returncode == 0
        assert parse_kv(proc.stdout)["violations"] == "0"

    def test_deterministic_output(self):
        args = ("sweep", "--trials", "25", "--seed", "123", "--output", "json")
        assert run_cli(*args).stdout == run_cli(*args).stdout

    def test_csv_has_one_row_per_trial(self):
        proc = run_cli("sweep", "--trials", "12", "--seed", "4", "--output", "csv")
        rows = list(csv.DictReader(io.StringIO(proc.stdout)))
        assert len(rows) == 12
        assert all(int(r["violations"]) == 0 for r in rows)

    def test_bad_kind_exits_one(self):
        proc = run_cli("sweep", "--trials", "2", "--kinds", "haar")
        assert proc.returncode == 1

    def test_violations_exit_four(self):
        # an impossible slack tolerance forces every trial to report a
        # violation, exercising the dedicated exit code
        proc = run_cli("--tol=-1e9", "sweep", "--trials", "3", "--seed", "2")
        assert proc.returncode == 4
        assert "exceeds complete bound" in proc.stdout
