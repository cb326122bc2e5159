"""Command surface: subcommands, exit codes, deterministic JSON reports."""

import json

import pytest

from weylharm.cli import main


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestElementCommands:
    def test_normal_order(self, capsys):
        code, out = run_cli(capsys, "normal-order", "a1*c1")
        assert code == 0
        assert out.strip() == "c1*a1 + 1"

    def test_order_symmetric(self, capsys):
        code, out = run_cli(capsys, "order", "z1*zb1", "--q", "1/2")
        assert code == 0
        assert out.strip() == "c1*a1 + 1/2"

    def test_unorder_wick(self, capsys):
        code, out = run_cli(capsys, "unorder", "c1*a1 + 1", "--q", "0")
        assert code == 0
        assert out.strip() == "z1*zb1"

    def test_order_json_schema(self, capsys):
        code, out = run_cli(capsys, "order", "z1*zb1", "--q", "1/2", "--json")
        data = json.loads(out)
        assert data["d"] == 1
        assert data["terms"][0] == {
            "beta": [0], "alpha": [0], "re": "1/2", "im": "0",
        }

    def test_decompose_and_round_trip(self, capsys):
        code, out = run_cli(
            capsys, "decompose", "c1^2*a1^2", "--q", "1/2", "--json"
        )
        assert code == 0
        data = json.loads(out)
        assert [part["k"] for part in data["parts"]] == [0, 1, 2]

    def test_omega_table(self, capsys):
        code, out = run_cli(capsys, "omega", "--d", "1", "--q", "0", "--kmax", "2")
        assert code == 0
        assert "2, 3, 1" in out  # omega_2 = t^2 + 3t + 2 at q = 0, d = 1

    def test_eta(self, capsys):
        code, out = run_cli(capsys, "eta", "--d", "1", "--q", "1/2", "--k", "1")
        assert code == 0
        assert out.strip() == "c1*a1 + 1/2"

    def test_bad_rational_rejected(self, capsys):
        with pytest.raises(SystemExit):
            main(["order", "z1", "--q", "0.5"])


class TestVerify:
    def test_sl2_passes(self, capsys):
        code, out = run_cli(
            capsys, "verify", "sl2", "--d", "2", "--q", "1/3", "--deg", "4",
            "--count", "5",
        )
        assert code == 0
        assert "PASS" in out and "FAIL" not in out

    def test_radial_table_q0(self, capsys):
        code, out = run_cli(
            capsys, "verify", "radial", "--d", "1", "--q", "0", "--kmax", "4"
        )
        assert code == 0
        assert "6, 11, 6, 1" in out  # rising factorial row

    def test_json_deterministic(self, capsys):
        args = ["verify", "intertwine", "--d", "1", "--q", "1/2",
                "--count", "4", "--json", "--seed", "42"]
        code1, out1 = run_cli(capsys, *args)
        code2, out2 = run_cli(capsys, *args)
        assert code1 == code2 == 0
        assert out1 == out2
        report = json.loads(out1)
        assert set(report) >= {"suite", "params", "seed", "cases"}
        assert report["seed"] == 42
        for case in report["cases"]:
            assert set(case) == {"id", "status", "detail"}

    def test_orthogonality(self, capsys):
        code, out = run_cli(
            capsys, "verify", "orthogonality", "--d", "1", "--kmax", "4", "--json"
        )
        assert code == 0
        report = json.loads(out)
        assert all(c["status"] == "PASS" for c in report["cases"])

    def test_genfun(self, capsys):
        code, out = run_cli(
            capsys, "verify", "genfun", "--q", "1/2", "--d", "1", "--order", "6"
        )
        assert code == 0

    def test_hahn(self, capsys):
        code, out = run_cli(capsys, "verify", "hahn", "--kmax", "5")
        assert code == 0

    def test_harmonics(self, capsys):
        code, out = run_cli(
            capsys, "verify", "harmonics", "--d", "1", "--kmax", "3",
            "--count", "3", "--deg", "4",
        )
        assert code == 0
