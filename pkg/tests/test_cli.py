import json

import pytest

from jackpoly import cli


def run_cli(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr().out
    return code, out


class TestCompute:
    def test_E_text(self, capsys):
        code, out = run_cli(capsys, "compute", "E", "1,0", "--N", "2")
        assert code == 0
        assert out.strip() == "((1)/(α + 1))*z2 + z1"

    def test_P_m_basis(self, capsys):
        code, out = run_cli(capsys, "compute", "P", "2", "--N", "2")
        assert code == 0
        assert out.strip() == "m[2] + ((2)/(α + 1))*m[1,1]"

    def test_S_text(self, capsys):
        code, out = run_cli(capsys, "compute", "S", "1,0")
        assert code == 0
        assert out.strip() == "-x2 + x1"

    def test_json_byte_stable(self, capsys):
        _, out1 = run_cli(capsys, "compute", "E", "2,1,0", "--format", "json")
        _, out2 = run_cli(capsys, "compute", "E", "2,1,0", "--format", "json")
        assert out1 == out2
        obj = json.loads(out1)
        assert obj["N"] == 3
        exps = [tuple(t["exp"]) for t in obj["terms"]]
        assert exps == sorted(exps)

    def test_specialization(self, capsys):
        code, out = run_cli(capsys, "compute", "E", "1,0", "--alpha", "2")
        assert code == 0
        assert out.strip() == "(1/3)*z2 + z1"

    def test_bad_index_exits_2(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["compute", "P", "1,2"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["compute", "S", "1,1"])
        assert exc.value.code == 2
        with pytest.raises(SystemExit) as exc:
            cli.main(["compute", "E", "1,x"])
        assert exc.value.code == 2


class TestConstants:
    def test_text_rows(self, capsys):
        code, out = run_cli(capsys, "constants", "1,0")
        assert code == 0
        assert "d = α + 1" in out
        assert "dp = α" in out
        assert "u = (α)/(α + 1)" in out

    def test_zero_row(self, capsys):
        code, out = run_cli(capsys, "constants", "0,0")
        assert code == 0
        for line in out.strip().splitlines():
            assert line.split("=")[1].strip() == "1"

    def test_json(self, capsys):
        code, out = run_cli(capsys, "constants", "0,1", "--format", "json")
        obj = json.loads(out)
        assert obj["u"] == {"num": [1, 1], "den": [2, 1]}


class TestVerify:
    def test_filter_and_exit_zero(self, capsys):
        code, out = run_cli(capsys, "verify", "--filter", "value-at-ones",
                            "--N", "2", "--deg", "2")
        assert code == 0
        assert "PASS" in out and "E.value-at-ones" in out

    def test_json_format(self, capsys):
        code, out = run_cli(capsys, "verify", "--filter", "hook",
                            "--N", "2", "--deg", "2", "--format", "json")
        assert code == 0
        obj = json.loads(out)
        assert obj["summary"]["fail"] == 0
        assert obj["checks"][0]["name"] == "P.value-and-hook"

    def test_skip_when_k_missing(self, capsys):
        code, out = run_cli(capsys, "verify", "--filter", "S.norm",
                            "--N", "2", "--deg", "2", "--k", "1")
        assert code == 0
        assert "SKIP" in out

    def test_invalid_args_exit_2(self, capsys):
        for argv in (["verify", "--deg", "-1"],
                     ["verify", "--k", "0,1"],
                     ["verify", "--r", "1,zz"],
                     ["verify", "--filter", "no-such-check"]):
            with pytest.raises(SystemExit) as exc:
                cli.main(argv)
            assert exc.value.code == 2

    def test_deterministic_report(self, capsys):
        _, out1 = run_cli(capsys, "verify", "--filter", "society", "--deg", "3")
        _, out2 = run_cli(capsys, "verify", "--filter", "society", "--deg", "3")
        strip = lambda s: [l.split("(")[0] for l in s.splitlines()]
        assert strip(out1) == strip(out2)

    def test_parallel_workers(self, capsys):
        code, out = run_cli(capsys, "verify", "--filter", "binomial",
                            "--N", "2", "--deg", "2", "--jobs", "2")
        assert code == 0
        assert out.count("PASS") == 2

    def test_failing_check_exits_1_with_witness(self, capsys, monkeypatch):
        from jackpoly import verify

        def broken(bounds):
            return verify.CheckResult("zz.injected", {"n": 1}, "fail",
                                      "label=(1,0) lhs=0 rhs=1")

        monkeypatch.setitem(verify.CHECKS, "zz.injected", broken)
        code, out = run_cli(capsys, "verify", "--filter", "zz.injected")
        assert code == 1
        assert "FAIL" in out and "witness: label=(1,0) lhs=0 rhs=1" in out

    def test_crashing_check_reports_fail(self, capsys, monkeypatch):
        from jackpoly import verify

        def crashing(bounds):
            raise RuntimeError("boom")

        monkeypatch.setitem(verify.CHECKS, "zz.crash", crashing)
        code, out = run_cli(capsys, "verify", "--filter", "zz.crash")
        assert code == 1
        assert "exception" in out and "boom" in out


def test_module_entry_point():
    import os
    import pathlib
    import subprocess
    import sys
    env = dict(os.environ)
    src = pathlib.Path(__file__).resolve().parent.parent / "src"
    env["PYTHONPATH"] = str(src) + os.pathsep + env.get("PYTHONPATH", "")
    proc = subprocess.run([sys.executable, "-m", "jackpoly", "compute", "E", "0,1"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert proc.stdout.strip() == "z2"


class TestExpand:
    def test_omega_with_coeffs(self, capsys):
        code, out = run_cli(capsys, "expand", "omega", "--N", "2", "--deg", "1",
                            "--coeffs")
        assert code == 0
        assert "x1*y1" in out
        assert "[1, 0] -> (α + 1)/(α)" in out

    def test_pi_text(self, capsys):
        code, out = run_cli(capsys, "expand", "pi", "--N", "2", "--deg", "1")
        assert code == 0
        assert out.count("(1)/(α)") == 4

    def test_binomial_table(self, capsys):
        code, out = run_cli(capsys, "expand", "binomial", "--N", "2", "--deg", "2",
                            "--r", "1")
        assert code == 0
        assert "[1, 0] -> 1" in out

    def test_binomial_needs_r(self, capsys):
        with pytest.raises(SystemExit) as exc:
            cli.main(["expand", "binomial", "--N", "2", "--deg", "2"])
        assert exc.value.code == 2

    def test_expand_json_byte_stable(self, capsys):
        _, out1 = run_cli(capsys, "expand", "omega", "--N", "2", "--deg", "2",
                          "--format", "json")
        _, out2 = run_cli(capsys, "expand", "omega", "--N", "2", "--deg", "2",
                          "--format", "json")
        assert out1 == out2
