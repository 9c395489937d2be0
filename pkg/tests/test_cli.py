import io
import json

import pytest

from pathrw.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def test_normalize():
    assert run("normalize", "sigma(sigma(loop))") == (0, "loop\n", "")


def test_normalize_trace_text():
    code, out, _ = run("normalize", "--trace", "tau(loop,sigma(loop))")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert lines[1].split()[2] == "tr" and lines[-1] == "result rho(base)"


def test_normalize_trace_json():
    code, out, _ = run("normalize", "--trace=json", "tau(loop,sigma(loop))")
    data = json.loads(out)
    assert code == 0 and [s["rule"] for s in data["steps"]] == ["tr"]


@pytest.mark.parametrize("expr", ["tau(x", "nope"])
def test_normalize_input_errors(expr):
    code, out, err = run("normalize", expr)
    assert code == 2 and out == "" and err.startswith("error:")


def test_budget_exit_code():
    assert run("normalize", "--budget", "1", "sigma(sigma(sigma(sigma(loop))))")[0] == 3


def test_equal():
    assert run("equal", "tau(loop,rho(base))", "loop")[:2] == (0, "equal\n")
    assert run("equal", "loop", "rho(base)")[:2] == (1, "distinct\n")
    assert run("equal", "sigma(loop)", "sigma(loop)")[0] == 0


def test_winding():
    assert run("winding", "rho(base)")[1] == "0\n"
    assert run("winding", "tau(loop,tau(loop,loop))")[1] == "3\n"
    assert run("winding", "sigma(loop)")[1] == "-1\n"


def test_rules_table():
    code, out, _ = run("rules", "list")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 51 and lines[1].split()[:2] == ["1", "sr"]


def test_check_rules():
    code, out, _ = run("check", "rules")
    assert code == 0 and "50/50" in out


def test_check_unknown_suite():
    assert run("check", "bogus")[0] == 2


def test_check_circle_small():
    code, out, _ = run("check", "circle", "--samples", "50")
    assert code == 0 and "FAIL" not in out


def test_env_file(tmp_path):
    f = tmp_path / "nat.env"
    f.write_text("fun succ : constructor\n")
    assert run("normalize", "--env", str(f), "mu[succ](rho(0))")[1] == "rho(1)\n"
    assert run("normalize", "--env", str(tmp_path / "missing"), "rho(0)")[0] == 2


def test_random_is_deterministic():
    a = run("random", "--samples", "5", "--seed", "3")
    assert a == run("random", "--samples", "5", "--seed", "3") and len(a[1].splitlines()) == 5
