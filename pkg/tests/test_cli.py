import io
import json
import subprocess
import sys
from contextlib import redirect_stdout

import pytest
from hypothesis import given, settings, strategies as st

from gibonacci_sums import CountQuery, GibonacciSeed, PartialSumTable, s_colored
from gibonacci_sums.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_a(capsys):
    assert run(capsys, "a", "--g1", "1", "--g2", "1", "--k", "3", "--n", "2") == (0, "4\n", "")


def test_s(capsys):
    assert run(capsys, "s", "--g1", "3", "--g2", "2", "--k", "2", "--n", "6") == (0, "35\n", "")


def test_enumerate_paths(capsys):
    code, out, _ = run(capsys, "enumerate-paths", "--g1", "1", "--g2", "1", "--k", "3", "--n", "6")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 0
    assert lines[-1] == {"total": 4}
    assert [d["up_columns"] for d in lines[:-1]] == [[3, 4, 5], [3, 4, 6], [3, 5, 6], [4, 5, 6]]


def test_enumerate_sets_format(capsys):
    code, out, _ = run(capsys, "enumerate-sets", "--g1", "3", "--g2", "2", "--k", "3", "--n", "6")
    lines = [json.loads(line) for line in out.splitlines()]
    assert lines[0] == {"elements": [3, 4, 5], "color_class": "min_equals_size", "color_index": 0}
    assert lines[-1] == {"total": 11}
    assert all(set(d) == {"elements", "color_class", "color_index"} for d in lines[:-1])


def test_table(capsys):
    code, out, _ = run(capsys, "table", "--g1", "3", "--g2", "2", "--k", "1", "--n", "2")
    assert (code, out) == (0, "k,n,value\n0,1,3\n0,2,2\n1,1,3\n1,2,5\n")


def test_render(capsys):
    code, out, _ = run(capsys, "render", "--k", "3", "--n", "6", "--format", "svg")
    assert code == 0 and out.count("<path ") == 4
    code, out, _ = run(capsys, "render", "--k", "3", "--n", "6")
    assert code == 0 and out.count("path ups=") == 4


def test_domain_error_exit_1(capsys):
    code, out, err = run(capsys, "a", "--k", "1", "--n", "0")
    assert code == 1 and out == "" and "n must be >= 1" in err
    code, _, err = run(capsys, "s", "--g1", "0", "--k", "1", "--n", "3")
    assert code == 1 and "g1 must be >= 1" in err
    code, _, err = run(capsys, "enumerate-paths", "--k", "5", "--n", "6")
    assert code == 1 and "k must lie in" in err


@pytest.mark.parametrize("argv", [["a", "--k", "x", "--n", "2"], ["nope"], ["s", "--n", "3"], []])
def test_usage_error_exit_2(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-k", "3", "--max-n", "8", "--oracle-max-n", "6",
                       "--seed", "1,1", "--seed", "2,9")
    assert code == 0
    assert out.count("PASS") == 12 and out.endswith("12/12 identities hold\n")


def test_verify_failure_exit_3(capsys, monkeypatch):
    from gibonacci_sums import verify

    monkeypatch.setattr(verify, "a_at_3", lambda seed, k: 0)
    code, out, _ = run(capsys, "verify", "--max-k", "2", "--max-n", "4", "--oracle-max-n", "4", "-v")
    assert code == 3
    assert "FAIL" in out and "a_at_3: seed=(1,1) k=0 n=3" in out


@settings(max_examples=40, deadline=None)
@given(
    g1=st.integers(1, 10**30),
    g2=st.integers(1, 10**30),
    k=st.integers(0, 30),
    n=st.integers(1, 150),
)
def test_printed_decimals_roundtrip(g1, g2, k, n):
    seed = GibonacciSeed(g1, g2)
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["a", "--g1", str(g1), "--g2", str(g2), "--k", str(k), "--n", str(n)]) == 0
    assert int(buf.getvalue()) == PartialSumTable(seed).value(k, n)
    buf = io.StringIO()
    with redirect_stdout(buf):
        assert main(["s", "--g1", str(g1), "--g2", str(g2), "--k", str(k), "--n", str(n)]) == 0
    assert int(buf.getvalue()) == s_colored(CountQuery(n, k, seed))


def test_module_entry_point_is_byte_stable():
    cmd = [sys.executable, "-m", "gibonacci_sums", "enumerate-sets", "--g1", "3", "--g2", "2", "--k", "2", "--n", "6"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first.endswith(b'{"total": 35}\n')
