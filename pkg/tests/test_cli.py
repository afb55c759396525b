import json
import subprocess
import sys

import pytest

from eulerprod import coeffio
from eulerprod.cli import run

from oracles import eta_11_coefficients


def call(capsys, *argv):
    code = run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def records(text):
    return coeffio.parse_text(text)


def test_mf_coefs_level11(capsys):
    code, out, _ = call(capsys, "mf-coefs", "--decomp", "level11", "--length", "100", "--all")
    assert code == 0
    assert out.splitlines()[:3] == ["1 1", "2 -2", "3 -1"]
    idx, vals = records(out)
    assert [v[0] for v in vals] == eta_11_coefficients(100)[1:].tolist()


def test_mf_coefs_primes_only_quadratic(capsys):
    code, out, _ = call(capsys, "mf-coefs", "--decomp", "level43", "--length", "10", "--primes-only")
    assert code == 0
    assert out.splitlines() == ["2 0 1", "3 0 -1", "5 2 -1", "7 -2 1"]


def test_eisenstein(capsys):
    code, out, _ = call(capsys, "eisenstein", "--weight", "1", "--phi", "23,1", "--psi", "23,22", "--length", "4")
    assert code == 0
    lines = out.splitlines()
    # phi trivial mod 23 (not mod 1): E(z) - E(23z), whose constant terms cancel
    assert lines[0] == "# a0 = 0"
    assert lines[1:] == ["1 1", "2 2", "3 2", "4 3"]
    code, out, _ = call(capsys, "eisenstein", "--weight", "1", "--phi", "1,1", "--psi", "23,22", "--length", "4")
    assert out.splitlines() == ["# a0 = 3/2", "1 1", "2 2", "3 2", "4 3"]


def test_eisenstein_with_prime(capsys):
    code, _, err = call(capsys, "eisenstein", "--weight", "1", "--phi", "1,1", "--psi", "23,5",
                        "--length", "5", "--prime", "998244353")
    # 998244352 = 2^23 * 7 * 17 has no factor 11
    assert code == 3 and "IncompatiblePrimeError" in err
    code, out, _ = call(capsys, "eisenstein", "--weight", "2", "--phi", "1,1", "--psi", "1,1",
                        "--length", "6", "--prime", "998244353")
    assert code == 0
    assert [v[0] for v in records(out)[1]] == [1, 3, 4, 7, 6, 12]


def test_sieve(capsys):
    code, out, _ = call(capsys, "sieve", "--length", "20", "--print-decomps")
    assert code == 0 and "6 = 2 * 3" in out.splitlines()
    assert "# decomps=6" in out


def test_euler_expand(tmp_path, capsys):
    f = tmp_path / "liouville.json"
    f.write_text(json.dumps({"default": [1, 1]}))
    code, out, _ = call(capsys, "euler-expand", "--factors", str(f), "--length", "10")
    assert code == 0
    assert [v[0] for v in records(out)[1]] == [1, -1, -1, 1, -1, 1, -1, -1, 1, 1]
    code, out, _ = call(capsys, "euler-expand", "--factors", str(f), "--length", "10", "--prime", "101")
    assert [v[0] for v in records(out)[1]] == [1, -1, -1, 1, -1, 1, -1, -1, 1, 1]


def test_tensor_and_sympow(tmp_path, capsys):
    z = tmp_path / "zeta.json"
    z.write_text(json.dumps({"default": [1, -1]}))
    code, out, _ = call(capsys, "tensor", "--factors", str(z), "level11", "--length", "10")
    assert code == 0
    assert [v[0] for v in records(out)[1]] == [1, -2, -1, 2, 1, 2, -2, 0, -2, -2]
    code, out, _ = call(capsys, "sympow", "--factors", "level11", "--k", "2", "--length", "5")
    assert code == 0
    assert [v[0] for v in records(out)[1]] == [1, 2, -2, 0, -4]
    code, _, err = call(capsys, "tensor", "--factors", "level11", "level11", "--length", "20")
    assert code == 2 and "11" in err and "[lprod]" in err


def test_triple(capsys, tmp_path):
    out_file = tmp_path / "t.bin"
    code, out, _ = call(capsys, "triple", "--f", "level35f", "--g", "level35g", "--level", "35",
                        "--length", "13", "--out", str(out_file), "--binary")
    assert code == 0 and out == ""
    idx, vals = coeffio.read_binary(out_file)
    assert [v[0] for v in vals] == [1, 0, -4, 8, -11, 0, 15, 0, 13, 0, 12, -32, 10]


def test_output_is_deterministic(tmp_path, capsys):
    a, b = tmp_path / "a.txt", tmp_path / "b.txt"
    for p in (a, b):
        assert call(capsys, "mf-coefs", "--decomp", "level35g", "--length", "500", "--out", str(p),
                    "--threads", "3")[0] == 0
    assert a.read_bytes() == b.read_bytes()
    idx, vals = coeffio.read_any(a)
    assert idx[0] == 2 and len(vals[0]) == 2


def test_bench(capsys):
    code, out, _ = call(capsys, "bench", "--length", "2000", "--ops")
    assert code == 0
    metrics = dict(line.split("=", 1) for line in out.splitlines())
    assert int(metrics["euler_muls"]) < 2000 and int(metrics["euler_adds"]) < 2000
    assert int(metrics["eis_k1_muls"]) < 2000
    assert float(metrics["mf_level11_seconds"]) >= 0


@pytest.mark.parametrize("argv,code", [
    (["nonsense"], 2),
    (["mf-coefs", "--length", "10"], 2),
    (["mf-coefs", "--decomp", "missing.json", "--length", "10"], 2),
    (["mf-coefs", "--decomp", "level11", "--length", "0"], 2),
    (["eisenstein", "--weight", "1", "--phi", "23", "--psi", "1,1", "--length", "3"], 2),
    (["eisenstein", "--weight", "1", "--phi", "10,4", "--psi", "1,1", "--length", "3"], 2),
    (["mf-coefs", "--decomp", "level11", "--length", "100", "--prime", "97"], 4),
    (["mf-coefs", "--decomp", "level11", "--length", "100", "--prime", str((1 << 57) + 1)], 2),
    (["sieve", "--length", "5", "--threads", "0"], 2),
])
def test_exit_codes(capsys, argv, code):
    assert call(capsys, *argv)[0] == code


def test_header_mismatch_is_a_computation_error(capsys, tmp_path):
    from importlib import resources

    data = json.loads(resources.files("eulerprod").joinpath("data", "level11.json").read_text())
    data["coefficients"] = ["-3/2", "7/2"]
    bad = tmp_path / "bad.json"
    bad.write_text(json.dumps(data))
    code, _, err = call(capsys, "mf-coefs", "--decomp", str(bad), "--length", "50")
    assert code == 3 and "IntegrityError" in err and "[bgform]" in err


def test_capacity_exit(capsys):
    code, _, err = call(capsys, "mf-coefs", "--decomp", "level11", "--length", "100",
                        "--prime", "72057594037928017")  # the first prime above 2^56
    assert code == 4 and "2^56" in err


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "eulerprod", "sieve", "--length", "20"],
                          capture_output=True, text=True, check=True)
    assert "# primes=8" in proc.stdout
