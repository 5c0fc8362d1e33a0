import json
import math
import re
from pathlib import Path

import pytest

from eisbasis import cli, verify
from eisbasis.cli import GOLDEN_PK, UsageError, main, parse_character, parse_complex, pk_table_text
from eisbasis.report import report


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def rows(text):
    return [json.loads(line) for line in text.splitlines() if line.strip()]


def strip_times(text):
    return re.sub(r'"wall_ms": [0-9.e+-]+', '"wall_ms": 0', text)


@pytest.mark.parametrize("text,value", [
    ("1.5", 1.5), ("-2", -2), ("0.3+1.1i", 0.3 + 1.1j), ("0.3-1.1j", 0.3 - 1.1j), ("2i", 2j), ("-i", -1j),
    ("i", 1j), (" 1e-3 + 2.5e1i ", 0.001 + 25j), ("+.5-i", 0.5 - 1j), ("-2.5j", -2.5j), ("3+i", 3 + 1j),
])
def test_parse_complex(text, value):
    assert parse_complex(text) == value


@pytest.mark.parametrize("text", ["", "abc", "1+", "1,5", "i2", "1+2k", "--1"])
def test_parse_complex_rejects(text):
    with pytest.raises(UsageError):
        parse_complex(text)


def test_parse_character():
    assert parse_character("5,2").modulus == 5
    for bad in ("5", "5,x", "0,0", "5,9"):
        with pytest.raises(UsageError):
            parse_character(bad)


def test_golden_pk_table_matches():
    assert GOLDEN_PK.exists()
    assert GOLDEN_PK.read_bytes() == pk_table_text(8).encode()


def test_dump_pk_stdout_csv(capsys):
    code, out, _ = run(capsys, "dump", "pk-polynomials", "--format", "csv")
    assert code == 0
    assert out == GOLDEN_PK.read_text()


def test_regenerate_refuses_on_failure(tmp_path, monkeypatch):
    target = tmp_path / "pk.csv"
    target.write_text("keep")
    bad = report("phi-mellin", {"k": 0}, 1.0, 1e-7)
    monkeypatch.setattr(cli, "_pk_selfcheck", lambda: [bad])
    assert main(["dump", "pk-polynomials", "--regenerate", str(target)]) == 1
    assert target.read_text() == "keep"
    monkeypatch.setattr(cli, "_pk_selfcheck", lambda: [])
    assert main(["dump", "pk-polynomials", "--regenerate", str(target)]) == 0
    assert target.read_text() == pk_table_text(8)


def test_chars(capsys):
    code, out, _ = run(capsys, "chars", "--modulus", "5", "--list")
    rs = rows(out)
    assert code == 0 and len(rs) == 4
    assert {"modulus", "exponents", "conductor", "parity", "order"} <= set(rs[0])
    code, out, _ = run(capsys, "chars", "--modulus", "3", "--index", "1", "--gauss")
    r = rows(out)[0]
    assert abs(complex(r["gauss"]["re"], r["gauss"]["im"]) - 1j * math.sqrt(3)) < 1e-12


def test_lfun(capsys):
    code, out, _ = run(capsys, "lfun", "--modulus", "1", "--index", "0", "--s", "2")
    r = rows(out)[0]
    assert code == 0 and abs(r["value_re"] - math.pi**2 / 6) < 1e-13 and "precision_est" in r
    code, out, err = run(capsys, "lfun", "--modulus", "1", "--index", "0", "--s", "1")
    assert code == 3 and json.loads(err)["error"] == "PoleError"
    code, _, err = run(capsys, "lfun", "--modulus", "1", "--index", "0", "--s", "0.5+80i")
    assert code == 3


def test_phi_and_whittaker(capsys):
    code, out, _ = run(capsys, "phi", "--k", "2", "--eps", "-1", "--s", "2.2", "--beta", "0.4")
    assert code == 0 and rows(out)
    code, out, _ = run(capsys, "whittaker", "--kappa", "0.5", "--mu", "0.3", "--y", "2")
    assert code == 0 and rows(out)
    code, _, _ = run(capsys, "whittaker", "--kappa", "0.5", "--mu", "0.3", "--y", "500")
    assert code == 3


def test_cusps_and_kloosterman(capsys):
    code, out, _ = run(capsys, "cusps", "--level", "12")
    assert code == 0 and len(rows(out)) == 6
    code, out, _ = run(capsys, "cusps", "--level", "16", "--psi", "16,0", "--singular-only")
    assert code == 0
    code, out, _ = run(capsys, "kloosterman", "--level", "1", "--m", "1", "--n", "1", "--c", "3")
    r = rows(out)[0]
    assert code == 0 and abs(r["value_re"] + 1) < 1e-12
    code, _, _ = run(capsys, "kloosterman", "--level", "4", "--m", "1", "--n", "1", "--c", "6")
    assert code == 2


def test_eval_modes_agree(capsys):
    common = ["--level", "12", "--chi1", "3,1", "--chi2", "4,1", "--k", "0", "--z", "0.3+1.1i", "--s", "1.4"]
    vals = {}
    for mode in ("lattice", "fourier"):
        code, out, _ = run(capsys, "eval", "--mode", mode, *common)
        r = rows(out)[0]
        assert code == 0 and "truncation" in r
        vals[mode] = complex(r["value_re"], r["value_im"])
    assert abs(vals["lattice"] - vals["fourier"]) < 1e-8 * abs(vals["lattice"])
    code, out, _ = run(capsys, "eval", "--mode", "coset", "--level", "12", "--psi", "12,0", "--f", "3", "--k", "0",
                       "--z", "0.3+1.1i", "--s", "1.4")
    assert code == 0 and rows(out)


def test_basis_commands(capsys):
    code, out, _ = run(capsys, "basis", "forward", "--level", "12", "--psi", "12,0", "--f", "2")
    assert code == 0 and rows(out)
    code, out, _ = run(capsys, "basis", "inverse", "--level", "12", "--chi1", "3,1", "--chi2", "1,0", "--B", "2")
    assert code == 0 and rows(out)
    code, out, _ = run(capsys, "basis", "verify", "--suite", "roundtrip", "--max-level", "6")
    assert code == 0 and all(r["pass"] for r in rows(out))


def test_usage_errors(capsys):
    assert run(capsys, "verify", "no-such-suite")[0] == 2
    assert run(capsys, "chars")[0] == 2
    assert run(capsys, "lfun", "--modulus", "5", "--index", "0", "--s", "zz")[0] == 2
    assert run(capsys, "verify", "cusp-count", "--tol", "1")[0] == 2
    assert run(capsys, "bogus")[0] == 2


def test_verify_failure_exit(capsys, monkeypatch):
    def failing(case, cfg):
        return [report("cusp-count", {"N": case}, 1.0, 0.0)]

    monkeypatch.setitem(verify.SUITES, "cusp-count", (failing, lambda cfg: [1]))
    code, out, _ = run(capsys, "verify", "cusp-count")
    assert code == 1 and rows(out)[0]["pass"] is False


def test_verify_determinism(tmp_path):
    a, b = tmp_path / "a.jsonl", tmp_path / "b.jsonl"
    for path, jobs in ((a, "1"), (b, "2")):
        assert main(["verify", "inversion-lemma", "--seed", "11", "--jobs", jobs, "--output", str(path)]) == 0
    assert strip_times(a.read_text()) == strip_times(b.read_text())
    c = tmp_path / "c.jsonl"
    main(["verify", "inversion-lemma", "--seed", "12", "--output", str(c)])
    assert strip_times(a.read_text()) != strip_times(c.read_text())


def test_config_from_environment(tmp_path, monkeypatch, capsys):
    conf = tmp_path / "conf.json"
    conf.write_text(json.dumps({"max_level": 5, "format": "json"}))
    monkeypatch.setenv(cli.CONFIG_ENV, str(conf))
    code, out, _ = run(capsys, "verify", "cusp-count")
    assert code == 0 and [r["params"]["N"] for r in rows(out)] == [1, 2, 3, 4, 5]
    # the flag wins over the file
    code, out, _ = run(capsys, "verify", "cusp-count", "--max-level", "2")
    assert [r["params"]["N"] for r in rows(out)] == [1, 2]
    conf.write_text("not json")
    assert run(capsys, "verify", "cusp-count")[0] == 2


def test_csv_output(capsys):
    code, out, _ = run(capsys, "verify", "cusp-count", "--max-level", "3", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("identity,") and len(lines) == 4
