import csv
import io
import json
import os
from collections import Counter

import mpmath
import pytest

from mdzeta.cache import (
    CacheRecord,
    ResultCache,
    canonical_key,
    make_record,
    resolve_cache_dir,
)
from mdzeta.cli import diagram_rows, main
from mdzeta.errors import CacheError


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


# -- cache ------------------------------------------------------------------------


def test_write_then_read_returns_the_same_record(tmp_path):
    cache = ResultCache(tmp_path)
    rec = make_record("2|cone|z(2;2)|S<=10", complex(1.5, -0.25), 1e-3, 45)
    cache.write(rec)
    assert cache.read(rec.key) == rec
    assert cache.list() == [rec]


def test_clear_then_read_misses(tmp_path):
    cache = ResultCache(tmp_path)
    rec = make_record("k", 1 + 0j, None, 1)
    cache.write(rec)
    assert cache.clear() == 1
    assert cache.read("k") is None
    assert cache.clear() == 0


def test_whitespace_variants_share_one_record(tmp_path):
    k1 = canonical_key(2, "2+w, 2-w", "z1(2,2; 2,2)", "S <= 60")
    k2 = canonical_key(2, "2+w,2-w", "z1(2,2;2,2)", "S<=60")
    assert k1 == k2
    cache = ResultCache(tmp_path)
    cache.write(make_record(k1, 2j, 0.0, 3))
    cache.write(make_record(k2, 2j, 0.0, 3))
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_no_temporary_files_left_behind(tmp_path):
    cache = ResultCache(tmp_path)
    for i in range(5):
        cache.write(make_record(f"k{i}", complex(i), 0.0, i))
    assert sorted(p.name.startswith(".tmp") for p in tmp_path.iterdir()) == [False] * 5


def test_io_failures_raise_cache_error(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("not a directory")
    with pytest.raises(CacheError):
        ResultCache(blocker / "sub").write(make_record("k", 0j, 0.0, 0))
    bad = tmp_path / "bad"
    bad.mkdir()
    (bad / "x.json").write_text("{not json")
    with pytest.raises(CacheError):
        ResultCache(bad).list()


def test_cache_dir_resolution(monkeypatch, tmp_path):
    assert resolve_cache_dir(str(tmp_path)) == tmp_path
    monkeypatch.setenv("MDZETA_CACHE_DIR", str(tmp_path / "env"))
    assert resolve_cache_dir() == tmp_path / "env"
    monkeypatch.delenv("MDZETA_CACHE_DIR")
    monkeypatch.setenv("XDG_CACHE_HOME", str(tmp_path / "xdg"))
    assert resolve_cache_dir() == tmp_path / "xdg" / "mdzeta"


def test_record_round_trips_through_dict():
    rec = CacheRecord("k", 1.0, 2.0, None, 4, 0.0)
    assert CacheRecord(**rec.to_dict()) == rec


# -- eval -----------------------------------------------------------------------------


def test_eval_real_cone_value_is_positive_real():
    code, out, _ = run("eval", "--d", "2", "--cone", "2+w,2-w", "--sym", "z(2;2)", "--shell", "60", "--format", "json")
    assert code == 0
    data = json.loads(out)
    assert data["value_re"] > 0 and data["value_im"] == 0
    assert data["term_count"] == 59 * 60 // 2


def test_eval_gaussian_symmetric_pair_is_real_positive():
    code, out, _ = run("eval", "--d", "-1", "--cplus", "--sym", "z1(2,2;2,2)", "--radius", "40", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["value_re"] > 0
    assert abs(data["value_im"]) <= 1e-12 * data["value_re"]


def test_eval_mzv_near_quarter_zeta4():
    code, out, _ = run("eval", "--sym", "mzv(1,3)", "--cutoff", "5000", "--format", "json")
    data = json.loads(out)
    assert code == 0
    assert abs(data["value_re"] - float(mpmath.zeta(4) / 4)) <= data["tail"]


def test_eval_uses_and_skips_the_cache(tmp_path):
    args = ("eval", "--sym", "z(2;3)", "--shell", "20", "--cache-dir", str(tmp_path), "--format", "json")
    _, first, _ = run(*args)
    assert len(list(tmp_path.glob("*.json"))) == 1
    _, second, _ = run(*args)
    assert first == second
    run("eval", "--sym", "z(3;3)", "--shell", "20", "--cache-dir", str(tmp_path), "--no-cache")
    assert len(list(tmp_path.glob("*.json"))) == 1


def test_eval_text_and_csv_formats():
    code, out, _ = run("eval", "--sym", "z(2;2)", "--shell", "10")
    assert code == 0 and "value" in out and "terms  45" in out
    _, out, _ = run("eval", "--sym", "z(2;2)", "--shell", "10", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert rows[0]["term_count"] == "45"


@pytest.mark.parametrize(
    "argv,code",
    [
        (("eval", "--sym", "z(2;"), 2),
        (("eval", "--sym", "z(2;2)", "--d", "4"), 3),
        (("eval", "--sym", "z(2;2)", "--d", "2", "--cone", "1+w,2"), 3),
        (("eval", "--sym", "s1(2,2;2,2)", "--d", "-1", "--cplus", "--radius", "5"), 3),
        (("eval", "--sym", "z(1;1)", "--shell", "10"), 4),
        (("eval", "--sym", "mzv(2,1)", "--cutoff", "10"), 4),
        (("eval", "--sym", "z(2;2)", "--shell", "-3"), 2),
        (("stuffle", "--real", "2;2", "x;"), 2),
    ],
)
def test_exit_codes(argv, code):
    got, _, err = run(*argv)
    assert got == code
    assert err.startswith("error:")


def test_cache_io_failure_exits_five(tmp_path):
    blocker = tmp_path / "file"
    blocker.write_text("")
    code, _, _ = run("eval", "--sym", "z(2;2)", "--shell", "5", "--cache-dir", str(blocker / "x"))
    assert code == 5


def test_missing_kind_flag_is_a_usage_error():
    with pytest.raises(SystemExit) as exc:
        run("stuffle", "2;2", "2;2")
    assert exc.value.code == 2


# -- combinatorics commands -----------------------------------------------------------


def test_shuffle_command():
    code, out, _ = run("shuffle", "2;2", "2;2")
    assert code == 0
    assert out.strip() == (
        "8*z1(1,3;1,3) + 4*z1(1,3;2,2) + 4*z1(2,2;1,3) + 2*z1(2,2;2,2)"
        " + 8*zr(1,3;1,3) + 4*zr(1,3;2,2) + 4*zr(2,2;1,3) + 2*zr(2,2;2,2)"
    )
    _, out, _ = run("shuffle", "--diagrams", "--format", "json", "2;2", "2;2")
    assert len(json.loads(out)["diagrams"]) == 36
    _, out, _ = run("shuffle", "--mzv", "2", "2")
    assert out.strip() == "4*mzv(1,3) + 2*mzv(2,2)"


def test_stuffle_commands():
    assert run("stuffle", "--imaginary", "2;2", "2;2")[1].strip() == "z(4;4) + 2*z1(2,2;2,2)"
    _, out, _ = run("stuffle", "--real", "a;c", "b;d", "--format", "json")
    assert len(json.loads(out)["terms"]) == 9
    _, out, _ = run("stuffle", "--mzv", "2", "2")
    assert out.strip() == "mzv(4) + 2*mzv(2,2)"


def test_derive_commands():
    _, out, _ = run("derive", "--real", "2;2", "2;2", "--format", "json")
    assert json.loads(out)["printed_diff"] == []
    _, out, _ = run("derive", "--imaginary", "2;2", "2;2", "--format", "json")
    diff = json.loads(out)["printed_diff"]
    assert diff == [{"symbol": "zr(1,3;1,3)", "engine": "-8", "printed": "-2"}]
    _, out, _ = run("derive", "--imaginary", "2;2", "2;2")
    assert "engine -8 vs printed -2" in out
    _, out, _ = run("derive", "--real", "2;3", "2;2")
    assert "no printed form" in out


def test_verify_command_is_deterministic():
    argv = ("verify", "--real", "2;2", "2;2", "--shell", "16", "--format", "json")
    code, first, _ = run(*argv)
    _, second, _ = run(*argv)
    assert code == 0 and first == second
    assert json.loads(first)["verdict"] == "pass"
    _, out, _ = run("verify", "--mzv", "2", "2", "--cutoff", "1000", "--format", "csv")
    assert out.splitlines()[0] == "symbol,coeff,value_re,value_im,tail"


def test_diagram_table():
    rows = diagram_rows()
    assert len(rows) == 36
    assert rows[0]["term"] == "1/(N(alpha)^2 N(alpha+beta)^2)"
    assert Counter(r["table"] for r in rows) == {"(1,1)": 9, "(1,2)": 9, "(2,1)": 9, "(2,2)": 9}
    counts = Counter(r["symbol"] for r in rows)
    assert counts == {
        "z1(2,2;2,2)": 2, "z1(1,3;1,3)": 8, "z1(1,3;2,2)": 4, "z1(2,2;1,3)": 4,
        "zr(2,2;2,2)": 2, "zr(1,3;1,3)": 8, "zr(1,3;2,2)": 4, "zr(2,2;1,3)": 4,
    }


def test_diagrams_command_outputs():
    code, out, _ = run("diagrams", "--format", "csv")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 37
    assert lines[0] == "table,index,axis1,axis2,term,symbol"
    _, text, _ = run("diagrams")
    assert text.count("Table ") == 4


def test_cache_command(tmp_path):
    run("eval", "--sym", "z(2;2)", "--shell", "6", "--cache-dir", str(tmp_path))
    code, out, _ = run("cache", "list", "--cache-dir", str(tmp_path))
    assert code == 0 and "z(2;2)" in out
    code, out, _ = run("cache", "clear", "--cache-dir", str(tmp_path))
    assert code == 0 and "removed 1" in out
    assert run("cache", "list", "--cache-dir", str(tmp_path))[1] == ""


def test_env_var_points_the_cache(monkeypatch, tmp_path):
    monkeypatch.setenv("MDZETA_CACHE_DIR", os.fspath(tmp_path / "c"))
    run("eval", "--sym", "z(2;2)", "--shell", "6")
    assert len(list((tmp_path / "c").glob("*.json"))) == 1
