import csv
import subprocess
import sys

import numpy as np
import pytest

from intzpack import cli, core


@pytest.fixture
def raw(tmp_path):
    path = tmp_path / "raw.bin"
    assert cli.main(["gen", "--model", "cluster", "--n", "3000", "--range", "1000000",
                     "--count", "2", "--seed", "4", "--out", str(path)]) == 0
    return path


def test_gen_writes_raw_container(raw):
    name, arrays = core.container_read(raw)
    assert name == "RAW" and len(arrays) == 2
    assert all(sum(c.original_length for c in a) == 3000 for a in arrays)


@pytest.mark.parametrize("codec", ["g8iu", "simdbp128-s4", "simplepfor"])
def test_encode_decode_roundtrip(raw, tmp_path, codec):
    enc, dec = tmp_path / "e.bin", tmp_path / "d.bin"
    assert cli.main(["encode", "--codec", codec, "--in", str(raw), "--out", str(enc)]) == 0
    assert core.container_read(enc)[0] == codec
    assert cli.main(["decode", "--in", str(enc), "--out", str(dec)]) == 0
    assert dec.read_bytes() == raw.read_bytes()


def test_bench_and_weights(raw, tmp_path, capsys):
    out = tmp_path / "r.csv"
    w = tmp_path / "w.csv"
    w.write_text("bucket,weight\n11,1\n")
    args = ["bench", "--codecs", "vbyte,bp32", "--data", str(raw), "--csv", str(out),
            "--weights", str(w), "--min-time", "0.01", "--runs", "1"]
    assert cli.main(args) == 0
    rows = list(csv.DictReader(out.open()))
    assert [r["codec"] for r in rows] == ["bp32", "vbyte"]
    assert all(r["bucket"] == "11" and float(r["decode_mis"]) > 0 for r in rows)
    assert "bp32" in capsys.readouterr().out


def test_recipe_pattern():
    for text in ["recipe:shortxuniform", "recipe:long-cluster", "recipe:short_cluster"]:
        assert cli._RECIPE.match(text)
    assert not cli._RECIPE.match("recipe:mediumxuniform")


def test_analyze(raw, capsys):
    assert cli.main(["analyze", "--data", str(raw)]) == 0
    text = capsys.readouterr().out
    assert "entropy of deltas" in text and "B=128" in text


def test_errors_are_reported(tmp_path, capsys):
    assert cli.main(["decode", "--in", str(tmp_path / "missing"), "--out", str(tmp_path / "o")]) == 1
    bad = tmp_path / "bad.bin"
    bad.write_bytes(b"garbage!")
    assert cli.main(["analyze", "--data", str(bad)]) == 1
    assert "error" in capsys.readouterr().err
    with pytest.raises(SystemExit):
        cli.main(["encode", "--codec", "zstd", "--in", "a", "--out", "b"])


def test_module_entry_point(tmp_path):
    out = tmp_path / "g.bin"
    r = subprocess.run([sys.executable, "-m", "intzpack", "gen", "--model", "uniform", "--n", "10",
                        "--range", "100", "--out", str(out)], capture_output=True, text=True)
    assert r.returncode == 0, r.stderr
    _, arrays = core.container_read(out)
    assert core.decode_array("RAW", arrays[0]).size == 10
    assert np.all(np.diff(core.decode_array("RAW", arrays[0]).astype(int)) > 0)
