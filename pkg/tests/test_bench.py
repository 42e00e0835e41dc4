import csv
import io
import json
import math

import numpy as np
import pytest

import oracle
from intzpack import bench
from intzpack.bench import BenchRecord


def test_entropy_examples():
    assert bench.entropy_of_deltas([np.arange(1, 50) * 3]) == pytest.approx(0.0, abs=1e-12)
    assert bench.entropy_of_deltas([[1, 3, 4, 6, 7, 9]]) == pytest.approx(1.0)
    # deltas 1,2,2,2 -> p = (0.25, 0.75)
    assert bench.entropy_of_deltas([[1, 3, 5, 7]]) == pytest.approx(0.8113, abs=5e-5)
    with pytest.raises(ValueError):
        bench.entropy_of_deltas([])


def test_entropy_pools_arrays():
    rng = np.random.default_rng(0)
    arrays = [np.sort(rng.choice(10000, 300, replace=False)) for _ in range(3)]
    pooled = [d for a in arrays for d in oracle.deltas(a.tolist())]
    assert bench.entropy_of_deltas(arrays) == pytest.approx(oracle.entropy(pooled))


def test_theoretic_bounds():
    assert bench.theoretic_bounds(1 << 25, 32) == (7.0, 13.25)
    assert bench.theoretic_bounds(1 << 23, 128) == (9.0, 17.0625)
    assert bench.theoretic_bounds(1 << 32, 32)[0] == 0.0
    for bad in [(0, 32), ((1 << 32) + 1, 32), (100, 64)]:
        with pytest.raises(ValueError):
            bench.theoretic_bounds(*bad)
    assert bench.two_optimal_log2_threshold(32) == 25.75
    assert bench.two_optimal_log2_threshold(128) == 23.9375


def test_length_bucket():
    assert [bench.length_bucket(n) for n in (1, 2, 3, 1 << 15, (1 << 16) - 1)] == [0, 1, 1, 15, 15]


def test_measure_record():
    x = np.cumsum(np.full(4096, 200, np.uint32), dtype=np.uint32)
    r = bench.measure("vbyte", [x, x], "const", min_time=0.01, runs=2)
    assert (r.codec, r.dataset, r.bucket, r.bits_per_int) == ("vbyte", "const", 12, 16.0)
    assert r.encode_mis > 0 and r.decode_mis > 0


def test_measure_errors():
    with pytest.raises(ValueError, match="nothing to measure"):
        bench.measure("bp32", [])
    with pytest.raises(ValueError, match="nothing to measure"):
        bench.measure("bp32", [np.zeros(0, np.uint32)])
    with pytest.raises(ValueError):
        bench.measure("bp32", [np.arange(10), np.arange(1000)], min_time=0.01)
    recs = bench.measure_buckets("bp32", [np.arange(10), np.arange(1000)], min_time=0.01, runs=1)
    assert [r.bucket for r in recs] == [3, 9]


def _rec(codec, bucket, bpi, ds="d"):
    return BenchRecord(codec, ds, bucket, bpi, 10.0 * bucket, 20.0 * bucket)


def test_aggregate():
    recs = [_rec("a", 10, 4.0), _rec("a", 15, 8.0), _rec("b", 15, 2.0)]
    rows = {r["codec"]: r for r in bench.aggregate(recs)}
    assert rows["a"]["bits_per_int"] == 6.0 and rows["b"]["bits_per_int"] == 2.0
    assert rows["a"]["decode_mis"] == 250.0
    two = recs[:2]
    uniform = bench.aggregate(two, {10: 0.5, 15: 0.5})[0]
    assert uniform == bench.aggregate(two)[0]
    assert bench.aggregate(two, {10: 1.0, 15: 0.0})[0]["bits_per_int"] == 4.0
    with pytest.raises(ValueError):
        bench.aggregate(recs, {10: 0.5, 15: 0.5})  # codec b lacks bucket 10
    with pytest.raises(ValueError):
        bench.aggregate(recs, {10: 0.7, 15: 0.7})


def test_load_weights(tmp_path):
    j = tmp_path / "w.json"
    j.write_text(json.dumps({"10": 0.25, "15": 0.75}))
    c = tmp_path / "w.csv"
    c.write_text("bucket,weight\n10,0.25\n15,0.75\n")
    assert bench.load_weights(j) == bench.load_weights(c) == {10: 0.25, 15: 0.75}


def test_emit_csv():
    buf = io.StringIO()
    bench.emit_csv([], buf)
    assert buf.getvalue() == "codec,dataset,bucket,bits_per_int,encode_mis,decode_mis\n"
    recs = [
        BenchRecord("z", "d,1", 3, 16.0, 1234.5678, 0.000123456),
        BenchRecord("a", "x", 20, 6.33333, 98765.4, 2.0),
        BenchRecord("a", "x", 5, 1 / 3, 1.0, math.pi),
    ]
    buf = io.StringIO()
    bench.emit_csv(recs, buf)
    rows = list(csv.reader(io.StringIO(buf.getvalue())))
    assert rows[1] == ["a", "x", "5", "0.3333", "1", "3.142"]
    assert rows[2] == ["a", "x", "20", "6.333", "98770", "2"]
    assert rows[3] == ["z", "d,1", "3", "16", "1235", "0.0001235"]
