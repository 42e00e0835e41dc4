"""Timing, size accounting, entropy, bounds and aggregation."""
import csv
import json
import math
import time
from collections import defaultdict
from dataclasses import dataclass

import numpy as np

from . import core

CSV_HEADER = ("codec", "dataset", "bucket", "bits_per_int", "encode_mis", "decode_mis")


@dataclass(frozen=True)
class BenchRecord:
    codec: str
    dataset: str
    bucket: int
    bits_per_int: float
    encode_mis: float
    decode_mis: float


def length_bucket(n):
    """``K`` such that ``2**K <= n < 2**(K+1)``."""
    if n < 1:
        raise ValueError("empty arrays have no length bucket")
    return int(n).bit_length() - 1


def _best_rate(fn, total, min_time, runs, check):
    fn()  # warm-up, also triggers any remaining compilation
    best = math.inf
    for _ in range(runs):
        reps = 0
        start = time.perf_counter()
        while True:
            result = fn()
            reps += 1
            elapsed = time.perf_counter() - start
            if elapsed >= min_time:
                break
        check(result)
        best = min(best, elapsed / reps)
    return total / best / 1e6


def measure(codec, arrays, dataset="", min_time=0.5, runs=3):
    """Time encode and decode of ``arrays`` (all in one length bucket).

    Each timed run repeats the operation until ``min_time`` seconds pass and
    the best per-repetition time over ``runs`` runs is kept. Every run's
    output is checked against the input before its timing counts.
    """
    codec = core.get_codec(codec)
    arrays = [core.as_sorted_array(a) for a in arrays]
    arrays = [a for a in arrays if a.size]
    total = sum(a.size for a in arrays)
    if total == 0:
        raise ValueError("nothing to measure")
    buckets = {length_bucket(a.size) for a in arrays}
    if len(buckets) > 1:
        raise ValueError("arrays span several length buckets; use measure_buckets")

    def encode_all():
        return [core.encode_array(codec, a) for a in arrays]

    def decode_all():
        return [core.decode_array(codec, c) for c in encoded]

    def check_decoded(outs):
        for a, b in zip(arrays, outs):
            if not np.array_equal(a, b):
                raise AssertionError(f"{codec.name}: decoded output differs from input")

    def check_encoded(chunk_lists):
        check_decoded([core.decode_array(codec, c) for c in chunk_lists])

    encoded = encode_all()
    check_encoded(encoded)
    words = sum(core.payload_words(c) for c in encoded)
    enc = _best_rate(encode_all, total, min_time, runs, check_encoded)
    dec = _best_rate(decode_all, total, min_time, runs, check_decoded)
    return BenchRecord(codec.name, dataset, buckets.pop(), 32.0 * words / total, enc, dec)


def measure_buckets(codec, arrays, dataset="", min_time=0.5, runs=3):
    """One record per length bucket present in ``arrays``."""
    groups = defaultdict(list)
    for a in arrays:
        if len(a):
            groups[length_bucket(len(a))].append(a)
    if not groups:
        raise ValueError("nothing to measure")
    return [measure(codec, groups[k], dataset, min_time, runs) for k in sorted(groups)]


def entropy_of_deltas(arrays):
    """Shannon entropy in bits per integer of the pooled scalar deltas."""
    parts = []
    for a in arrays:
        a = np.asarray(a, dtype=np.int64)
        if a.size:
            parts.append(np.diff(a, prepend=0))
    if not parts:
        raise ValueError("entropy of an empty dataset is undefined")
    _, counts = np.unique(np.concatenate(parts), return_counts=True)
    p = counts / counts.sum()
    return float(-(p * np.log2(p)).sum()) + 0.0


def theoretic_bounds(n, B):
    """``(log2(2**32 / n), 8/B + 1 + log2(B) + log2(2**32 / n))`` in bits per integer.

    The first value is the information-theoretic minimum for a set of ``n``
    distinct 32-bit integers; the second bounds binary packing with blocks of
    ``B`` integers on such a set.
    """
    if B not in (32, 128):
        raise ValueError("block size must be 32 or 128")
    if not 1 <= n <= 1 << 32:
        raise ValueError("n must be in [1, 2**32]")
    limit = 32.0 - math.log2(n)
    return limit, 8.0 / B + 1.0 + math.log2(B) + limit


def two_optimal_log2_threshold(B):
    """``log2 n`` below which the binary-packing bound is under twice the limit."""
    _, bound = theoretic_bounds(1, B)
    overhead = bound - 32.0
    return 32.0 - overhead


def _mean(records, field):
    return sum(getattr(r, field) for r in records) / len(records)


_FIELDS = ("bits_per_int", "encode_mis", "decode_mis")


def aggregate(records, weights=None):
    """Summaries per (codec, dataset).

    Without weights each metric is the plain mean over length buckets. With
    ``weights`` (bucket -> weight) it is the weighted sum; every weighted
    bucket must be present for every codec.
    """
    groups = defaultdict(lambda: defaultdict(list))
    for r in records:
        groups[(r.codec, r.dataset)][r.bucket].append(r)
    if weights is not None:
        weights = validate_weights(weights)
    rows = []
    for (codec, dataset), by_bucket in sorted(groups.items()):
        per_bucket = {
            k: {f: _mean(rs, f) for f in _FIELDS} for k, rs in by_bucket.items()
        }
        row = {"codec": codec, "dataset": dataset}
        if weights is None:
            for f in _FIELDS:
                row[f] = sum(v[f] for v in per_bucket.values()) / len(per_bucket)
        else:
            missing = sorted(set(weights) - set(per_bucket))
            if missing:
                raise ValueError(f"{codec}/{dataset}: no records for buckets {missing}")
            for f in _FIELDS:
                row[f] = sum(w * per_bucket[k][f] for k, w in weights.items())
        rows.append(row)
    return rows


def validate_weights(weights):
    out = {int(k): float(v) for k, v in dict(weights).items()}
    if any(v < 0 or not math.isfinite(v) for v in out.values()):
        raise ValueError("weights must be finite and non-negative")
    if not out or abs(sum(out.values()) - 1.0) > 1e-6:
        raise ValueError("weights must sum to 1")
    return out


def load_weights(path):
    """Read ``{bucket: weight}`` from a JSON object or a ``bucket,weight`` CSV."""
    with open(path, newline="") as f:
        text = f.read()
    if text.lstrip().startswith("{"):
        return validate_weights(json.loads(text))
    rows = [r for r in csv.reader(text.splitlines()) if r and any(c.strip() for c in r)]
    if rows and rows[0][0].strip().lower() == "bucket":
        rows = rows[1:]
    return validate_weights({r[0].strip(): r[1].strip() for r in rows})


def fmt4(x):
    """Four significant digits, positional notation."""
    return np.format_float_positional(
        float(x), precision=4, unique=False, fractional=False, trim="-"
    )


def emit_csv(records, sink):
    """Write records as CSV to a path or text file object."""
    ordered = sorted(records, key=lambda r: (r.codec, r.bucket, r.dataset))

    def write(f):
        w = csv.writer(f, lineterminator="\n")
        w.writerow(CSV_HEADER)
        for r in ordered:
            w.writerow([
                r.codec, r.dataset, r.bucket,
                fmt4(r.bits_per_int), fmt4(r.encode_mis), fmt4(r.decode_mis),
            ])

    if hasattr(sink, "write"):
        write(sink)
    else:
        with open(sink, "w", newline="") as f:
            write(f)
