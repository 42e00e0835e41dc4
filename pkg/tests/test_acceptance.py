"""Acceptance criteria; each prints a PASS/FAIL line and the summary repeats them."""
import math
import time

import numpy as np
import pytest

import oracle
from intzpack import basic, bench, bitpack, core, datagen, patched

# long Uniform targets in bits/int, keyed by codec name
LONG_TARGETS = {
    "simdbp128": 7.0,
    "bp32": 6.7,
    "simple8b": 6.4,
    "fastpfor": 6.3,
    "simplepfor": 6.3,
    "simdfastpfor": 6.4,
    "pfor": 7.3,
    "vbyte": 8.0,
    "g8iu": 9.0,
    "simdbp128-s4": 8.0,
    "simdfastpfor-s4": 7.6,
}
LONG_SEEDS = (0, 1, 2)
SPEED_ROUNDS = 4
SHORT_TARGETS = {"simdbp128": 17, "bp32": 17, "simple8b": 18, "vbyte": 19}
BASE = ["vbyte", "g8iu", "simple8b", "bp32", "simdbp128",
        "pfor", "simplepfor", "fastpfor", "simdfastpfor"]


def long_tolerance(target):
    return max(0.05 * target, 0.2)


# 1. roundtrip -------------------------------------------------------------------------

def adversarial_inputs():
    rng = np.random.default_rng(1234)
    out = []
    for n in (0, 1, 127, 128, 129, (1 << 16) - 1, 1 << 16, (1 << 16) + 1):
        out.append(np.sort(rng.choice(1 << 31, n, replace=False)).astype(np.uint32))
    out.append(np.arange(1, 70000, dtype=np.uint32))  # every delta is 1
    d = rng.integers(1, 8, 5000).astype(np.uint64)
    d[2500] = 1 << 31  # one huge gap among small ones
    out.append(np.cumsum(d).astype(np.uint32))
    out.append(np.zeros(1000, np.uint32))  # zero deltas
    z = np.repeat(np.arange(300, dtype=np.uint32), 7)
    out.append(z)
    out.append(np.array([0xFFFFFFFF] * 130, np.uint32))
    return out


def random_inputs(count=10_000, seed=99):
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(count):
        n = int(rng.integers(0, 1500))
        top = int(rng.integers(0, 33))
        gaps = rng.integers(0, 1 << top, n, dtype=np.uint64) if top else np.zeros(n, np.uint64)
        out.append(np.minimum(np.cumsum(gaps), 0xFFFFFFFF).astype(np.uint32))
    return out


def test_criterion1_roundtrip(acceptance_report):
    inputs = adversarial_inputs() + random_inputs()
    start = time.perf_counter()
    failures = []
    for name in core.CODEC_NAMES:
        for i, x in enumerate(inputs):
            if not np.array_equal(core.decode_array(name, core.encode_array(name, x)), x):
                failures.append((name, i))
    elapsed = time.perf_counter() - start
    ok = not failures and elapsed < 120
    acceptance_report(1, ok, f"{len(core.CODEC_NAMES)} codecs x {len(inputs)} inputs, "
                             f"{len(failures)} failures, {elapsed:.1f}s (limit 120s)")
    assert not failures, failures[:10]
    assert elapsed < 120


# 2. goldens ----------------------------------------------------------------------------

def test_criterion2_goldens(acceptance_report):
    block = [2, 2, 1, 2, 38, 2, 1, 3, 2, 32, 2, 52, 2, 3, 3, 1]
    h = patched.histogram33(block)
    costs = [patched.fastpfor_cost(h, 16, b) for b in (1, 2, 6)]
    meta, _, highs = patched.split_block(block)
    fast_ok = (
        meta.b == 2
        and costs == [185, 68, 96]
        and meta.byte_array() == [2, 6, 3, 4, 9, 11]
        and highs.tolist() == [9, 8, 13]
    )

    d = np.array(block + [1] * 112, np.uint32)
    words = patched.pfor_encode(d, 3)
    marker = int(words[1])
    slots = oracle.unpack_bits(words[2:2 + 12].tolist(), 3, 128)
    positions = [marker & 0xFFFF]
    while len(positions) < 3:
        positions.append(positions[-1] + slots[positions[-1]] + 1)
    pfor_ok = (
        positions == [4, 9, 11]
        and [slots[4], slots[9]] == [4, 1]
        and np.array_equal(patched.pfor_decode(words, 128), d)
    )

    g = basic.g8iu_encode([1 << 15, 1 << 23, 1 << 7])
    g8_ok = g[0] == 0xCD and g[1:7] == bytes([0x00, 0x80, 0x00, 0x00, 0x80, 0x80])

    s = basic.simple8b_encode(np.zeros(240, np.uint64))
    s8_ok = s.size == 2 and int(s[1]) >> 28 == 0

    ok = fast_ok and pfor_ok and g8_ok and s8_ok
    acceptance_report(2, ok, f"FastPFOR {fast_ok}, PFOR {pfor_ok}, G8IU {g8_ok}, Simple-8b {s8_ok}")
    assert ok


# 3 and 7. long Uniform ---------------------------------------------------------------------

@pytest.fixture(scope="module")
def long_uniform_bits():
    """Mean bits/int over the long Uniform seeds, one pass per seed."""
    sums = dict.fromkeys(LONG_TARGETS, 0.0)
    for seed in LONG_SEEDS:
        x = datagen.generate(datagen.recipe("long", datagen.UNIFORM, seed))[0]
        for name in LONG_TARGETS:
            sums[name] += core.bits_per_int(core.encode_array(name, x))
        del x
    return {k: v / len(LONG_SEEDS) for k, v in sums.items()}


def test_criterion3_uniform_long(long_uniform_bits, acceptance_report):
    misses = []
    parts = []
    for name, target in LONG_TARGETS.items():
        got = long_uniform_bits[name]
        hit = abs(got - target) <= long_tolerance(target)
        parts.append(f"{name} {got:.3f}/{target}{'' if hit else ' MISS'}")
        if not hit:
            misses.append(name)
    acceptance_report(3, not misses, ", ".join(parts))
    assert not misses, f"outside tolerance: {misses}"


def test_criterion7_stride4_penalty(long_uniform_bits, acceptance_report):
    gaps = {
        base: long_uniform_bits[base + "-s4"] - long_uniform_bits[base]
        for base in ("simdbp128", "simdfastpfor")
    }
    ok = all(0 < g <= 2.0 for g in gaps.values())
    acceptance_report(7, ok, ", ".join(f"{k} +{v:.3f}" for k, v in gaps.items()) + " (range (0, 2])")
    assert ok


# 4. short Uniform ----------------------------------------------------------------------------

def test_criterion4_uniform_short(acceptance_report):
    arrays = datagen.generate(datagen.recipe("short", datagen.UNIFORM, 0))
    assert len(arrays) == 1024 and all(a.size == 1 << 15 for a in arrays)

    def bits(name):
        words = sum(core.payload_words(core.encode_array(name, a)) for a in arrays)
        return 32.0 * words / sum(a.size for a in arrays)

    got = {name: bits(name) for name in list(SHORT_TARGETS) + ["g8iu", "g8iu-s4"]}
    hits = {n: abs(got[n] - t) <= 0.10 * t for n, t in SHORT_TARGETS.items()}
    order = got["g8iu-s4"] > got["g8iu"]
    ok = all(hits.values()) and order
    detail = ", ".join(f"{n} {got[n]:.2f}/{t}" for n, t in SHORT_TARGETS.items())
    detail += f"; g8iu-s4 {got['g8iu-s4']:.2f} > g8iu {got['g8iu']:.2f}: {order}"
    acceptance_report(4, ok, detail)
    assert ok


# 5. binary packing bound ---------------------------------------------------------------------

def core_bits(name, x):
    """bits/int of the block-coded portion only (the Variable Byte tail excluded)."""
    codec = core.get_codec(name)
    words = ints = 0
    for chunk in core.encode_array(codec, x):
        k = chunk.original_length - chunk.original_length % codec.block_multiple
        if k:
            scratch = np.empty(k, np.uint32)
            words += codec.decode_core(chunk.payload, 0, k, scratch)
            ints += k
    return 32.0 * words / ints


def test_criterion5_binpack_bound(acceptance_report):
    rng = np.random.default_rng(5)
    violations = []
    worst = {32: -math.inf, 128: -math.inf}
    for i in range(200):
        n = int(2 ** rng.uniform(10, 22))
        model = datagen.MODELS[i % 2]
        x = datagen.generate(datagen.DatasetSpec(model, n, 1 << 32, 1, i))[0]
        for name, B in (("bp32", 32), ("simdbp128", 128)):
            _, bound = bench.theoretic_bounds(n, B)
            got = core_bits(name, x)
            worst[B] = max(worst[B], got - bound)
            if got > bound:
                violations.append((name, n, got, bound))

    def ratio(n, B):
        limit, bound = bench.theoretic_bounds(n, B)
        return bound / limit

    beyond32 = math.ceil(2 ** bench.two_optimal_log2_threshold(32))
    beyond128 = math.ceil(2 ** bench.two_optimal_log2_threshold(128))
    thresholds = (
        ratio((1 << 25) - 1, 32) < 2
        and ratio(1 << 23, 128) < 2
        and ratio(beyond32, 32) >= 2
        and ratio(beyond128, 128) >= 2
        and bench.theoretic_bounds(1 << 25, 32) == (7.0, 13.25)
        and bench.theoretic_bounds(1 << 23, 128) == (9.0, 17.0625)
    )
    ok = not violations and thresholds
    acceptance_report(
        5, ok,
        f"{len(violations)} bound violations over 200 inputs "
        f"(max excess bp32 {worst[32]:.3f}, simdbp128 {worst[128]:.3f}); "
        f"2-optimality thresholds {thresholds} (ratio >= 2 from n={beyond32} for B=32, "
        f"n={beyond128} for B=128)",
    )
    assert not violations, violations[:5]
    assert thresholds


# 6. oracle equivalence -------------------------------------------------------------------------

def test_criterion6_oracles(acceptance_report):
    rng = np.random.default_rng(6)
    lane_bad = 0
    for b in range(33):
        for _ in range(1000):
            v = (rng.integers(0, 1 << 32, 128, dtype=np.uint64) >> (32 - b)).astype(np.uint32) \
                if b else np.zeros(128, np.uint32)
            words = bitpack.pack_vertical128(v, b)
            for j in range(4):
                lane = words[j::4]
                if not np.array_equal(lane, bitpack.pack_scalar32(v[j::4], b)):
                    lane_bad += 1
                if not np.array_equal(bitpack.unpack_scalar32(lane, b), v[j::4]):
                    lane_bad += 1
            if not np.array_equal(bitpack.unpack_vertical128(words, b), v):
                lane_bad += 1

    hist_bad = 0
    for _ in range(10_000):
        h = np.zeros(33, np.int64)
        k = int(rng.integers(1, 6))
        h[rng.choice(33, k, replace=False)] = rng.multinomial(128 - k, np.ones(k) / k) + 1
        if patched.choose_width_fastpfor(h, 128) != oracle.fastpfor_brute(h.tolist(), 128):
            hist_bad += 1
    ok = lane_bad == 0 and hist_bad == 0
    acceptance_report(6, ok, f"33000 vertical blocks, {lane_bad} mismatches; "
                             f"10000 histograms, {hist_bad} mismatches")
    assert ok


# 8. speed ordering ---------------------------------------------------------------------------------

def test_criterion8_speed_ordering(acceptance_report):
    x = datagen.generate(datagen.recipe("long", datagen.UNIFORM, 0))[0]
    # codecs sit within tens of percent of each other and this machine drifts by
    # more, so every codec is measured in several interleaved rounds, best kept
    records = {}
    for _ in range(SPEED_ROUNDS):
        for name in BASE:
            r = bench.measure(name, [x], "uniform-long")
            if name not in records or r.decode_mis > records[name].decode_mis:
                records[name] = r
    positive = all(r.encode_mis > 0 and r.decode_mis > 0 and math.isfinite(r.decode_mis)
                   for r in records.values())
    dec = {n: r.decode_mis for n, r in records.items()}
    ranking = " > ".join(f"{n} {dec[n]:.0f}" for n in sorted(dec, key=dec.get, reverse=True))
    binpack_faster = min(dec["bp32"], dec["simdbp128"]) > dec["simple8b"]
    vbyte_slowest = dec["vbyte"] == min(dec.values())
    asserted = dec["vbyte"] < dec["simple8b"]
    ok = positive and asserted
    acceptance_report(
        8, ok,
        f"decode mis {ranking}; binary packing > Simple-8b: {binpack_faster} (reported); "
        f"Variable Byte slowest: {vbyte_slowest} (reported); "
        f"Variable Byte < Simple-8b: {asserted} (asserted)",
    )
    assert positive
    assert asserted
