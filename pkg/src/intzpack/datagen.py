"""Synthetic sorted integer datasets.

Array ``i`` of a spec is generated from ``numpy.random.default_rng(seed + i)``,
so every array is reproducible on its own.
"""
from dataclasses import dataclass

import numpy as np

UNIFORM = "uniform"
CLUSTER = "cluster"
MODELS = (UNIFORM, CLUSTER)

STANDARD_RANGE = 1 << 29
SHORT = ("short", 1 << 15, 1 << 10)  # name, n, count
LONG = ("long", 1 << 25, 1)

# ClusterData stops splitting once a range holds at most this many slots per point
CLUSTER_LEAF_DENSITY = 64


@dataclass(frozen=True)
class DatasetSpec:
    model: str
    n: int
    range: int
    count: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.n < 0 or self.count < 0 or self.seed < 0:
            raise ValueError("n, count and seed must be non-negative")
        if self.range > 1 << 32:
            raise ValueError("range must not exceed 2**32")
        if self.n > self.range:
            raise ValueError(f"cannot draw {self.n} distinct integers from [0, {self.range})")

    @property
    def name(self):
        return f"{self.model}-n{self.n}-r{self.range}-c{self.count}"


def _uniform_subset(rng, n, lo, hi):
    """``n`` distinct integers drawn uniformly from ``[lo, hi)``, sorted."""
    r = hi - lo
    if n == 0:
        return np.zeros(0, dtype=np.int64)
    if 2 * n > r:
        # dense: pick the complement instead, then read off the survivors
        keep = np.ones(r, dtype=bool)
        keep[rng.choice(r, r - n, replace=False)] = False
        return np.flatnonzero(keep).astype(np.int64) + lo
    # sparse: oversample, deduplicate, then thin to exactly n
    u = np.unique(rng.integers(0, r, n + n // 8 + 16, dtype=np.int64))
    while u.size < n:
        extra = rng.integers(0, r, 2 * (n - u.size) + 16, dtype=np.int64)
        u = np.union1d(u, extra)
    if u.size > n:
        u = np.delete(u, rng.choice(u.size, u.size - n, replace=False))
    return u + lo


def _finish(values):
    return np.ascontiguousarray(values, dtype=np.uint32)


def gen_uniform(spec, index=0):
    rng = np.random.default_rng(spec.seed + index)
    return _finish(_uniform_subset(rng, spec.n, 0, spec.range))


def _split_ranges(rng, lo, width, k):
    """Halve every range and send a ``U[0.1, 0.9]`` share of its points left."""
    half = width // 2
    left = np.rint(rng.uniform(0.1, 0.9, k.size) * k).astype(np.int64)
    left = np.minimum(np.maximum(left, k - (width - half)), half)
    return (np.concatenate([lo, lo + half]),
            np.concatenate([half, width - half]),
            np.concatenate([left, k - left]))


def _fill_sparse(rng, lo, width, k):
    """Uniform ``k``-subsets of ranges with ``2k <= width``, all ranges at once."""
    base = np.repeat(lo, k)
    span = np.repeat(width, k)
    vals = base + rng.integers(0, span)
    while True:
        vals.sort()
        dup = np.flatnonzero(vals[1:] == vals[:-1]) + 1
        if dup.size == 0:
            return vals
        # ranges are disjoint, so a duplicate value names its range uniquely
        owner = np.searchsorted(lo, vals[dup], side="right") - 1
        vals[dup] = lo[owner] + rng.integers(0, width[owner])


def _fill_dense(rng, lo, width, k):
    """Uniform ``k``-subsets of ranges with ``2k > width``: keep the ``k`` lowest random keys."""
    slot_range = np.repeat(np.arange(lo.size), width)
    starts = np.cumsum(width) - width
    slot = np.arange(slot_range.size) - np.repeat(starts, width)
    order = np.lexsort((rng.random(slot_range.size), slot_range))
    rank = np.empty_like(order)
    rank[order] = np.arange(order.size) - np.repeat(starts, width)
    keep = rank < np.repeat(k, width)
    return lo[slot_range[keep]] + slot[keep]


def gen_clusterdata(spec, index=0):
    """Recursive-split clustered data.

    A range holding ``k`` points is halved and a fraction ``f ~ U[0.1, 0.9]``
    of the points goes left, until a range has at most
    ``CLUSTER_LEAF_DENSITY`` slots per point; that range is then filled
    uniformly. All ranges of one recursion level are processed together.
    """
    rng = np.random.default_rng(spec.seed + index)
    lo = np.zeros(1, np.int64)
    width = np.array([spec.range], np.int64)
    k = np.array([spec.n], np.int64)
    leaves = []
    while lo.size:
        live = k > 0
        lo, width, k = lo[live], width[live], k[live]
        leaf = width <= CLUSTER_LEAF_DENSITY * k
        leaves.append((lo[leaf], width[leaf], k[leaf]))
        lo, width, k = _split_ranges(rng, lo[~leaf], width[~leaf], k[~leaf])
    lo, width, k = (np.concatenate(parts) for parts in zip(*leaves))
    order = np.argsort(lo)
    lo, width, k = lo[order], width[order], k[order]
    dense = 2 * k > width
    values = np.concatenate([
        _fill_sparse(rng, lo[~dense], width[~dense], k[~dense]),
        _fill_dense(rng, lo[dense], width[dense], k[dense]),
    ])
    values.sort()
    return _finish(values)


_GENERATORS = {UNIFORM: gen_uniform, CLUSTER: gen_clusterdata}


def generate(spec):
    gen = _GENERATORS[spec.model]
    return [gen(spec, i) for i in range(spec.count)]


def standard_recipes():
    """Short and long datasets for both models over ``[0, 2**29)``."""
    return [
        DatasetSpec(model, n, STANDARD_RANGE, count, 0)
        for _, n, count in (SHORT, LONG)
        for model in MODELS
    ]


def recipe(length, model, seed=0):
    """One of the four standard specs, e.g. ``recipe("long", "uniform")``."""
    sizes = {SHORT[0]: SHORT, LONG[0]: LONG}
    if length not in sizes:
        raise ValueError(f"unknown recipe length {length!r}")
    _, n, count = sizes[length]
    return DatasetSpec(model, n, STANDARD_RANGE, count, seed)
