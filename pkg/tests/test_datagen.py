import numpy as np
import pytest
from scipy import stats

from intzpack import bench, datagen
from intzpack.datagen import DatasetSpec


@pytest.mark.parametrize("model", datagen.MODELS)
def test_full_range_is_identity(model):
    spec = DatasetSpec(model, 1000, 1000)
    assert np.array_equal(datagen.generate(spec)[0], np.arange(1000))


@pytest.mark.parametrize("model", datagen.MODELS)
@pytest.mark.parametrize("n,r", [(0, 10), (1, 1), (500, 600), (3000, 1 << 20), (1 << 14, 1 << 32)])
def test_distinct_sorted_in_range(model, n, r):
    (a,) = datagen.generate(DatasetSpec(model, n, r, seed=3))
    assert a.dtype == np.uint32 and a.size == n
    assert np.all(np.diff(a.astype(np.int64)) > 0)
    if n:
        assert int(a[-1]) < r


@pytest.mark.parametrize("model", datagen.MODELS)
def test_deterministic_per_seed(model):
    spec = DatasetSpec(model, 5000, 1 << 24, count=3, seed=11)
    a, b = datagen.generate(spec), datagen.generate(spec)
    assert all(np.array_equal(x, y) for x, y in zip(a, b))
    assert not np.array_equal(a[0], a[1])
    # array i depends only on seed + i
    assert np.array_equal(a[1], datagen.generate(DatasetSpec(model, 5000, 1 << 24, seed=12))[0])


def test_bad_specs():
    with pytest.raises(ValueError):
        DatasetSpec("uniform", 11, 10)
    with pytest.raises(ValueError):
        DatasetSpec("zipf", 1, 10)
    with pytest.raises(ValueError):
        DatasetSpec("uniform", 1, (1 << 32) + 1)


def test_short_uniform_mean_gap():
    (a,) = datagen.generate(DatasetSpec("uniform", 1 << 15, 1 << 29))
    assert np.diff(a.astype(np.int64)).mean() == pytest.approx(2 ** 14, rel=0.03)


def test_uniform_passes_ks():
    failures = 0
    for seed in range(50):
        (a,) = datagen.generate(DatasetSpec("uniform", 2000, 1 << 29, seed=seed))
        if stats.kstest(a / float(1 << 29), "uniform").pvalue < 0.01:
            failures += 1
    assert failures <= 2


def test_cluster_has_lower_entropy_than_uniform():
    u = datagen.generate(DatasetSpec("uniform", 1 << 15, 1 << 29, count=4))
    c = datagen.generate(DatasetSpec("cluster", 1 << 15, 1 << 29, count=4))
    assert bench.entropy_of_deltas(c) < bench.entropy_of_deltas(u)


def test_standard_recipes():
    specs = datagen.standard_recipes()
    got = sorted((s.model, s.n, s.count, s.range, s.seed) for s in specs)
    r = 1 << 29
    assert got == sorted([
        ("uniform", 1 << 15, 1 << 10, r, 0), ("cluster", 1 << 15, 1 << 10, r, 0),
        ("uniform", 1 << 25, 1, r, 0), ("cluster", 1 << 25, 1, r, 0),
    ])
    assert sum(s.n * s.count for s in specs if s.n == 1 << 15) == 2 * (1 << 25)
    assert datagen.recipe("long", "cluster") in specs
    with pytest.raises(ValueError):
        datagen.recipe("medium", "uniform")


@pytest.mark.parametrize("n,r", [(100, 6400), (12, 20)])
def test_cluster_single_leaf_is_uniform(n, r):
    # with r <= 64 n no split happens, so every slot is equally likely
    counts = np.zeros(r)
    for seed in range(400):
        counts[datagen.generate(DatasetSpec("cluster", n, r, seed=seed))[0]] += 1
    if r <= 64:
        assert stats.chisquare(counts).pvalue > 0.001
    else:
        assert stats.chisquare(counts.reshape(64, -1).sum(axis=1)).pvalue > 0.001


def test_cluster_sparse_range_is_fast():
    (a,) = datagen.generate(DatasetSpec("cluster", 1 << 20, 1 << 32, seed=1))
    assert a.size == 1 << 20
