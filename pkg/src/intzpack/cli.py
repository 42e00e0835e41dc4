"""Command line entry point: ``intzpack {gen,encode,decode,bench,analyze}``."""
import argparse
import re
import sys
from pathlib import Path

from . import bench, core, datagen

_RECIPE = re.compile(r"^recipe:(short|long)[x_:-]?(uniform|cluster)$")


def _load_arrays(source):
    codec, arrays = core.container_read(source)
    return [core.decode_array(codec, chunks) for chunks in arrays]


def _dataset(data, seed=0):
    """Resolve ``--data`` to ``(name, arrays)``."""
    m = _RECIPE.match(data)
    if m:
        spec = datagen.recipe(m.group(1), m.group(2), seed)
        return f"{m.group(1)}-{m.group(2)}", datagen.generate(spec)
    if data.startswith("recipe:"):
        raise SystemExit(f"bad recipe {data!r}; use recipe:{{short,long}}x{{uniform,cluster}}")
    return Path(data).stem, _load_arrays(data)


def _codec_list(text):
    if text == "all":
        return list(core.CODEC_NAMES)
    names = [t.strip() for t in text.split(",") if t.strip()]
    for n in names:
        core.get_codec(n)
    return names


def cmd_gen(args):
    spec = datagen.DatasetSpec(args.model, args.n, args.range, args.count, args.seed)
    arrays = [core.encode_array(core.RAW, a) for a in datagen.generate(spec)]
    core.container_write(core.RAW, arrays, args.out)
    print(f"wrote {spec.count} arrays of {spec.n} integers to {args.out}")


def cmd_encode(args):
    arrays = _load_arrays(args.inp)
    encoded = [core.encode_array(args.codec, a) for a in arrays]
    core.container_write(args.codec, encoded, args.out)
    n = sum(a.size for a in arrays)
    if n:
        bpi = 32.0 * sum(core.payload_words(c) for c in encoded) / n
        print(f"{args.codec}: {n} integers, {bench.fmt4(bpi)} bits/int")


def cmd_decode(args):
    arrays = _load_arrays(args.inp)
    core.container_write(core.RAW, [core.encode_array(core.RAW, a) for a in arrays], args.out)
    print(f"decoded {len(arrays)} arrays to {args.out}")


def cmd_bench(args):
    codecs = _codec_list(args.codecs)
    name, arrays = _dataset(args.data, args.seed)
    weights = bench.load_weights(args.weights) if args.weights else None
    records = []
    for c in codecs:
        records.extend(bench.measure_buckets(c, arrays, name, args.min_time, args.runs))
    bench.emit_csv(records, args.csv)
    print(f"{'codec':<18}{'bits/int':>10}{'enc mis':>12}{'dec mis':>12}")
    for row in bench.aggregate(records, weights):
        print(
            f"{row['codec']:<18}{bench.fmt4(row['bits_per_int']):>10}"
            f"{bench.fmt4(row['encode_mis']):>12}{bench.fmt4(row['decode_mis']):>12}"
        )


def cmd_analyze(args):
    name, arrays = _dataset(args.data, args.seed)
    arrays = [a for a in arrays if a.size]
    if not arrays:
        raise SystemExit("nothing to analyze")
    total = sum(a.size for a in arrays)
    print(f"dataset {name}: {len(arrays)} arrays, {total} integers")
    print(f"entropy of deltas: {bench.fmt4(bench.entropy_of_deltas(arrays))} bits/int")
    n = round(total / len(arrays))
    for B, codec in ((32, "bp32"), (128, "simdbp128")):
        limit, bound = bench.theoretic_bounds(n, B)
        words = sum(core.payload_words(core.encode_array(codec, a)) for a in arrays)
        measured = 32.0 * words / total
        print(
            f"B={B}: limit {bench.fmt4(limit)}, bound {bench.fmt4(bound)}, "
            f"{codec} {bench.fmt4(measured)} bits/int; "
            f"2-optimal for log2 n < {bench.two_optimal_log2_threshold(B):g}"
        )


def build_parser():
    p = argparse.ArgumentParser(prog="intzpack", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="generate a synthetic dataset")
    g.add_argument("--model", choices=datagen.MODELS, required=True)
    g.add_argument("--n", type=int, required=True)
    g.add_argument("--range", type=int, required=True)
    g.add_argument("--count", type=int, default=1)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--out", required=True)
    g.set_defaults(func=cmd_gen)

    e = sub.add_parser("encode", help="compress a container with a codec")
    e.add_argument("--codec", required=True, choices=core.CODEC_NAMES)
    e.add_argument("--in", dest="inp", required=True)
    e.add_argument("--out", required=True)
    e.set_defaults(func=cmd_encode)

    d = sub.add_parser("decode", help="decompress a container to raw values")
    d.add_argument("--in", dest="inp", required=True)
    d.add_argument("--out", required=True)
    d.set_defaults(func=cmd_decode)

    b = sub.add_parser("bench", help="measure size and speed")
    b.add_argument("--codecs", default="all")
    b.add_argument("--data", required=True)
    b.add_argument("--weights")
    b.add_argument("--csv", required=True)
    b.add_argument("--seed", type=int, default=0)
    b.add_argument("--min-time", type=float, default=0.5)
    b.add_argument("--runs", type=int, default=3)
    b.set_defaults(func=cmd_bench)

    a = sub.add_parser("analyze", help="entropy and bound report")
    a.add_argument("--data", required=True)
    a.add_argument("--seed", type=int, default=0)
    a.set_defaults(func=cmd_analyze)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (ValueError, OSError) as exc:
        print(f"intzpack: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
