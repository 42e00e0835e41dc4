#!/usr/bin/env python3
"""Generate the width-specialized bit packing kernels in src/intzpack/_unrolled.py.

Each kernel handles one group of 32 integers at a fixed bit width. Source and
destination strides let the same kernel serve the scalar layout (stride 1) and
one lane of the vertical 4-lane layout (stride 4).

Kernels are inlined into width dispatchers that loop inside each branch, so a
call into compiled code covers a whole run of groups or a 4-lane block
rather than 32 integers.

Run from the repository root:  python3 scripts/gen_unrolled.py
"""
import os

HEADER = '''\
# Generated by scripts/gen_unrolled.py. Do not edit by hand.
from numba import njit

'''


def fields(b):
    """(value index, word index, bit offset) for each of the 32 fields."""
    return [(i, *divmod(i * b, 32)) for i in range(32)]


def gen_pack(b):
    m = (1 << b) - 1
    out = [
        '@njit(inline="always")',
        f"def pack{b}(src, sp, ss, dst, dp, ds):",
    ]
    for i in range(32):
        out.append(f"    v{i} = src[sp + {i} * ss] & {m}")
    for k in range(b):
        lo, hi = 32 * k, 32 * k + 32
        terms = []
        for i in range(32):
            s = i * b
            if lo <= s < hi:
                terms.append(f"(v{i} << {s - lo})" if s > lo else f"v{i}")
            elif s < lo < s + b:
                terms.append(f"(v{i} >> {lo - s})")
        expr = " | ".join(terms)
        out.append(f"    dst[dp + {k} * ds] = ({expr}) & 0xFFFFFFFF")
    return "\n".join(out)


def gen_unpack(b):
    m = (1 << b) - 1
    out = [
        '@njit(inline="always")',
        f"def unpack{b}(src, sp, ss, dst, dp, ds):",
    ]
    for k in range(b):
        out.append(f"    w{k} = src[sp + {k} * ss]")
    for i, k, off in fields(b):
        if off + b <= 32:
            expr = f"(w{k} >> {off})" if off else f"w{k}"
            if off + b < 32:
                expr = f"{expr} & {m}"
        else:
            spill = off + b - 32
            expr = f"(w{k} >> {off}) | ((w{k + 1} & {(1 << spill) - 1}) << {32 - off})"
        out.append(f"    dst[dp + {i} * ds] = {expr}")
    return "\n".join(out)


# name, signature, body for width b (kernel call), zero-width body, full-width body
def _shapes(kind):
    unpack = kind == "unpack"
    return [
        (
            f"{kind}_group", "src, sp, ss, dst, dp, ds, b",
            lambda b: [f"{kind}{b}(src, sp, ss, dst, dp, ds)"],
            ["for i in range(32):", "    dst[dp + i * ds] = 0"] if unpack else ["return"],
            ["for i in range(32):", "    dst[dp + i * ds] = src[sp + i * ss]"],
        ),
        (
            f"{kind}_run", "src, sp, dst, dp, b, groups",
            lambda b: [
                "for g in range(groups):",
                f"    {kind}{b}(src, sp + g * {b if unpack else 32}, 1, "
                f"dst, dp + g * {32 if unpack else b}, 1)",
            ],
            ["for i in range(32 * groups):", "    dst[dp + i] = 0"] if unpack else ["return"],
            ["for i in range(32 * groups):", "    dst[dp + i] = src[sp + i]"],
        ),
        (
            f"{kind}_vertical", "src, sp, dst, dp, b",
            lambda b: [
                "for lane in range(4):",
                f"    {kind}{b}(src, sp + lane, 4, dst, dp + lane, 4)",
            ],
            ["for i in range(128):", "    dst[dp + i] = 0"] if unpack else ["return"],
            ["for i in range(128):", "    dst[dp + i] = src[sp + i]"],
        ),
    ]


def _indent(lines, n):
    return [" " * n + line for line in lines]


def gen_dispatch(kind):
    blocks = []
    for name, sig, call, zero, full in _shapes(kind):
        out = ["@njit(cache=True)", f"def {name}({sig}):", "    if b == 0:"]
        out += _indent(zero, 8)
        for b in range(1, 32):
            out.append(f"    elif b == {b}:")
            out += _indent(call(b), 8)
        out.append("    else:")
        out += _indent(full, 8)
        blocks.append("\n".join(out))
    return "\n\n\n".join(blocks)


def main():
    parts = [HEADER]
    for b in range(1, 32):
        parts.append(gen_pack(b))
        parts.append("\n\n")
        parts.append(gen_unpack(b))
        parts.append("\n\n")
    parts.append(gen_dispatch("pack"))
    parts.append("\n\n\n")
    parts.append(gen_dispatch("unpack"))
    parts.append("\n")
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    path = os.path.join(root, "src", "intzpack", "_unrolled.py")
    with open(path, "w") as f:
        f.write("".join(parts))
    print("wrote", path)


if __name__ == "__main__":
    main()
