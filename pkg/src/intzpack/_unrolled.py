# Generated by scripts/gen_unrolled.py. Do not edit by hand.
from numba import njit

@njit(inline="always")
def pack1(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 1
    v1 = src[sp + 1 * ss] & 1
    v2 = src[sp + 2 * ss] & 1
    v3 = src[sp + 3 * ss] & 1
    v4 = src[sp + 4 * ss] & 1
    v5 = src[sp + 5 * ss] & 1
    v6 = src[sp + 6 * ss] & 1
    v7 = src[sp + 7 * ss] & 1
    v8 = src[sp + 8 * ss] & 1
    v9 = src[sp + 9 * ss] & 1
    v10 = src[sp + 10 * ss] & 1
    v11 = src[sp + 11 * ss] & 1
    v12 = src[sp + 12 * ss] & 1
    v13 = src[sp + 13 * ss] & 1
    v14 = src[sp + 14 * ss] & 1
    v15 = src[sp + 15 * ss] & 1
    v16 = src[sp + 16 * ss] & 1
    v17 = src[sp + 17 * ss] & 1
    v18 = src[sp + 18 * ss] & 1
    v19 = src[sp + 19 * ss] & 1
    v20 = src[sp + 20 * ss] & 1
    v21 = src[sp + 21 * ss] & 1
    v22 = src[sp + 22 * ss] & 1
    v23 = src[sp + 23 * ss] & 1
    v24 = src[sp + 24 * ss] & 1
    v25 = src[sp + 25 * ss] & 1
    v26 = src[sp + 26 * ss] & 1
    v27 = src[sp + 27 * ss] & 1
    v28 = src[sp + 28 * ss] & 1
    v29 = src[sp + 29 * ss] & 1
    v30 = src[sp + 30 * ss] & 1
    v31 = src[sp + 31 * ss] & 1
    dst[dp + 0 * ds] = (v0 | (v1 << 1) | (v2 << 2) | (v3 << 3) | (v4 << 4) | (v5 << 5) | (v6 << 6) | (v7 << 7) | (v8 << 8) | (v9 << 9) | (v10 << 10) | (v11 << 11) | (v12 << 12) | (v13 << 13) | (v14 << 14) | (v15 << 15) | (v16 << 16) | (v17 << 17) | (v18 << 18) | (v19 << 19) | (v20 << 20) | (v21 << 21) | (v22 << 22) | (v23 << 23) | (v24 << 24) | (v25 << 25) | (v26 << 26) | (v27 << 27) | (v28 << 28) | (v29 << 29) | (v30 << 30) | (v31 << 31)) & 0xFFFFFFFF

@njit(inline="always")
def unpack1(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    dst[dp + 0 * ds] = w0 & 1
    dst[dp + 1 * ds] = (w0 >> 1) & 1
    dst[dp + 2 * ds] = (w0 >> 2) & 1
    dst[dp + 3 * ds] = (w0 >> 3) & 1
    dst[dp + 4 * ds] = (w0 >> 4) & 1
    dst[dp + 5 * ds] = (w0 >> 5) & 1
    dst[dp + 6 * ds] = (w0 >> 6) & 1
    dst[dp + 7 * ds] = (w0 >> 7) & 1
    dst[dp + 8 * ds] = (w0 >> 8) & 1
    dst[dp + 9 * ds] = (w0 >> 9) & 1
    dst[dp + 10 * ds] = (w0 >> 10) & 1
    dst[dp + 11 * ds] = (w0 >> 11) & 1
    dst[dp + 12 * ds] = (w0 >> 12) & 1
    dst[dp + 13 * ds] = (w0 >> 13) & 1
    dst[dp + 14 * ds] = (w0 >> 14) & 1
    dst[dp + 15 * ds] = (w0 >> 15) & 1
    dst[dp + 16 * ds] = (w0 >> 16) & 1
    dst[dp + 17 * ds] = (w0 >> 17) & 1
    dst[dp + 18 * ds] = (w0 >> 18) & 1
    dst[dp + 19 * ds] = (w0 >> 19) & 1
    dst[dp + 20 * ds] = (w0 >> 20) & 1
    dst[dp + 21 * ds] = (w0 >> 21) & 1
    dst[dp + 22 * ds] = (w0 >> 22) & 1
    dst[dp + 23 * ds] = (w0 >> 23) & 1
    dst[dp + 24 * ds] = (w0 >> 24) & 1
    dst[dp + 25 * ds] = (w0 >> 25) & 1
    dst[dp + 26 * ds] = (w0 >> 26) & 1
    dst[dp + 27 * ds] = (w0 >> 27) & 1
    dst[dp + 28 * ds] = (w0 >> 28) & 1
    dst[dp + 29 * ds] = (w0 >> 29) & 1
    dst[dp + 30 * ds] = (w0 >> 30) & 1
    dst[dp + 31 * ds] = (w0 >> 31)

@njit(inline="always")
def pack2(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 3
    v1 = src[sp + 1 * ss] & 3
    v2 = src[sp + 2 * ss] & 3
    v3 = src[sp + 3 * ss] & 3
    v4 = src[sp + 4 * ss] & 3
    v5 = src[sp + 5 * ss] & 3
    v6 = src[sp + 6 * ss] & 3
    v7 = src[sp + 7 * ss] & 3
    v8 = src[sp + 8 * ss] & 3
    v9 = src[sp + 9 * ss] & 3
    v10 = src[sp + 10 * ss] & 3
    v11 = src[sp + 11 * ss] & 3
    v12 = src[sp + 12 * ss] & 3
    v13 = src[sp + 13 * ss] & 3
    v14 = src[sp + 14 * ss] & 3
    v15 = src[sp + 15 * ss] & 3
    v16 = src[sp + 16 * ss] & 3
    v17 = src[sp + 17 * ss] & 3
    v18 = src[sp + 18 * ss] & 3
    v19 = src[sp + 19 * ss] & 3
    v20 = src[sp + 20 * ss] & 3
    v21 = src[sp + 21 * ss] & 3
    v22 = src[sp + 22 * ss] & 3
    v23 = src[sp + 23 * ss] & 3
    v24 = src[sp + 24 * ss] & 3
    v25 = src[sp + 25 * ss] & 3
    v26 = src[sp + 26 * ss] & 3
    v27 = src[sp + 27 * ss] & 3
    v28 = src[sp + 28 * ss] & 3
    v29 = src[sp + 29 * ss] & 3
    v30 = src[sp + 30 * ss] & 3
    v31 = src[sp + 31 * ss] & 3
    dst[dp + 0 * ds] = (v0 | (v1 << 2) | (v2 << 4) | (v3 << 6) | (v4 << 8) | (v5 << 10) | (v6 << 12) | (v7 << 14) | (v8 << 16) | (v9 << 18) | (v10 << 20) | (v11 << 22) | (v12 << 24) | (v13 << 26) | (v14 << 28) | (v15 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = (v16 | (v17 << 2) | (v18 << 4) | (v19 << 6) | (v20 << 8) | (v21 << 10) | (v22 << 12) | (v23 << 14) | (v24 << 16) | (v25 << 18) | (v26 << 20) | (v27 << 22) | (v28 << 24) | (v29 << 26) | (v30 << 28) | (v31 << 30)) & 0xFFFFFFFF

@njit(inline="always")
def unpack2(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    dst[dp + 0 * ds] = w0 & 3
    dst[dp + 1 * ds] = (w0 >> 2) & 3
    dst[dp + 2 * ds] = (w0 >> 4) & 3
    dst[dp + 3 * ds] = (w0 >> 6) & 3
    dst[dp + 4 * ds] = (w0 >> 8) & 3
    dst[dp + 5 * ds] = (w0 >> 10) & 3
    dst[dp + 6 * ds] = (w0 >> 12) & 3
    dst[dp + 7 * ds] = (w0 >> 14) & 3
    dst[dp + 8 * ds] = (w0 >> 16) & 3
    dst[dp + 9 * ds] = (w0 >> 18) & 3
    dst[dp + 10 * ds] = (w0 >> 20) & 3
    dst[dp + 11 * ds] = (w0 >> 22) & 3
    dst[dp + 12 * ds] = (w0 >> 24) & 3
    dst[dp + 13 * ds] = (w0 >> 26) & 3
    dst[dp + 14 * ds] = (w0 >> 28) & 3
    dst[dp + 15 * ds] = (w0 >> 30)
    dst[dp + 16 * ds] = w1 & 3
    dst[dp + 17 * ds] = (w1 >> 2) & 3
    dst[dp + 18 * ds] = (w1 >> 4) & 3
    dst[dp + 19 * ds] = (w1 >> 6) & 3
    dst[dp + 20 * ds] = (w1 >> 8) & 3
    dst[dp + 21 * ds] = (w1 >> 10) & 3
    dst[dp + 22 * ds] = (w1 >> 12) & 3
    dst[dp + 23 * ds] = (w1 >> 14) & 3
    dst[dp + 24 * ds] = (w1 >> 16) & 3
    dst[dp + 25 * ds] = (w1 >> 18) & 3
    dst[dp + 26 * ds] = (w1 >> 20) & 3
    dst[dp + 27 * ds] = (w1 >> 22) & 3
    dst[dp + 28 * ds] = (w1 >> 24) & 3
    dst[dp + 29 * ds] = (w1 >> 26) & 3
    dst[dp + 30 * ds] = (w1 >> 28) & 3
    dst[dp + 31 * ds] = (w1 >> 30)

@njit(inline="always")
def pack3(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 7
    v1 = src[sp + 1 * ss] & 7
    v2 = src[sp + 2 * ss] & 7
    v3 = src[sp + 3 * ss] & 7
    v4 = src[sp + 4 * ss] & 7
    v5 = src[sp + 5 * ss] & 7
    v6 = src[sp + 6 * ss] & 7
    v7 = src[sp + 7 * ss] & 7
    v8 = src[sp + 8 * ss] & 7
    v9 = src[sp + 9 * ss] & 7
    v10 = src[sp + 10 * ss] & 7
    v11 = src[sp + 11 * ss] & 7
    v12 = src[sp + 12 * ss] & 7
    v13 = src[sp + 13 * ss] & 7
    v14 = src[sp + 14 * ss] & 7
    v15 = src[sp + 15 * ss] & 7
    v16 = src[sp + 16 * ss] & 7
    v17 = src[sp + 17 * ss] & 7
    v18 = src[sp + 18 * ss] & 7
    v19 = src[sp + 19 * ss] & 7
    v20 = src[sp + 20 * ss] & 7
    v21 = src[sp + 21 * ss] & 7
    v22 = src[sp + 22 * ss] & 7
    v23 = src[sp + 23 * ss] & 7
    v24 = src[sp + 24 * ss] & 7
    v25 = src[sp + 25 * ss] & 7
    v26 = src[sp + 26 * ss] & 7
    v27 = src[sp + 27 * ss] & 7
    v28 = src[sp + 28 * ss] & 7
    v29 = src[sp + 29 * ss] & 7
    v30 = src[sp + 30 * ss] & 7
    v31 = src[sp + 31 * ss] & 7
    dst[dp + 0 * ds] = (v0 | (v1 << 3) | (v2 << 6) | (v3 << 9) | (v4 << 12) | (v5 << 15) | (v6 << 18) | (v7 << 21) | (v8 << 24) | (v9 << 27) | (v10 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v10 >> 2) | (v11 << 1) | (v12 << 4) | (v13 << 7) | (v14 << 10) | (v15 << 13) | (v16 << 16) | (v17 << 19) | (v18 << 22) | (v19 << 25) | (v20 << 28) | (v21 << 31)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v21 >> 1) | (v22 << 2) | (v23 << 5) | (v24 << 8) | (v25 << 11) | (v26 << 14) | (v27 << 17) | (v28 << 20) | (v29 << 23) | (v30 << 26) | (v31 << 29)) & 0xFFFFFFFF

@njit(inline="always")
def unpack3(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    dst[dp + 0 * ds] = w0 & 7
    dst[dp + 1 * ds] = (w0 >> 3) & 7
    dst[dp + 2 * ds] = (w0 >> 6) & 7
    dst[dp + 3 * ds] = (w0 >> 9) & 7
    dst[dp + 4 * ds] = (w0 >> 12) & 7
    dst[dp + 5 * ds] = (w0 >> 15) & 7
    dst[dp + 6 * ds] = (w0 >> 18) & 7
    dst[dp + 7 * ds] = (w0 >> 21) & 7
    dst[dp + 8 * ds] = (w0 >> 24) & 7
    dst[dp + 9 * ds] = (w0 >> 27) & 7
    dst[dp + 10 * ds] = (w0 >> 30) | ((w1 & 1) << 2)
    dst[dp + 11 * ds] = (w1 >> 1) & 7
    dst[dp + 12 * ds] = (w1 >> 4) & 7
    dst[dp + 13 * ds] = (w1 >> 7) & 7
    dst[dp + 14 * ds] = (w1 >> 10) & 7
    dst[dp + 15 * ds] = (w1 >> 13) & 7
    dst[dp + 16 * ds] = (w1 >> 16) & 7
    dst[dp + 17 * ds] = (w1 >> 19) & 7
    dst[dp + 18 * ds] = (w1 >> 22) & 7
    dst[dp + 19 * ds] = (w1 >> 25) & 7
    dst[dp + 20 * ds] = (w1 >> 28) & 7
    dst[dp + 21 * ds] = (w1 >> 31) | ((w2 & 3) << 1)
    dst[dp + 22 * ds] = (w2 >> 2) & 7
    dst[dp + 23 * ds] = (w2 >> 5) & 7
    dst[dp + 24 * ds] = (w2 >> 8) & 7
    dst[dp + 25 * ds] = (w2 >> 11) & 7
    dst[dp + 26 * ds] = (w2 >> 14) & 7
    dst[dp + 27 * ds] = (w2 >> 17) & 7
    dst[dp + 28 * ds] = (w2 >> 20) & 7
    dst[dp + 29 * ds] = (w2 >> 23) & 7
    dst[dp + 30 * ds] = (w2 >> 26) & 7
    dst[dp + 31 * ds] = (w2 >> 29)

@njit(inline="always")
def pack4(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 15
    v1 = src[sp + 1 * ss] & 15
    v2 = src[sp + 2 * ss] & 15
    v3 = src[sp + 3 * ss] & 15
    v4 = src[sp + 4 * ss] & 15
    v5 = src[sp + 5 * ss] & 15
    v6 = src[sp + 6 * ss] & 15
    v7 = src[sp + 7 * ss] & 15
    v8 = src[sp + 8 * ss] & 15
    v9 = src[sp + 9 * ss] & 15
    v10 = src[sp + 10 * ss] & 15
    v11 = src[sp + 11 * ss] & 15
    v12 = src[sp + 12 * ss] & 15
    v13 = src[sp + 13 * ss] & 15
    v14 = src[sp + 14 * ss] & 15
    v15 = src[sp + 15 * ss] & 15
    v16 = src[sp + 16 * ss] & 15
    v17 = src[sp + 17 * ss] & 15
    v18 = src[sp + 18 * ss] & 15
    v19 = src[sp + 19 * ss] & 15
    v20 = src[sp + 20 * ss] & 15
    v21 = src[sp + 21 * ss] & 15
    v22 = src[sp + 22 * ss] & 15
    v23 = src[sp + 23 * ss] & 15
    v24 = src[sp + 24 * ss] & 15
    v25 = src[sp + 25 * ss] & 15
    v26 = src[sp + 26 * ss] & 15
    v27 = src[sp + 27 * ss] & 15
    v28 = src[sp + 28 * ss] & 15
    v29 = src[sp + 29 * ss] & 15
    v30 = src[sp + 30 * ss] & 15
    v31 = src[sp + 31 * ss] & 15
    dst[dp + 0 * ds] = (v0 | (v1 << 4) | (v2 << 8) | (v3 << 12) | (v4 << 16) | (v5 << 20) | (v6 << 24) | (v7 << 28)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = (v8 | (v9 << 4) | (v10 << 8) | (v11 << 12) | (v12 << 16) | (v13 << 20) | (v14 << 24) | (v15 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = (v16 | (v17 << 4) | (v18 << 8) | (v19 << 12) | (v20 << 16) | (v21 << 20) | (v22 << 24) | (v23 << 28)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = (v24 | (v25 << 4) | (v26 << 8) | (v27 << 12) | (v28 << 16) | (v29 << 20) | (v30 << 24) | (v31 << 28)) & 0xFFFFFFFF

@njit(inline="always")
def unpack4(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    dst[dp + 0 * ds] = w0 & 15
    dst[dp + 1 * ds] = (w0 >> 4) & 15
    dst[dp + 2 * ds] = (w0 >> 8) & 15
    dst[dp + 3 * ds] = (w0 >> 12) & 15
    dst[dp + 4 * ds] = (w0 >> 16) & 15
    dst[dp + 5 * ds] = (w0 >> 20) & 15
    dst[dp + 6 * ds] = (w0 >> 24) & 15
    dst[dp + 7 * ds] = (w0 >> 28)
    dst[dp + 8 * ds] = w1 & 15
    dst[dp + 9 * ds] = (w1 >> 4) & 15
    dst[dp + 10 * ds] = (w1 >> 8) & 15
    dst[dp + 11 * ds] = (w1 >> 12) & 15
    dst[dp + 12 * ds] = (w1 >> 16) & 15
    dst[dp + 13 * ds] = (w1 >> 20) & 15
    dst[dp + 14 * ds] = (w1 >> 24) & 15
    dst[dp + 15 * ds] = (w1 >> 28)
    dst[dp + 16 * ds] = w2 & 15
    dst[dp + 17 * ds] = (w2 >> 4) & 15
    dst[dp + 18 * ds] = (w2 >> 8) & 15
    dst[dp + 19 * ds] = (w2 >> 12) & 15
    dst[dp + 20 * ds] = (w2 >> 16) & 15
    dst[dp + 21 * ds] = (w2 >> 20) & 15
    dst[dp + 22 * ds] = (w2 >> 24) & 15
    dst[dp + 23 * ds] = (w2 >> 28)
    dst[dp + 24 * ds] = w3 & 15
    dst[dp + 25 * ds] = (w3 >> 4) & 15
    dst[dp + 26 * ds] = (w3 >> 8) & 15
    dst[dp + 27 * ds] = (w3 >> 12) & 15
    dst[dp + 28 * ds] = (w3 >> 16) & 15
    dst[dp + 29 * ds] = (w3 >> 20) & 15
    dst[dp + 30 * ds] = (w3 >> 24) & 15
    dst[dp + 31 * ds] = (w3 >> 28)

@njit(inline="always")
def pack5(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 31
    v1 = src[sp + 1 * ss] & 31
    v2 = src[sp + 2 * ss] & 31
    v3 = src[sp + 3 * ss] & 31
    v4 = src[sp + 4 * ss] & 31
    v5 = src[sp + 5 * ss] & 31
    v6 = src[sp + 6 * ss] & 31
    v7 = src[sp + 7 * ss] & 31
    v8 = src[sp + 8 * ss] & 31
    v9 = src[sp + 9 * ss] & 31
    v10 = src[sp + 10 * ss] & 31
    v11 = src[sp + 11 * ss] & 31
    v12 = src[sp + 12 * ss] & 31
    v13 = src[sp + 13 * ss] & 31
    v14 = src[sp + 14 * ss] & 31
    v15 = src[sp + 15 * ss] & 31
    v16 = src[sp + 16 * ss] & 31
    v17 = src[sp + 17 * ss] & 31
    v18 = src[sp + 18 * ss] & 31
    v19 = src[sp + 19 * ss] & 31
    v20 = src[sp + 20 * ss] & 31
    v21 = src[sp + 21 * ss] & 31
    v22 = src[sp + 22 * ss] & 31
    v23 = src[sp + 23 * ss] & 31
    v24 = src[sp + 24 * ss] & 31
    v25 = src[sp + 25 * ss] & 31
    v26 = src[sp + 26 * ss] & 31
    v27 = src[sp + 27 * ss] & 31
    v28 = src[sp + 28 * ss] & 31
    v29 = src[sp + 29 * ss] & 31
    v30 = src[sp + 30 * ss] & 31
    v31 = src[sp + 31 * ss] & 31
    dst[dp + 0 * ds] = (v0 | (v1 << 5) | (v2 << 10) | (v3 << 15) | (v4 << 20) | (v5 << 25) | (v6 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v6 >> 2) | (v7 << 3) | (v8 << 8) | (v9 << 13) | (v10 << 18) | (v11 << 23) | (v12 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v12 >> 4) | (v13 << 1) | (v14 << 6) | (v15 << 11) | (v16 << 16) | (v17 << 21) | (v18 << 26) | (v19 << 31)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v19 >> 1) | (v20 << 4) | (v21 << 9) | (v22 << 14) | (v23 << 19) | (v24 << 24) | (v25 << 29)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v25 >> 3) | (v26 << 2) | (v27 << 7) | (v28 << 12) | (v29 << 17) | (v30 << 22) | (v31 << 27)) & 0xFFFFFFFF

@njit(inline="always")
def unpack5(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    dst[dp + 0 * ds] = w0 & 31
    dst[dp + 1 * ds] = (w0 >> 5) & 31
    dst[dp + 2 * ds] = (w0 >> 10) & 31
    dst[dp + 3 * ds] = (w0 >> 15) & 31
    dst[dp + 4 * ds] = (w0 >> 20) & 31
    dst[dp + 5 * ds] = (w0 >> 25) & 31
    dst[dp + 6 * ds] = (w0 >> 30) | ((w1 & 7) << 2)
    dst[dp + 7 * ds] = (w1 >> 3) & 31
    dst[dp + 8 * ds] = (w1 >> 8) & 31
    dst[dp + 9 * ds] = (w1 >> 13) & 31
    dst[dp + 10 * ds] = (w1 >> 18) & 31
    dst[dp + 11 * ds] = (w1 >> 23) & 31
    dst[dp + 12 * ds] = (w1 >> 28) | ((w2 & 1) << 4)
    dst[dp + 13 * ds] = (w2 >> 1) & 31
    dst[dp + 14 * ds] = (w2 >> 6) & 31
    dst[dp + 15 * ds] = (w2 >> 11) & 31
    dst[dp + 16 * ds] = (w2 >> 16) & 31
    dst[dp + 17 * ds] = (w2 >> 21) & 31
    dst[dp + 18 * ds] = (w2 >> 26) & 31
    dst[dp + 19 * ds] = (w2 >> 31) | ((w3 & 15) << 1)
    dst[dp + 20 * ds] = (w3 >> 4) & 31
    dst[dp + 21 * ds] = (w3 >> 9) & 31
    dst[dp + 22 * ds] = (w3 >> 14) & 31
    dst[dp + 23 * ds] = (w3 >> 19) & 31
    dst[dp + 24 * ds] = (w3 >> 24) & 31
    dst[dp + 25 * ds] = (w3 >> 29) | ((w4 & 3) << 3)
    dst[dp + 26 * ds] = (w4 >> 2) & 31
    dst[dp + 27 * ds] = (w4 >> 7) & 31
    dst[dp + 28 * ds] = (w4 >> 12) & 31
    dst[dp + 29 * ds] = (w4 >> 17) & 31
    dst[dp + 30 * ds] = (w4 >> 22) & 31
    dst[dp + 31 * ds] = (w4 >> 27)

@njit(inline="always")
def pack6(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 63
    v1 = src[sp + 1 * ss] & 63
    v2 = src[sp + 2 * ss] & 63
    v3 = src[sp + 3 * ss] & 63
    v4 = src[sp + 4 * ss] & 63
    v5 = src[sp + 5 * ss] & 63
    v6 = src[sp + 6 * ss] & 63
    v7 = src[sp + 7 * ss] & 63
    v8 = src[sp + 8 * ss] & 63
    v9 = src[sp + 9 * ss] & 63
    v10 = src[sp + 10 * ss] & 63
    v11 = src[sp + 11 * ss] & 63
    v12 = src[sp + 12 * ss] & 63
    v13 = src[sp + 13 * ss] & 63
    v14 = src[sp + 14 * ss] & 63
    v15 = src[sp + 15 * ss] & 63
    v16 = src[sp + 16 * ss] & 63
    v17 = src[sp + 17 * ss] & 63
    v18 = src[sp + 18 * ss] & 63
    v19 = src[sp + 19 * ss] & 63
    v20 = src[sp + 20 * ss] & 63
    v21 = src[sp + 21 * ss] & 63
    v22 = src[sp + 22 * ss] & 63
    v23 = src[sp + 23 * ss] & 63
    v24 = src[sp + 24 * ss] & 63
    v25 = src[sp + 25 * ss] & 63
    v26 = src[sp + 26 * ss] & 63
    v27 = src[sp + 27 * ss] & 63
    v28 = src[sp + 28 * ss] & 63
    v29 = src[sp + 29 * ss] & 63
    v30 = src[sp + 30 * ss] & 63
    v31 = src[sp + 31 * ss] & 63
    dst[dp + 0 * ds] = (v0 | (v1 << 6) | (v2 << 12) | (v3 << 18) | (v4 << 24) | (v5 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v5 >> 2) | (v6 << 4) | (v7 << 10) | (v8 << 16) | (v9 << 22) | (v10 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v10 >> 4) | (v11 << 2) | (v12 << 8) | (v13 << 14) | (v14 << 20) | (v15 << 26)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = (v16 | (v17 << 6) | (v18 << 12) | (v19 << 18) | (v20 << 24) | (v21 << 30)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v21 >> 2) | (v22 << 4) | (v23 << 10) | (v24 << 16) | (v25 << 22) | (v26 << 28)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v26 >> 4) | (v27 << 2) | (v28 << 8) | (v29 << 14) | (v30 << 20) | (v31 << 26)) & 0xFFFFFFFF

@njit(inline="always")
def unpack6(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    dst[dp + 0 * ds] = w0 & 63
    dst[dp + 1 * ds] = (w0 >> 6) & 63
    dst[dp + 2 * ds] = (w0 >> 12) & 63
    dst[dp + 3 * ds] = (w0 >> 18) & 63
    dst[dp + 4 * ds] = (w0 >> 24) & 63
    dst[dp + 5 * ds] = (w0 >> 30) | ((w1 & 15) << 2)
    dst[dp + 6 * ds] = (w1 >> 4) & 63
    dst[dp + 7 * ds] = (w1 >> 10) & 63
    dst[dp + 8 * ds] = (w1 >> 16) & 63
    dst[dp + 9 * ds] = (w1 >> 22) & 63
    dst[dp + 10 * ds] = (w1 >> 28) | ((w2 & 3) << 4)
    dst[dp + 11 * ds] = (w2 >> 2) & 63
    dst[dp + 12 * ds] = (w2 >> 8) & 63
    dst[dp + 13 * ds] = (w2 >> 14) & 63
    dst[dp + 14 * ds] = (w2 >> 20) & 63
    dst[dp + 15 * ds] = (w2 >> 26)
    dst[dp + 16 * ds] = w3 & 63
    dst[dp + 17 * ds] = (w3 >> 6) & 63
    dst[dp + 18 * ds] = (w3 >> 12) & 63
    dst[dp + 19 * ds] = (w3 >> 18) & 63
    dst[dp + 20 * ds] = (w3 >> 24) & 63
    dst[dp + 21 * ds] = (w3 >> 30) | ((w4 & 15) << 2)
    dst[dp + 22 * ds] = (w4 >> 4) & 63
    dst[dp + 23 * ds] = (w4 >> 10) & 63
    dst[dp + 24 * ds] = (w4 >> 16) & 63
    dst[dp + 25 * ds] = (w4 >> 22) & 63
    dst[dp + 26 * ds] = (w4 >> 28) | ((w5 & 3) << 4)
    dst[dp + 27 * ds] = (w5 >> 2) & 63
    dst[dp + 28 * ds] = (w5 >> 8) & 63
    dst[dp + 29 * ds] = (w5 >> 14) & 63
    dst[dp + 30 * ds] = (w5 >> 20) & 63
    dst[dp + 31 * ds] = (w5 >> 26)

@njit(inline="always")
def pack7(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 127
    v1 = src[sp + 1 * ss] & 127
    v2 = src[sp + 2 * ss] & 127
    v3 = src[sp + 3 * ss] & 127
    v4 = src[sp + 4 * ss] & 127
    v5 = src[sp + 5 * ss] & 127
    v6 = src[sp + 6 * ss] & 127
    v7 = src[sp + 7 * ss] & 127
    v8 = src[sp + 8 * ss] & 127
    v9 = src[sp + 9 * ss] & 127
    v10 = src[sp + 10 * ss] & 127
    v11 = src[sp + 11 * ss] & 127
    v12 = src[sp + 12 * ss] & 127
    v13 = src[sp + 13 * ss] & 127
    v14 = src[sp + 14 * ss] & 127
    v15 = src[sp + 15 * ss] & 127
    v16 = src[sp + 16 * ss] & 127
    v17 = src[sp + 17 * ss] & 127
    v18 = src[sp + 18 * ss] & 127
    v19 = src[sp + 19 * ss] & 127
    v20 = src[sp + 20 * ss] & 127
    v21 = src[sp + 21 * ss] & 127
    v22 = src[sp + 22 * ss] & 127
    v23 = src[sp + 23 * ss] & 127
    v24 = src[sp + 24 * ss] & 127
    v25 = src[sp + 25 * ss] & 127
    v26 = src[sp + 26 * ss] & 127
    v27 = src[sp + 27 * ss] & 127
    v28 = src[sp + 28 * ss] & 127
    v29 = src[sp + 29 * ss] & 127
    v30 = src[sp + 30 * ss] & 127
    v31 = src[sp + 31 * ss] & 127
    dst[dp + 0 * ds] = (v0 | (v1 << 7) | (v2 << 14) | (v3 << 21) | (v4 << 28)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v4 >> 4) | (v5 << 3) | (v6 << 10) | (v7 << 17) | (v8 << 24) | (v9 << 31)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v9 >> 1) | (v10 << 6) | (v11 << 13) | (v12 << 20) | (v13 << 27)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v13 >> 5) | (v14 << 2) | (v15 << 9) | (v16 << 16) | (v17 << 23) | (v18 << 30)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v18 >> 2) | (v19 << 5) | (v20 << 12) | (v21 << 19) | (v22 << 26)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v22 >> 6) | (v23 << 1) | (v24 << 8) | (v25 << 15) | (v26 << 22) | (v27 << 29)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v27 >> 3) | (v28 << 4) | (v29 << 11) | (v30 << 18) | (v31 << 25)) & 0xFFFFFFFF

@njit(inline="always")
def unpack7(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    dst[dp + 0 * ds] = w0 & 127
    dst[dp + 1 * ds] = (w0 >> 7) & 127
    dst[dp + 2 * ds] = (w0 >> 14) & 127
    dst[dp + 3 * ds] = (w0 >> 21) & 127
    dst[dp + 4 * ds] = (w0 >> 28) | ((w1 & 7) << 4)
    dst[dp + 5 * ds] = (w1 >> 3) & 127
    dst[dp + 6 * ds] = (w1 >> 10) & 127
    dst[dp + 7 * ds] = (w1 >> 17) & 127
    dst[dp + 8 * ds] = (w1 >> 24) & 127
    dst[dp + 9 * ds] = (w1 >> 31) | ((w2 & 63) << 1)
    dst[dp + 10 * ds] = (w2 >> 6) & 127
    dst[dp + 11 * ds] = (w2 >> 13) & 127
    dst[dp + 12 * ds] = (w2 >> 20) & 127
    dst[dp + 13 * ds] = (w2 >> 27) | ((w3 & 3) << 5)
    dst[dp + 14 * ds] = (w3 >> 2) & 127
    dst[dp + 15 * ds] = (w3 >> 9) & 127
    dst[dp + 16 * ds] = (w3 >> 16) & 127
    dst[dp + 17 * ds] = (w3 >> 23) & 127
    dst[dp + 18 * ds] = (w3 >> 30) | ((w4 & 31) << 2)
    dst[dp + 19 * ds] = (w4 >> 5) & 127
    dst[dp + 20 * ds] = (w4 >> 12) & 127
    dst[dp + 21 * ds] = (w4 >> 19) & 127
    dst[dp + 22 * ds] = (w4 >> 26) | ((w5 & 1) << 6)
    dst[dp + 23 * ds] = (w5 >> 1) & 127
    dst[dp + 24 * ds] = (w5 >> 8) & 127
    dst[dp + 25 * ds] = (w5 >> 15) & 127
    dst[dp + 26 * ds] = (w5 >> 22) & 127
    dst[dp + 27 * ds] = (w5 >> 29) | ((w6 & 15) << 3)
    dst[dp + 28 * ds] = (w6 >> 4) & 127
    dst[dp + 29 * ds] = (w6 >> 11) & 127
    dst[dp + 30 * ds] = (w6 >> 18) & 127
    dst[dp + 31 * ds] = (w6 >> 25)

@njit(inline="always")
def pack8(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 255
    v1 = src[sp + 1 * ss] & 255
    v2 = src[sp + 2 * ss] & 255
    v3 = src[sp + 3 * ss] & 255
    v4 = src[sp + 4 * ss] & 255
    v5 = src[sp + 5 * ss] & 255
    v6 = src[sp + 6 * ss] & 255
    v7 = src[sp + 7 * ss] & 255
    v8 = src[sp + 8 * ss] & 255
    v9 = src[sp + 9 * ss] & 255
    v10 = src[sp + 10 * ss] & 255
    v11 = src[sp + 11 * ss] & 255
    v12 = src[sp + 12 * ss] & 255
    v13 = src[sp + 13 * ss] & 255
    v14 = src[sp + 14 * ss] & 255
    v15 = src[sp + 15 * ss] & 255
    v16 = src[sp + 16 * ss] & 255
    v17 = src[sp + 17 * ss] & 255
    v18 = src[sp + 18 * ss] & 255
    v19 = src[sp + 19 * ss] & 255
    v20 = src[sp + 20 * ss] & 255
    v21 = src[sp + 21 * ss] & 255
    v22 = src[sp + 22 * ss] & 255
    v23 = src[sp + 23 * ss] & 255
    v24 = src[sp + 24 * ss] & 255
    v25 = src[sp + 25 * ss] & 255
    v26 = src[sp + 26 * ss] & 255
    v27 = src[sp + 27 * ss] & 255
    v28 = src[sp + 28 * ss] & 255
    v29 = src[sp + 29 * ss] & 255
    v30 = src[sp + 30 * ss] & 255
    v31 = src[sp + 31 * ss] & 255
    dst[dp + 0 * ds] = (v0 | (v1 << 8) | (v2 << 16) | (v3 << 24)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = (v4 | (v5 << 8) | (v6 << 16) | (v7 << 24)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = (v8 | (v9 << 8) | (v10 << 16) | (v11 << 24)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = (v12 | (v13 << 8) | (v14 << 16) | (v15 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = (v16 | (v17 << 8) | (v18 << 16) | (v19 << 24)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = (v20 | (v21 << 8) | (v22 << 16) | (v23 << 24)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = (v24 | (v25 << 8) | (v26 << 16) | (v27 << 24)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = (v28 | (v29 << 8) | (v30 << 16) | (v31 << 24)) & 0xFFFFFFFF

@njit(inline="always")
def unpack8(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    dst[dp + 0 * ds] = w0 & 255
    dst[dp + 1 * ds] = (w0 >> 8) & 255
    dst[dp + 2 * ds] = (w0 >> 16) & 255
    dst[dp + 3 * ds] = (w0 >> 24)
    dst[dp + 4 * ds] = w1 & 255
    dst[dp + 5 * ds] = (w1 >> 8) & 255
    dst[dp + 6 * ds] = (w1 >> 16) & 255
    dst[dp + 7 * ds] = (w1 >> 24)
    dst[dp + 8 * ds] = w2 & 255
    dst[dp + 9 * ds] = (w2 >> 8) & 255
    dst[dp + 10 * ds] = (w2 >> 16) & 255
    dst[dp + 11 * ds] = (w2 >> 24)
    dst[dp + 12 * ds] = w3 & 255
    dst[dp + 13 * ds] = (w3 >> 8) & 255
    dst[dp + 14 * ds] = (w3 >> 16) & 255
    dst[dp + 15 * ds] = (w3 >> 24)
    dst[dp + 16 * ds] = w4 & 255
    dst[dp + 17 * ds] = (w4 >> 8) & 255
    dst[dp + 18 * ds] = (w4 >> 16) & 255
    dst[dp + 19 * ds] = (w4 >> 24)
    dst[dp + 20 * ds] = w5 & 255
    dst[dp + 21 * ds] = (w5 >> 8) & 255
    dst[dp + 22 * ds] = (w5 >> 16) & 255
    dst[dp + 23 * ds] = (w5 >> 24)
    dst[dp + 24 * ds] = w6 & 255
    dst[dp + 25 * ds] = (w6 >> 8) & 255
    dst[dp + 26 * ds] = (w6 >> 16) & 255
    dst[dp + 27 * ds] = (w6 >> 24)
    dst[dp + 28 * ds] = w7 & 255
    dst[dp + 29 * ds] = (w7 >> 8) & 255
    dst[dp + 30 * ds] = (w7 >> 16) & 255
    dst[dp + 31 * ds] = (w7 >> 24)

@njit(inline="always")
def pack9(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 511
    v1 = src[sp + 1 * ss] & 511
    v2 = src[sp + 2 * ss] & 511
    v3 = src[sp + 3 * ss] & 511
    v4 = src[sp + 4 * ss] & 511
    v5 = src[sp + 5 * ss] & 511
    v6 = src[sp + 6 * ss] & 511
    v7 = src[sp + 7 * ss] & 511
    v8 = src[sp + 8 * ss] & 511
    v9 = src[sp + 9 * ss] & 511
    v10 = src[sp + 10 * ss] & 511
    v11 = src[sp + 11 * ss] & 511
    v12 = src[sp + 12 * ss] & 511
    v13 = src[sp + 13 * ss] & 511
    v14 = src[sp + 14 * ss] & 511
    v15 = src[sp + 15 * ss] & 511
    v16 = src[sp + 16 * ss] & 511
    v17 = src[sp + 17 * ss] & 511
    v18 = src[sp + 18 * ss] & 511
    v19 = src[sp + 19 * ss] & 511
    v20 = src[sp + 20 * ss] & 511
    v21 = src[sp + 21 * ss] & 511
    v22 = src[sp + 22 * ss] & 511
    v23 = src[sp + 23 * ss] & 511
    v24 = src[sp + 24 * ss] & 511
    v25 = src[sp + 25 * ss] & 511
    v26 = src[sp + 26 * ss] & 511
    v27 = src[sp + 27 * ss] & 511
    v28 = src[sp + 28 * ss] & 511
    v29 = src[sp + 29 * ss] & 511
    v30 = src[sp + 30 * ss] & 511
    v31 = src[sp + 31 * ss] & 511
    dst[dp + 0 * ds] = (v0 | (v1 << 9) | (v2 << 18) | (v3 << 27)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v3 >> 5) | (v4 << 4) | (v5 << 13) | (v6 << 22) | (v7 << 31)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v7 >> 1) | (v8 << 8) | (v9 << 17) | (v10 << 26)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v10 >> 6) | (v11 << 3) | (v12 << 12) | (v13 << 21) | (v14 << 30)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v14 >> 2) | (v15 << 7) | (v16 << 16) | (v17 << 25)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v17 >> 7) | (v18 << 2) | (v19 << 11) | (v20 << 20) | (v21 << 29)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v21 >> 3) | (v22 << 6) | (v23 << 15) | (v24 << 24)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v24 >> 8) | (v25 << 1) | (v26 << 10) | (v27 << 19) | (v28 << 28)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v28 >> 4) | (v29 << 5) | (v30 << 14) | (v31 << 23)) & 0xFFFFFFFF

@njit(inline="always")
def unpack9(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    dst[dp + 0 * ds] = w0 & 511
    dst[dp + 1 * ds] = (w0 >> 9) & 511
    dst[dp + 2 * ds] = (w0 >> 18) & 511
    dst[dp + 3 * ds] = (w0 >> 27) | ((w1 & 15) << 5)
    dst[dp + 4 * ds] = (w1 >> 4) & 511
    dst[dp + 5 * ds] = (w1 >> 13) & 511
    dst[dp + 6 * ds] = (w1 >> 22) & 511
    dst[dp + 7 * ds] = (w1 >> 31) | ((w2 & 255) << 1)
    dst[dp + 8 * ds] = (w2 >> 8) & 511
    dst[dp + 9 * ds] = (w2 >> 17) & 511
    dst[dp + 10 * ds] = (w2 >> 26) | ((w3 & 7) << 6)
    dst[dp + 11 * ds] = (w3 >> 3) & 511
    dst[dp + 12 * ds] = (w3 >> 12) & 511
    dst[dp + 13 * ds] = (w3 >> 21) & 511
    dst[dp + 14 * ds] = (w3 >> 30) | ((w4 & 127) << 2)
    dst[dp + 15 * ds] = (w4 >> 7) & 511
    dst[dp + 16 * ds] = (w4 >> 16) & 511
    dst[dp + 17 * ds] = (w4 >> 25) | ((w5 & 3) << 7)
    dst[dp + 18 * ds] = (w5 >> 2) & 511
    dst[dp + 19 * ds] = (w5 >> 11) & 511
    dst[dp + 20 * ds] = (w5 >> 20) & 511
    dst[dp + 21 * ds] = (w5 >> 29) | ((w6 & 63) << 3)
    dst[dp + 22 * ds] = (w6 >> 6) & 511
    dst[dp + 23 * ds] = (w6 >> 15) & 511
    dst[dp + 24 * ds] = (w6 >> 24) | ((w7 & 1) << 8)
    dst[dp + 25 * ds] = (w7 >> 1) & 511
    dst[dp + 26 * ds] = (w7 >> 10) & 511
    dst[dp + 27 * ds] = (w7 >> 19) & 511
    dst[dp + 28 * ds] = (w7 >> 28) | ((w8 & 31) << 4)
    dst[dp + 29 * ds] = (w8 >> 5) & 511
    dst[dp + 30 * ds] = (w8 >> 14) & 511
    dst[dp + 31 * ds] = (w8 >> 23)

@njit(inline="always")
def pack10(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 1023
    v1 = src[sp + 1 * ss] & 1023
    v2 = src[sp + 2 * ss] & 1023
    v3 = src[sp + 3 * ss] & 1023
    v4 = src[sp + 4 * ss] & 1023
    v5 = src[sp + 5 * ss] & 1023
    v6 = src[sp + 6 * ss] & 1023
    v7 = src[sp + 7 * ss] & 1023
    v8 = src[sp + 8 * ss] & 1023
    v9 = src[sp + 9 * ss] & 1023
    v10 = src[sp + 10 * ss] & 1023
    v11 = src[sp + 11 * ss] & 1023
    v12 = src[sp + 12 * ss] & 1023
    v13 = src[sp + 13 * ss] & 1023
    v14 = src[sp + 14 * ss] & 1023
    v15 = src[sp + 15 * ss] & 1023
    v16 = src[sp + 16 * ss] & 1023
    v17 = src[sp + 17 * ss] & 1023
    v18 = src[sp + 18 * ss] & 1023
    v19 = src[sp + 19 * ss] & 1023
    v20 = src[sp + 20 * ss] & 1023
    v21 = src[sp + 21 * ss] & 1023
    v22 = src[sp + 22 * ss] & 1023
    v23 = src[sp + 23 * ss] & 1023
    v24 = src[sp + 24 * ss] & 1023
    v25 = src[sp + 25 * ss] & 1023
    v26 = src[sp + 26 * ss] & 1023
    v27 = src[sp + 27 * ss] & 1023
    v28 = src[sp + 28 * ss] & 1023
    v29 = src[sp + 29 * ss] & 1023
    v30 = src[sp + 30 * ss] & 1023
    v31 = src[sp + 31 * ss] & 1023
    dst[dp + 0 * ds] = (v0 | (v1 << 10) | (v2 << 20) | (v3 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v3 >> 2) | (v4 << 8) | (v5 << 18) | (v6 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v6 >> 4) | (v7 << 6) | (v8 << 16) | (v9 << 26)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v9 >> 6) | (v10 << 4) | (v11 << 14) | (v12 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v12 >> 8) | (v13 << 2) | (v14 << 12) | (v15 << 22)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = (v16 | (v17 << 10) | (v18 << 20) | (v19 << 30)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v19 >> 2) | (v20 << 8) | (v21 << 18) | (v22 << 28)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v22 >> 4) | (v23 << 6) | (v24 << 16) | (v25 << 26)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v25 >> 6) | (v26 << 4) | (v27 << 14) | (v28 << 24)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v28 >> 8) | (v29 << 2) | (v30 << 12) | (v31 << 22)) & 0xFFFFFFFF

@njit(inline="always")
def unpack10(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    dst[dp + 0 * ds] = w0 & 1023
    dst[dp + 1 * ds] = (w0 >> 10) & 1023
    dst[dp + 2 * ds] = (w0 >> 20) & 1023
    dst[dp + 3 * ds] = (w0 >> 30) | ((w1 & 255) << 2)
    dst[dp + 4 * ds] = (w1 >> 8) & 1023
    dst[dp + 5 * ds] = (w1 >> 18) & 1023
    dst[dp + 6 * ds] = (w1 >> 28) | ((w2 & 63) << 4)
    dst[dp + 7 * ds] = (w2 >> 6) & 1023
    dst[dp + 8 * ds] = (w2 >> 16) & 1023
    dst[dp + 9 * ds] = (w2 >> 26) | ((w3 & 15) << 6)
    dst[dp + 10 * ds] = (w3 >> 4) & 1023
    dst[dp + 11 * ds] = (w3 >> 14) & 1023
    dst[dp + 12 * ds] = (w3 >> 24) | ((w4 & 3) << 8)
    dst[dp + 13 * ds] = (w4 >> 2) & 1023
    dst[dp + 14 * ds] = (w4 >> 12) & 1023
    dst[dp + 15 * ds] = (w4 >> 22)
    dst[dp + 16 * ds] = w5 & 1023
    dst[dp + 17 * ds] = (w5 >> 10) & 1023
    dst[dp + 18 * ds] = (w5 >> 20) & 1023
    dst[dp + 19 * ds] = (w5 >> 30) | ((w6 & 255) << 2)
    dst[dp + 20 * ds] = (w6 >> 8) & 1023
    dst[dp + 21 * ds] = (w6 >> 18) & 1023
    dst[dp + 22 * ds] = (w6 >> 28) | ((w7 & 63) << 4)
    dst[dp + 23 * ds] = (w7 >> 6) & 1023
    dst[dp + 24 * ds] = (w7 >> 16) & 1023
    dst[dp + 25 * ds] = (w7 >> 26) | ((w8 & 15) << 6)
    dst[dp + 26 * ds] = (w8 >> 4) & 1023
    dst[dp + 27 * ds] = (w8 >> 14) & 1023
    dst[dp + 28 * ds] = (w8 >> 24) | ((w9 & 3) << 8)
    dst[dp + 29 * ds] = (w9 >> 2) & 1023
    dst[dp + 30 * ds] = (w9 >> 12) & 1023
    dst[dp + 31 * ds] = (w9 >> 22)

@njit(inline="always")
def pack11(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 2047
    v1 = src[sp + 1 * ss] & 2047
    v2 = src[sp + 2 * ss] & 2047
    v3 = src[sp + 3 * ss] & 2047
    v4 = src[sp + 4 * ss] & 2047
    v5 = src[sp + 5 * ss] & 2047
    v6 = src[sp + 6 * ss] & 2047
    v7 = src[sp + 7 * ss] & 2047
    v8 = src[sp + 8 * ss] & 2047
    v9 = src[sp + 9 * ss] & 2047
    v10 = src[sp + 10 * ss] & 2047
    v11 = src[sp + 11 * ss] & 2047
    v12 = src[sp + 12 * ss] & 2047
    v13 = src[sp + 13 * ss] & 2047
    v14 = src[sp + 14 * ss] & 2047
    v15 = src[sp + 15 * ss] & 2047
    v16 = src[sp + 16 * ss] & 2047
    v17 = src[sp + 17 * ss] & 2047
    v18 = src[sp + 18 * ss] & 2047
    v19 = src[sp + 19 * ss] & 2047
    v20 = src[sp + 20 * ss] & 2047
    v21 = src[sp + 21 * ss] & 2047
    v22 = src[sp + 22 * ss] & 2047
    v23 = src[sp + 23 * ss] & 2047
    v24 = src[sp + 24 * ss] & 2047
    v25 = src[sp + 25 * ss] & 2047
    v26 = src[sp + 26 * ss] & 2047
    v27 = src[sp + 27 * ss] & 2047
    v28 = src[sp + 28 * ss] & 2047
    v29 = src[sp + 29 * ss] & 2047
    v30 = src[sp + 30 * ss] & 2047
    v31 = src[sp + 31 * ss] & 2047
    dst[dp + 0 * ds] = (v0 | (v1 << 11) | (v2 << 22)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v2 >> 10) | (v3 << 1) | (v4 << 12) | (v5 << 23)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v5 >> 9) | (v6 << 2) | (v7 << 13) | (v8 << 24)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v8 >> 8) | (v9 << 3) | (v10 << 14) | (v11 << 25)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v11 >> 7) | (v12 << 4) | (v13 << 15) | (v14 << 26)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v14 >> 6) | (v15 << 5) | (v16 << 16) | (v17 << 27)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v17 >> 5) | (v18 << 6) | (v19 << 17) | (v20 << 28)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v20 >> 4) | (v21 << 7) | (v22 << 18) | (v23 << 29)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v23 >> 3) | (v24 << 8) | (v25 << 19) | (v26 << 30)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v26 >> 2) | (v27 << 9) | (v28 << 20) | (v29 << 31)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v29 >> 1) | (v30 << 10) | (v31 << 21)) & 0xFFFFFFFF

@njit(inline="always")
def unpack11(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    dst[dp + 0 * ds] = w0 & 2047
    dst[dp + 1 * ds] = (w0 >> 11) & 2047
    dst[dp + 2 * ds] = (w0 >> 22) | ((w1 & 1) << 10)
    dst[dp + 3 * ds] = (w1 >> 1) & 2047
    dst[dp + 4 * ds] = (w1 >> 12) & 2047
    dst[dp + 5 * ds] = (w1 >> 23) | ((w2 & 3) << 9)
    dst[dp + 6 * ds] = (w2 >> 2) & 2047
    dst[dp + 7 * ds] = (w2 >> 13) & 2047
    dst[dp + 8 * ds] = (w2 >> 24) | ((w3 & 7) << 8)
    dst[dp + 9 * ds] = (w3 >> 3) & 2047
    dst[dp + 10 * ds] = (w3 >> 14) & 2047
    dst[dp + 11 * ds] = (w3 >> 25) | ((w4 & 15) << 7)
    dst[dp + 12 * ds] = (w4 >> 4) & 2047
    dst[dp + 13 * ds] = (w4 >> 15) & 2047
    dst[dp + 14 * ds] = (w4 >> 26) | ((w5 & 31) << 6)
    dst[dp + 15 * ds] = (w5 >> 5) & 2047
    dst[dp + 16 * ds] = (w5 >> 16) & 2047
    dst[dp + 17 * ds] = (w5 >> 27) | ((w6 & 63) << 5)
    dst[dp + 18 * ds] = (w6 >> 6) & 2047
    dst[dp + 19 * ds] = (w6 >> 17) & 2047
    dst[dp + 20 * ds] = (w6 >> 28) | ((w7 & 127) << 4)
    dst[dp + 21 * ds] = (w7 >> 7) & 2047
    dst[dp + 22 * ds] = (w7 >> 18) & 2047
    dst[dp + 23 * ds] = (w7 >> 29) | ((w8 & 255) << 3)
    dst[dp + 24 * ds] = (w8 >> 8) & 2047
    dst[dp + 25 * ds] = (w8 >> 19) & 2047
    dst[dp + 26 * ds] = (w8 >> 30) | ((w9 & 511) << 2)
    dst[dp + 27 * ds] = (w9 >> 9) & 2047
    dst[dp + 28 * ds] = (w9 >> 20) & 2047
    dst[dp + 29 * ds] = (w9 >> 31) | ((w10 & 1023) << 1)
    dst[dp + 30 * ds] = (w10 >> 10) & 2047
    dst[dp + 31 * ds] = (w10 >> 21)

@njit(inline="always")
def pack12(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 4095
    v1 = src[sp + 1 * ss] & 4095
    v2 = src[sp + 2 * ss] & 4095
    v3 = src[sp + 3 * ss] & 4095
    v4 = src[sp + 4 * ss] & 4095
    v5 = src[sp + 5 * ss] & 4095
    v6 = src[sp + 6 * ss] & 4095
    v7 = src[sp + 7 * ss] & 4095
    v8 = src[sp + 8 * ss] & 4095
    v9 = src[sp + 9 * ss] & 4095
    v10 = src[sp + 10 * ss] & 4095
    v11 = src[sp + 11 * ss] & 4095
    v12 = src[sp + 12 * ss] & 4095
    v13 = src[sp + 13 * ss] & 4095
    v14 = src[sp + 14 * ss] & 4095
    v15 = src[sp + 15 * ss] & 4095
    v16 = src[sp + 16 * ss] & 4095
    v17 = src[sp + 17 * ss] & 4095
    v18 = src[sp + 18 * ss] & 4095
    v19 = src[sp + 19 * ss] & 4095
    v20 = src[sp + 20 * ss] & 4095
    v21 = src[sp + 21 * ss] & 4095
    v22 = src[sp + 22 * ss] & 4095
    v23 = src[sp + 23 * ss] & 4095
    v24 = src[sp + 24 * ss] & 4095
    v25 = src[sp + 25 * ss] & 4095
    v26 = src[sp + 26 * ss] & 4095
    v27 = src[sp + 27 * ss] & 4095
    v28 = src[sp + 28 * ss] & 4095
    v29 = src[sp + 29 * ss] & 4095
    v30 = src[sp + 30 * ss] & 4095
    v31 = src[sp + 31 * ss] & 4095
    dst[dp + 0 * ds] = (v0 | (v1 << 12) | (v2 << 24)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v2 >> 8) | (v3 << 4) | (v4 << 16) | (v5 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v5 >> 4) | (v6 << 8) | (v7 << 20)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = (v8 | (v9 << 12) | (v10 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v10 >> 8) | (v11 << 4) | (v12 << 16) | (v13 << 28)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v13 >> 4) | (v14 << 8) | (v15 << 20)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = (v16 | (v17 << 12) | (v18 << 24)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v18 >> 8) | (v19 << 4) | (v20 << 16) | (v21 << 28)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v21 >> 4) | (v22 << 8) | (v23 << 20)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = (v24 | (v25 << 12) | (v26 << 24)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v26 >> 8) | (v27 << 4) | (v28 << 16) | (v29 << 28)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v29 >> 4) | (v30 << 8) | (v31 << 20)) & 0xFFFFFFFF

@njit(inline="always")
def unpack12(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    dst[dp + 0 * ds] = w0 & 4095
    dst[dp + 1 * ds] = (w0 >> 12) & 4095
    dst[dp + 2 * ds] = (w0 >> 24) | ((w1 & 15) << 8)
    dst[dp + 3 * ds] = (w1 >> 4) & 4095
    dst[dp + 4 * ds] = (w1 >> 16) & 4095
    dst[dp + 5 * ds] = (w1 >> 28) | ((w2 & 255) << 4)
    dst[dp + 6 * ds] = (w2 >> 8) & 4095
    dst[dp + 7 * ds] = (w2 >> 20)
    dst[dp + 8 * ds] = w3 & 4095
    dst[dp + 9 * ds] = (w3 >> 12) & 4095
    dst[dp + 10 * ds] = (w3 >> 24) | ((w4 & 15) << 8)
    dst[dp + 11 * ds] = (w4 >> 4) & 4095
    dst[dp + 12 * ds] = (w4 >> 16) & 4095
    dst[dp + 13 * ds] = (w4 >> 28) | ((w5 & 255) << 4)
    dst[dp + 14 * ds] = (w5 >> 8) & 4095
    dst[dp + 15 * ds] = (w5 >> 20)
    dst[dp + 16 * ds] = w6 & 4095
    dst[dp + 17 * ds] = (w6 >> 12) & 4095
    dst[dp + 18 * ds] = (w6 >> 24) | ((w7 & 15) << 8)
    dst[dp + 19 * ds] = (w7 >> 4) & 4095
    dst[dp + 20 * ds] = (w7 >> 16) & 4095
    dst[dp + 21 * ds] = (w7 >> 28) | ((w8 & 255) << 4)
    dst[dp + 22 * ds] = (w8 >> 8) & 4095
    dst[dp + 23 * ds] = (w8 >> 20)
    dst[dp + 24 * ds] = w9 & 4095
    dst[dp + 25 * ds] = (w9 >> 12) & 4095
    dst[dp + 26 * ds] = (w9 >> 24) | ((w10 & 15) << 8)
    dst[dp + 27 * ds] = (w10 >> 4) & 4095
    dst[dp + 28 * ds] = (w10 >> 16) & 4095
    dst[dp + 29 * ds] = (w10 >> 28) | ((w11 & 255) << 4)
    dst[dp + 30 * ds] = (w11 >> 8) & 4095
    dst[dp + 31 * ds] = (w11 >> 20)

@njit(inline="always")
def pack13(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 8191
    v1 = src[sp + 1 * ss] & 8191
    v2 = src[sp + 2 * ss] & 8191
    v3 = src[sp + 3 * ss] & 8191
    v4 = src[sp + 4 * ss] & 8191
    v5 = src[sp + 5 * ss] & 8191
    v6 = src[sp + 6 * ss] & 8191
    v7 = src[sp + 7 * ss] & 8191
    v8 = src[sp + 8 * ss] & 8191
    v9 = src[sp + 9 * ss] & 8191
    v10 = src[sp + 10 * ss] & 8191
    v11 = src[sp + 11 * ss] & 8191
    v12 = src[sp + 12 * ss] & 8191
    v13 = src[sp + 13 * ss] & 8191
    v14 = src[sp + 14 * ss] & 8191
    v15 = src[sp + 15 * ss] & 8191
    v16 = src[sp + 16 * ss] & 8191
    v17 = src[sp + 17 * ss] & 8191
    v18 = src[sp + 18 * ss] & 8191
    v19 = src[sp + 19 * ss] & 8191
    v20 = src[sp + 20 * ss] & 8191
    v21 = src[sp + 21 * ss] & 8191
    v22 = src[sp + 22 * ss] & 8191
    v23 = src[sp + 23 * ss] & 8191
    v24 = src[sp + 24 * ss] & 8191
    v25 = src[sp + 25 * ss] & 8191
    v26 = src[sp + 26 * ss] & 8191
    v27 = src[sp + 27 * ss] & 8191
    v28 = src[sp + 28 * ss] & 8191
    v29 = src[sp + 29 * ss] & 8191
    v30 = src[sp + 30 * ss] & 8191
    v31 = src[sp + 31 * ss] & 8191
    dst[dp + 0 * ds] = (v0 | (v1 << 13) | (v2 << 26)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v2 >> 6) | (v3 << 7) | (v4 << 20)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v4 >> 12) | (v5 << 1) | (v6 << 14) | (v7 << 27)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v7 >> 5) | (v8 << 8) | (v9 << 21)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v9 >> 11) | (v10 << 2) | (v11 << 15) | (v12 << 28)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v12 >> 4) | (v13 << 9) | (v14 << 22)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v14 >> 10) | (v15 << 3) | (v16 << 16) | (v17 << 29)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v17 >> 3) | (v18 << 10) | (v19 << 23)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v19 >> 9) | (v20 << 4) | (v21 << 17) | (v22 << 30)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v22 >> 2) | (v23 << 11) | (v24 << 24)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v24 >> 8) | (v25 << 5) | (v26 << 18) | (v27 << 31)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v27 >> 1) | (v28 << 12) | (v29 << 25)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v29 >> 7) | (v30 << 6) | (v31 << 19)) & 0xFFFFFFFF

@njit(inline="always")
def unpack13(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    dst[dp + 0 * ds] = w0 & 8191
    dst[dp + 1 * ds] = (w0 >> 13) & 8191
    dst[dp + 2 * ds] = (w0 >> 26) | ((w1 & 127) << 6)
    dst[dp + 3 * ds] = (w1 >> 7) & 8191
    dst[dp + 4 * ds] = (w1 >> 20) | ((w2 & 1) << 12)
    dst[dp + 5 * ds] = (w2 >> 1) & 8191
    dst[dp + 6 * ds] = (w2 >> 14) & 8191
    dst[dp + 7 * ds] = (w2 >> 27) | ((w3 & 255) << 5)
    dst[dp + 8 * ds] = (w3 >> 8) & 8191
    dst[dp + 9 * ds] = (w3 >> 21) | ((w4 & 3) << 11)
    dst[dp + 10 * ds] = (w4 >> 2) & 8191
    dst[dp + 11 * ds] = (w4 >> 15) & 8191
    dst[dp + 12 * ds] = (w4 >> 28) | ((w5 & 511) << 4)
    dst[dp + 13 * ds] = (w5 >> 9) & 8191
    dst[dp + 14 * ds] = (w5 >> 22) | ((w6 & 7) << 10)
    dst[dp + 15 * ds] = (w6 >> 3) & 8191
    dst[dp + 16 * ds] = (w6 >> 16) & 8191
    dst[dp + 17 * ds] = (w6 >> 29) | ((w7 & 1023) << 3)
    dst[dp + 18 * ds] = (w7 >> 10) & 8191
    dst[dp + 19 * ds] = (w7 >> 23) | ((w8 & 15) << 9)
    dst[dp + 20 * ds] = (w8 >> 4) & 8191
    dst[dp + 21 * ds] = (w8 >> 17) & 8191
    dst[dp + 22 * ds] = (w8 >> 30) | ((w9 & 2047) << 2)
    dst[dp + 23 * ds] = (w9 >> 11) & 8191
    dst[dp + 24 * ds] = (w9 >> 24) | ((w10 & 31) << 8)
    dst[dp + 25 * ds] = (w10 >> 5) & 8191
    dst[dp + 26 * ds] = (w10 >> 18) & 8191
    dst[dp + 27 * ds] = (w10 >> 31) | ((w11 & 4095) << 1)
    dst[dp + 28 * ds] = (w11 >> 12) & 8191
    dst[dp + 29 * ds] = (w11 >> 25) | ((w12 & 63) << 7)
    dst[dp + 30 * ds] = (w12 >> 6) & 8191
    dst[dp + 31 * ds] = (w12 >> 19)

@njit(inline="always")
def pack14(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 16383
    v1 = src[sp + 1 * ss] & 16383
    v2 = src[sp + 2 * ss] & 16383
    v3 = src[sp + 3 * ss] & 16383
    v4 = src[sp + 4 * ss] & 16383
    v5 = src[sp + 5 * ss] & 16383
    v6 = src[sp + 6 * ss] & 16383
    v7 = src[sp + 7 * ss] & 16383
    v8 = src[sp + 8 * ss] & 16383
    v9 = src[sp + 9 * ss] & 16383
    v10 = src[sp + 10 * ss] & 16383
    v11 = src[sp + 11 * ss] & 16383
    v12 = src[sp + 12 * ss] & 16383
    v13 = src[sp + 13 * ss] & 16383
    v14 = src[sp + 14 * ss] & 16383
    v15 = src[sp + 15 * ss] & 16383
    v16 = src[sp + 16 * ss] & 16383
    v17 = src[sp + 17 * ss] & 16383
    v18 = src[sp + 18 * ss] & 16383
    v19 = src[sp + 19 * ss] & 16383
    v20 = src[sp + 20 * ss] & 16383
    v21 = src[sp + 21 * ss] & 16383
    v22 = src[sp + 22 * ss] & 16383
    v23 = src[sp + 23 * ss] & 16383
    v24 = src[sp + 24 * ss] & 16383
    v25 = src[sp + 25 * ss] & 16383
    v26 = src[sp + 26 * ss] & 16383
    v27 = src[sp + 27 * ss] & 16383
    v28 = src[sp + 28 * ss] & 16383
    v29 = src[sp + 29 * ss] & 16383
    v30 = src[sp + 30 * ss] & 16383
    v31 = src[sp + 31 * ss] & 16383
    dst[dp + 0 * ds] = (v0 | (v1 << 14) | (v2 << 28)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v2 >> 4) | (v3 << 10) | (v4 << 24)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v4 >> 8) | (v5 << 6) | (v6 << 20)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v6 >> 12) | (v7 << 2) | (v8 << 16) | (v9 << 30)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v9 >> 2) | (v10 << 12) | (v11 << 26)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v11 >> 6) | (v12 << 8) | (v13 << 22)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v13 >> 10) | (v14 << 4) | (v15 << 18)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = (v16 | (v17 << 14) | (v18 << 28)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v18 >> 4) | (v19 << 10) | (v20 << 24)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v20 >> 8) | (v21 << 6) | (v22 << 20)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v22 >> 12) | (v23 << 2) | (v24 << 16) | (v25 << 30)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v25 >> 2) | (v26 << 12) | (v27 << 26)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v27 >> 6) | (v28 << 8) | (v29 << 22)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v29 >> 10) | (v30 << 4) | (v31 << 18)) & 0xFFFFFFFF

@njit(inline="always")
def unpack14(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    dst[dp + 0 * ds] = w0 & 16383
    dst[dp + 1 * ds] = (w0 >> 14) & 16383
    dst[dp + 2 * ds] = (w0 >> 28) | ((w1 & 1023) << 4)
    dst[dp + 3 * ds] = (w1 >> 10) & 16383
    dst[dp + 4 * ds] = (w1 >> 24) | ((w2 & 63) << 8)
    dst[dp + 5 * ds] = (w2 >> 6) & 16383
    dst[dp + 6 * ds] = (w2 >> 20) | ((w3 & 3) << 12)
    dst[dp + 7 * ds] = (w3 >> 2) & 16383
    dst[dp + 8 * ds] = (w3 >> 16) & 16383
    dst[dp + 9 * ds] = (w3 >> 30) | ((w4 & 4095) << 2)
    dst[dp + 10 * ds] = (w4 >> 12) & 16383
    dst[dp + 11 * ds] = (w4 >> 26) | ((w5 & 255) << 6)
    dst[dp + 12 * ds] = (w5 >> 8) & 16383
    dst[dp + 13 * ds] = (w5 >> 22) | ((w6 & 15) << 10)
    dst[dp + 14 * ds] = (w6 >> 4) & 16383
    dst[dp + 15 * ds] = (w6 >> 18)
    dst[dp + 16 * ds] = w7 & 16383
    dst[dp + 17 * ds] = (w7 >> 14) & 16383
    dst[dp + 18 * ds] = (w7 >> 28) | ((w8 & 1023) << 4)
    dst[dp + 19 * ds] = (w8 >> 10) & 16383
    dst[dp + 20 * ds] = (w8 >> 24) | ((w9 & 63) << 8)
    dst[dp + 21 * ds] = (w9 >> 6) & 16383
    dst[dp + 22 * ds] = (w9 >> 20) | ((w10 & 3) << 12)
    dst[dp + 23 * ds] = (w10 >> 2) & 16383
    dst[dp + 24 * ds] = (w10 >> 16) & 16383
    dst[dp + 25 * ds] = (w10 >> 30) | ((w11 & 4095) << 2)
    dst[dp + 26 * ds] = (w11 >> 12) & 16383
    dst[dp + 27 * ds] = (w11 >> 26) | ((w12 & 255) << 6)
    dst[dp + 28 * ds] = (w12 >> 8) & 16383
    dst[dp + 29 * ds] = (w12 >> 22) | ((w13 & 15) << 10)
    dst[dp + 30 * ds] = (w13 >> 4) & 16383
    dst[dp + 31 * ds] = (w13 >> 18)

@njit(inline="always")
def pack15(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 32767
    v1 = src[sp + 1 * ss] & 32767
    v2 = src[sp + 2 * ss] & 32767
    v3 = src[sp + 3 * ss] & 32767
    v4 = src[sp + 4 * ss] & 32767
    v5 = src[sp + 5 * ss] & 32767
    v6 = src[sp + 6 * ss] & 32767
    v7 = src[sp + 7 * ss] & 32767
    v8 = src[sp + 8 * ss] & 32767
    v9 = src[sp + 9 * ss] & 32767
    v10 = src[sp + 10 * ss] & 32767
    v11 = src[sp + 11 * ss] & 32767
    v12 = src[sp + 12 * ss] & 32767
    v13 = src[sp + 13 * ss] & 32767
    v14 = src[sp + 14 * ss] & 32767
    v15 = src[sp + 15 * ss] & 32767
    v16 = src[sp + 16 * ss] & 32767
    v17 = src[sp + 17 * ss] & 32767
    v18 = src[sp + 18 * ss] & 32767
    v19 = src[sp + 19 * ss] & 32767
    v20 = src[sp + 20 * ss] & 32767
    v21 = src[sp + 21 * ss] & 32767
    v22 = src[sp + 22 * ss] & 32767
    v23 = src[sp + 23 * ss] & 32767
    v24 = src[sp + 24 * ss] & 32767
    v25 = src[sp + 25 * ss] & 32767
    v26 = src[sp + 26 * ss] & 32767
    v27 = src[sp + 27 * ss] & 32767
    v28 = src[sp + 28 * ss] & 32767
    v29 = src[sp + 29 * ss] & 32767
    v30 = src[sp + 30 * ss] & 32767
    v31 = src[sp + 31 * ss] & 32767
    dst[dp + 0 * ds] = (v0 | (v1 << 15) | (v2 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v2 >> 2) | (v3 << 13) | (v4 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v4 >> 4) | (v5 << 11) | (v6 << 26)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v6 >> 6) | (v7 << 9) | (v8 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v8 >> 8) | (v9 << 7) | (v10 << 22)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v10 >> 10) | (v11 << 5) | (v12 << 20)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v12 >> 12) | (v13 << 3) | (v14 << 18)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v14 >> 14) | (v15 << 1) | (v16 << 16) | (v17 << 31)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v17 >> 1) | (v18 << 14) | (v19 << 29)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v19 >> 3) | (v20 << 12) | (v21 << 27)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v21 >> 5) | (v22 << 10) | (v23 << 25)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v23 >> 7) | (v24 << 8) | (v25 << 23)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v25 >> 9) | (v26 << 6) | (v27 << 21)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v27 >> 11) | (v28 << 4) | (v29 << 19)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v29 >> 13) | (v30 << 2) | (v31 << 17)) & 0xFFFFFFFF

@njit(inline="always")
def unpack15(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    dst[dp + 0 * ds] = w0 & 32767
    dst[dp + 1 * ds] = (w0 >> 15) & 32767
    dst[dp + 2 * ds] = (w0 >> 30) | ((w1 & 8191) << 2)
    dst[dp + 3 * ds] = (w1 >> 13) & 32767
    dst[dp + 4 * ds] = (w1 >> 28) | ((w2 & 2047) << 4)
    dst[dp + 5 * ds] = (w2 >> 11) & 32767
    dst[dp + 6 * ds] = (w2 >> 26) | ((w3 & 511) << 6)
    dst[dp + 7 * ds] = (w3 >> 9) & 32767
    dst[dp + 8 * ds] = (w3 >> 24) | ((w4 & 127) << 8)
    dst[dp + 9 * ds] = (w4 >> 7) & 32767
    dst[dp + 10 * ds] = (w4 >> 22) | ((w5 & 31) << 10)
    dst[dp + 11 * ds] = (w5 >> 5) & 32767
    dst[dp + 12 * ds] = (w5 >> 20) | ((w6 & 7) << 12)
    dst[dp + 13 * ds] = (w6 >> 3) & 32767
    dst[dp + 14 * ds] = (w6 >> 18) | ((w7 & 1) << 14)
    dst[dp + 15 * ds] = (w7 >> 1) & 32767
    dst[dp + 16 * ds] = (w7 >> 16) & 32767
    dst[dp + 17 * ds] = (w7 >> 31) | ((w8 & 16383) << 1)
    dst[dp + 18 * ds] = (w8 >> 14) & 32767
    dst[dp + 19 * ds] = (w8 >> 29) | ((w9 & 4095) << 3)
    dst[dp + 20 * ds] = (w9 >> 12) & 32767
    dst[dp + 21 * ds] = (w9 >> 27) | ((w10 & 1023) << 5)
    dst[dp + 22 * ds] = (w10 >> 10) & 32767
    dst[dp + 23 * ds] = (w10 >> 25) | ((w11 & 255) << 7)
    dst[dp + 24 * ds] = (w11 >> 8) & 32767
    dst[dp + 25 * ds] = (w11 >> 23) | ((w12 & 63) << 9)
    dst[dp + 26 * ds] = (w12 >> 6) & 32767
    dst[dp + 27 * ds] = (w12 >> 21) | ((w13 & 15) << 11)
    dst[dp + 28 * ds] = (w13 >> 4) & 32767
    dst[dp + 29 * ds] = (w13 >> 19) | ((w14 & 3) << 13)
    dst[dp + 30 * ds] = (w14 >> 2) & 32767
    dst[dp + 31 * ds] = (w14 >> 17)

@njit(inline="always")
def pack16(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 65535
    v1 = src[sp + 1 * ss] & 65535
    v2 = src[sp + 2 * ss] & 65535
    v3 = src[sp + 3 * ss] & 65535
    v4 = src[sp + 4 * ss] & 65535
    v5 = src[sp + 5 * ss] & 65535
    v6 = src[sp + 6 * ss] & 65535
    v7 = src[sp + 7 * ss] & 65535
    v8 = src[sp + 8 * ss] & 65535
    v9 = src[sp + 9 * ss] & 65535
    v10 = src[sp + 10 * ss] & 65535
    v11 = src[sp + 11 * ss] & 65535
    v12 = src[sp + 12 * ss] & 65535
    v13 = src[sp + 13 * ss] & 65535
    v14 = src[sp + 14 * ss] & 65535
    v15 = src[sp + 15 * ss] & 65535
    v16 = src[sp + 16 * ss] & 65535
    v17 = src[sp + 17 * ss] & 65535
    v18 = src[sp + 18 * ss] & 65535
    v19 = src[sp + 19 * ss] & 65535
    v20 = src[sp + 20 * ss] & 65535
    v21 = src[sp + 21 * ss] & 65535
    v22 = src[sp + 22 * ss] & 65535
    v23 = src[sp + 23 * ss] & 65535
    v24 = src[sp + 24 * ss] & 65535
    v25 = src[sp + 25 * ss] & 65535
    v26 = src[sp + 26 * ss] & 65535
    v27 = src[sp + 27 * ss] & 65535
    v28 = src[sp + 28 * ss] & 65535
    v29 = src[sp + 29 * ss] & 65535
    v30 = src[sp + 30 * ss] & 65535
    v31 = src[sp + 31 * ss] & 65535
    dst[dp + 0 * ds] = (v0 | (v1 << 16)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = (v2 | (v3 << 16)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = (v4 | (v5 << 16)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = (v6 | (v7 << 16)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = (v8 | (v9 << 16)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = (v10 | (v11 << 16)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = (v12 | (v13 << 16)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = (v14 | (v15 << 16)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = (v16 | (v17 << 16)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = (v18 | (v19 << 16)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = (v20 | (v21 << 16)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = (v22 | (v23 << 16)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = (v24 | (v25 << 16)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = (v26 | (v27 << 16)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = (v28 | (v29 << 16)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = (v30 | (v31 << 16)) & 0xFFFFFFFF

@njit(inline="always")
def unpack16(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    dst[dp + 0 * ds] = w0 & 65535
    dst[dp + 1 * ds] = (w0 >> 16)
    dst[dp + 2 * ds] = w1 & 65535
    dst[dp + 3 * ds] = (w1 >> 16)
    dst[dp + 4 * ds] = w2 & 65535
    dst[dp + 5 * ds] = (w2 >> 16)
    dst[dp + 6 * ds] = w3 & 65535
    dst[dp + 7 * ds] = (w3 >> 16)
    dst[dp + 8 * ds] = w4 & 65535
    dst[dp + 9 * ds] = (w4 >> 16)
    dst[dp + 10 * ds] = w5 & 65535
    dst[dp + 11 * ds] = (w5 >> 16)
    dst[dp + 12 * ds] = w6 & 65535
    dst[dp + 13 * ds] = (w6 >> 16)
    dst[dp + 14 * ds] = w7 & 65535
    dst[dp + 15 * ds] = (w7 >> 16)
    dst[dp + 16 * ds] = w8 & 65535
    dst[dp + 17 * ds] = (w8 >> 16)
    dst[dp + 18 * ds] = w9 & 65535
    dst[dp + 19 * ds] = (w9 >> 16)
    dst[dp + 20 * ds] = w10 & 65535
    dst[dp + 21 * ds] = (w10 >> 16)
    dst[dp + 22 * ds] = w11 & 65535
    dst[dp + 23 * ds] = (w11 >> 16)
    dst[dp + 24 * ds] = w12 & 65535
    dst[dp + 25 * ds] = (w12 >> 16)
    dst[dp + 26 * ds] = w13 & 65535
    dst[dp + 27 * ds] = (w13 >> 16)
    dst[dp + 28 * ds] = w14 & 65535
    dst[dp + 29 * ds] = (w14 >> 16)
    dst[dp + 30 * ds] = w15 & 65535
    dst[dp + 31 * ds] = (w15 >> 16)

@njit(inline="always")
def pack17(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 131071
    v1 = src[sp + 1 * ss] & 131071
    v2 = src[sp + 2 * ss] & 131071
    v3 = src[sp + 3 * ss] & 131071
    v4 = src[sp + 4 * ss] & 131071
    v5 = src[sp + 5 * ss] & 131071
    v6 = src[sp + 6 * ss] & 131071
    v7 = src[sp + 7 * ss] & 131071
    v8 = src[sp + 8 * ss] & 131071
    v9 = src[sp + 9 * ss] & 131071
    v10 = src[sp + 10 * ss] & 131071
    v11 = src[sp + 11 * ss] & 131071
    v12 = src[sp + 12 * ss] & 131071
    v13 = src[sp + 13 * ss] & 131071
    v14 = src[sp + 14 * ss] & 131071
    v15 = src[sp + 15 * ss] & 131071
    v16 = src[sp + 16 * ss] & 131071
    v17 = src[sp + 17 * ss] & 131071
    v18 = src[sp + 18 * ss] & 131071
    v19 = src[sp + 19 * ss] & 131071
    v20 = src[sp + 20 * ss] & 131071
    v21 = src[sp + 21 * ss] & 131071
    v22 = src[sp + 22 * ss] & 131071
    v23 = src[sp + 23 * ss] & 131071
    v24 = src[sp + 24 * ss] & 131071
    v25 = src[sp + 25 * ss] & 131071
    v26 = src[sp + 26 * ss] & 131071
    v27 = src[sp + 27 * ss] & 131071
    v28 = src[sp + 28 * ss] & 131071
    v29 = src[sp + 29 * ss] & 131071
    v30 = src[sp + 30 * ss] & 131071
    v31 = src[sp + 31 * ss] & 131071
    dst[dp + 0 * ds] = (v0 | (v1 << 17)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 15) | (v2 << 2) | (v3 << 19)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v3 >> 13) | (v4 << 4) | (v5 << 21)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v5 >> 11) | (v6 << 6) | (v7 << 23)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v7 >> 9) | (v8 << 8) | (v9 << 25)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v9 >> 7) | (v10 << 10) | (v11 << 27)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v11 >> 5) | (v12 << 12) | (v13 << 29)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v13 >> 3) | (v14 << 14) | (v15 << 31)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v15 >> 1) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v16 >> 16) | (v17 << 1) | (v18 << 18)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v18 >> 14) | (v19 << 3) | (v20 << 20)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v20 >> 12) | (v21 << 5) | (v22 << 22)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v22 >> 10) | (v23 << 7) | (v24 << 24)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v24 >> 8) | (v25 << 9) | (v26 << 26)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v26 >> 6) | (v27 << 11) | (v28 << 28)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v28 >> 4) | (v29 << 13) | (v30 << 30)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v30 >> 2) | (v31 << 15)) & 0xFFFFFFFF

@njit(inline="always")
def unpack17(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    dst[dp + 0 * ds] = w0 & 131071
    dst[dp + 1 * ds] = (w0 >> 17) | ((w1 & 3) << 15)
    dst[dp + 2 * ds] = (w1 >> 2) & 131071
    dst[dp + 3 * ds] = (w1 >> 19) | ((w2 & 15) << 13)
    dst[dp + 4 * ds] = (w2 >> 4) & 131071
    dst[dp + 5 * ds] = (w2 >> 21) | ((w3 & 63) << 11)
    dst[dp + 6 * ds] = (w3 >> 6) & 131071
    dst[dp + 7 * ds] = (w3 >> 23) | ((w4 & 255) << 9)
    dst[dp + 8 * ds] = (w4 >> 8) & 131071
    dst[dp + 9 * ds] = (w4 >> 25) | ((w5 & 1023) << 7)
    dst[dp + 10 * ds] = (w5 >> 10) & 131071
    dst[dp + 11 * ds] = (w5 >> 27) | ((w6 & 4095) << 5)
    dst[dp + 12 * ds] = (w6 >> 12) & 131071
    dst[dp + 13 * ds] = (w6 >> 29) | ((w7 & 16383) << 3)
    dst[dp + 14 * ds] = (w7 >> 14) & 131071
    dst[dp + 15 * ds] = (w7 >> 31) | ((w8 & 65535) << 1)
    dst[dp + 16 * ds] = (w8 >> 16) | ((w9 & 1) << 16)
    dst[dp + 17 * ds] = (w9 >> 1) & 131071
    dst[dp + 18 * ds] = (w9 >> 18) | ((w10 & 7) << 14)
    dst[dp + 19 * ds] = (w10 >> 3) & 131071
    dst[dp + 20 * ds] = (w10 >> 20) | ((w11 & 31) << 12)
    dst[dp + 21 * ds] = (w11 >> 5) & 131071
    dst[dp + 22 * ds] = (w11 >> 22) | ((w12 & 127) << 10)
    dst[dp + 23 * ds] = (w12 >> 7) & 131071
    dst[dp + 24 * ds] = (w12 >> 24) | ((w13 & 511) << 8)
    dst[dp + 25 * ds] = (w13 >> 9) & 131071
    dst[dp + 26 * ds] = (w13 >> 26) | ((w14 & 2047) << 6)
    dst[dp + 27 * ds] = (w14 >> 11) & 131071
    dst[dp + 28 * ds] = (w14 >> 28) | ((w15 & 8191) << 4)
    dst[dp + 29 * ds] = (w15 >> 13) & 131071
    dst[dp + 30 * ds] = (w15 >> 30) | ((w16 & 32767) << 2)
    dst[dp + 31 * ds] = (w16 >> 15)

@njit(inline="always")
def pack18(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 262143
    v1 = src[sp + 1 * ss] & 262143
    v2 = src[sp + 2 * ss] & 262143
    v3 = src[sp + 3 * ss] & 262143
    v4 = src[sp + 4 * ss] & 262143
    v5 = src[sp + 5 * ss] & 262143
    v6 = src[sp + 6 * ss] & 262143
    v7 = src[sp + 7 * ss] & 262143
    v8 = src[sp + 8 * ss] & 262143
    v9 = src[sp + 9 * ss] & 262143
    v10 = src[sp + 10 * ss] & 262143
    v11 = src[sp + 11 * ss] & 262143
    v12 = src[sp + 12 * ss] & 262143
    v13 = src[sp + 13 * ss] & 262143
    v14 = src[sp + 14 * ss] & 262143
    v15 = src[sp + 15 * ss] & 262143
    v16 = src[sp + 16 * ss] & 262143
    v17 = src[sp + 17 * ss] & 262143
    v18 = src[sp + 18 * ss] & 262143
    v19 = src[sp + 19 * ss] & 262143
    v20 = src[sp + 20 * ss] & 262143
    v21 = src[sp + 21 * ss] & 262143
    v22 = src[sp + 22 * ss] & 262143
    v23 = src[sp + 23 * ss] & 262143
    v24 = src[sp + 24 * ss] & 262143
    v25 = src[sp + 25 * ss] & 262143
    v26 = src[sp + 26 * ss] & 262143
    v27 = src[sp + 27 * ss] & 262143
    v28 = src[sp + 28 * ss] & 262143
    v29 = src[sp + 29 * ss] & 262143
    v30 = src[sp + 30 * ss] & 262143
    v31 = src[sp + 31 * ss] & 262143
    dst[dp + 0 * ds] = (v0 | (v1 << 18)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 14) | (v2 << 4) | (v3 << 22)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v3 >> 10) | (v4 << 8) | (v5 << 26)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v5 >> 6) | (v6 << 12) | (v7 << 30)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v7 >> 2) | (v8 << 16)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v8 >> 16) | (v9 << 2) | (v10 << 20)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v10 >> 12) | (v11 << 6) | (v12 << 24)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v12 >> 8) | (v13 << 10) | (v14 << 28)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v14 >> 4) | (v15 << 14)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = (v16 | (v17 << 18)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v17 >> 14) | (v18 << 4) | (v19 << 22)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v19 >> 10) | (v20 << 8) | (v21 << 26)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v21 >> 6) | (v22 << 12) | (v23 << 30)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v23 >> 2) | (v24 << 16)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v24 >> 16) | (v25 << 2) | (v26 << 20)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v26 >> 12) | (v27 << 6) | (v28 << 24)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v28 >> 8) | (v29 << 10) | (v30 << 28)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v30 >> 4) | (v31 << 14)) & 0xFFFFFFFF

@njit(inline="always")
def unpack18(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    dst[dp + 0 * ds] = w0 & 262143
    dst[dp + 1 * ds] = (w0 >> 18) | ((w1 & 15) << 14)
    dst[dp + 2 * ds] = (w1 >> 4) & 262143
    dst[dp + 3 * ds] = (w1 >> 22) | ((w2 & 255) << 10)
    dst[dp + 4 * ds] = (w2 >> 8) & 262143
    dst[dp + 5 * ds] = (w2 >> 26) | ((w3 & 4095) << 6)
    dst[dp + 6 * ds] = (w3 >> 12) & 262143
    dst[dp + 7 * ds] = (w3 >> 30) | ((w4 & 65535) << 2)
    dst[dp + 8 * ds] = (w4 >> 16) | ((w5 & 3) << 16)
    dst[dp + 9 * ds] = (w5 >> 2) & 262143
    dst[dp + 10 * ds] = (w5 >> 20) | ((w6 & 63) << 12)
    dst[dp + 11 * ds] = (w6 >> 6) & 262143
    dst[dp + 12 * ds] = (w6 >> 24) | ((w7 & 1023) << 8)
    dst[dp + 13 * ds] = (w7 >> 10) & 262143
    dst[dp + 14 * ds] = (w7 >> 28) | ((w8 & 16383) << 4)
    dst[dp + 15 * ds] = (w8 >> 14)
    dst[dp + 16 * ds] = w9 & 262143
    dst[dp + 17 * ds] = (w9 >> 18) | ((w10 & 15) << 14)
    dst[dp + 18 * ds] = (w10 >> 4) & 262143
    dst[dp + 19 * ds] = (w10 >> 22) | ((w11 & 255) << 10)
    dst[dp + 20 * ds] = (w11 >> 8) & 262143
    dst[dp + 21 * ds] = (w11 >> 26) | ((w12 & 4095) << 6)
    dst[dp + 22 * ds] = (w12 >> 12) & 262143
    dst[dp + 23 * ds] = (w12 >> 30) | ((w13 & 65535) << 2)
    dst[dp + 24 * ds] = (w13 >> 16) | ((w14 & 3) << 16)
    dst[dp + 25 * ds] = (w14 >> 2) & 262143
    dst[dp + 26 * ds] = (w14 >> 20) | ((w15 & 63) << 12)
    dst[dp + 27 * ds] = (w15 >> 6) & 262143
    dst[dp + 28 * ds] = (w15 >> 24) | ((w16 & 1023) << 8)
    dst[dp + 29 * ds] = (w16 >> 10) & 262143
    dst[dp + 30 * ds] = (w16 >> 28) | ((w17 & 16383) << 4)
    dst[dp + 31 * ds] = (w17 >> 14)

@njit(inline="always")
def pack19(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 524287
    v1 = src[sp + 1 * ss] & 524287
    v2 = src[sp + 2 * ss] & 524287
    v3 = src[sp + 3 * ss] & 524287
    v4 = src[sp + 4 * ss] & 524287
    v5 = src[sp + 5 * ss] & 524287
    v6 = src[sp + 6 * ss] & 524287
    v7 = src[sp + 7 * ss] & 524287
    v8 = src[sp + 8 * ss] & 524287
    v9 = src[sp + 9 * ss] & 524287
    v10 = src[sp + 10 * ss] & 524287
    v11 = src[sp + 11 * ss] & 524287
    v12 = src[sp + 12 * ss] & 524287
    v13 = src[sp + 13 * ss] & 524287
    v14 = src[sp + 14 * ss] & 524287
    v15 = src[sp + 15 * ss] & 524287
    v16 = src[sp + 16 * ss] & 524287
    v17 = src[sp + 17 * ss] & 524287
    v18 = src[sp + 18 * ss] & 524287
    v19 = src[sp + 19 * ss] & 524287
    v20 = src[sp + 20 * ss] & 524287
    v21 = src[sp + 21 * ss] & 524287
    v22 = src[sp + 22 * ss] & 524287
    v23 = src[sp + 23 * ss] & 524287
    v24 = src[sp + 24 * ss] & 524287
    v25 = src[sp + 25 * ss] & 524287
    v26 = src[sp + 26 * ss] & 524287
    v27 = src[sp + 27 * ss] & 524287
    v28 = src[sp + 28 * ss] & 524287
    v29 = src[sp + 29 * ss] & 524287
    v30 = src[sp + 30 * ss] & 524287
    v31 = src[sp + 31 * ss] & 524287
    dst[dp + 0 * ds] = (v0 | (v1 << 19)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 13) | (v2 << 6) | (v3 << 25)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v3 >> 7) | (v4 << 12) | (v5 << 31)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v5 >> 1) | (v6 << 18)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v6 >> 14) | (v7 << 5) | (v8 << 24)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v8 >> 8) | (v9 << 11) | (v10 << 30)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v10 >> 2) | (v11 << 17)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v11 >> 15) | (v12 << 4) | (v13 << 23)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v13 >> 9) | (v14 << 10) | (v15 << 29)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v15 >> 3) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v16 >> 16) | (v17 << 3) | (v18 << 22)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v18 >> 10) | (v19 << 9) | (v20 << 28)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v20 >> 4) | (v21 << 15)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v21 >> 17) | (v22 << 2) | (v23 << 21)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v23 >> 11) | (v24 << 8) | (v25 << 27)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v25 >> 5) | (v26 << 14)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v26 >> 18) | (v27 << 1) | (v28 << 20)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v28 >> 12) | (v29 << 7) | (v30 << 26)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v30 >> 6) | (v31 << 13)) & 0xFFFFFFFF

@njit(inline="always")
def unpack19(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    dst[dp + 0 * ds] = w0 & 524287
    dst[dp + 1 * ds] = (w0 >> 19) | ((w1 & 63) << 13)
    dst[dp + 2 * ds] = (w1 >> 6) & 524287
    dst[dp + 3 * ds] = (w1 >> 25) | ((w2 & 4095) << 7)
    dst[dp + 4 * ds] = (w2 >> 12) & 524287
    dst[dp + 5 * ds] = (w2 >> 31) | ((w3 & 262143) << 1)
    dst[dp + 6 * ds] = (w3 >> 18) | ((w4 & 31) << 14)
    dst[dp + 7 * ds] = (w4 >> 5) & 524287
    dst[dp + 8 * ds] = (w4 >> 24) | ((w5 & 2047) << 8)
    dst[dp + 9 * ds] = (w5 >> 11) & 524287
    dst[dp + 10 * ds] = (w5 >> 30) | ((w6 & 131071) << 2)
    dst[dp + 11 * ds] = (w6 >> 17) | ((w7 & 15) << 15)
    dst[dp + 12 * ds] = (w7 >> 4) & 524287
    dst[dp + 13 * ds] = (w7 >> 23) | ((w8 & 1023) << 9)
    dst[dp + 14 * ds] = (w8 >> 10) & 524287
    dst[dp + 15 * ds] = (w8 >> 29) | ((w9 & 65535) << 3)
    dst[dp + 16 * ds] = (w9 >> 16) | ((w10 & 7) << 16)
    dst[dp + 17 * ds] = (w10 >> 3) & 524287
    dst[dp + 18 * ds] = (w10 >> 22) | ((w11 & 511) << 10)
    dst[dp + 19 * ds] = (w11 >> 9) & 524287
    dst[dp + 20 * ds] = (w11 >> 28) | ((w12 & 32767) << 4)
    dst[dp + 21 * ds] = (w12 >> 15) | ((w13 & 3) << 17)
    dst[dp + 22 * ds] = (w13 >> 2) & 524287
    dst[dp + 23 * ds] = (w13 >> 21) | ((w14 & 255) << 11)
    dst[dp + 24 * ds] = (w14 >> 8) & 524287
    dst[dp + 25 * ds] = (w14 >> 27) | ((w15 & 16383) << 5)
    dst[dp + 26 * ds] = (w15 >> 14) | ((w16 & 1) << 18)
    dst[dp + 27 * ds] = (w16 >> 1) & 524287
    dst[dp + 28 * ds] = (w16 >> 20) | ((w17 & 127) << 12)
    dst[dp + 29 * ds] = (w17 >> 7) & 524287
    dst[dp + 30 * ds] = (w17 >> 26) | ((w18 & 8191) << 6)
    dst[dp + 31 * ds] = (w18 >> 13)

@njit(inline="always")
def pack20(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 1048575
    v1 = src[sp + 1 * ss] & 1048575
    v2 = src[sp + 2 * ss] & 1048575
    v3 = src[sp + 3 * ss] & 1048575
    v4 = src[sp + 4 * ss] & 1048575
    v5 = src[sp + 5 * ss] & 1048575
    v6 = src[sp + 6 * ss] & 1048575
    v7 = src[sp + 7 * ss] & 1048575
    v8 = src[sp + 8 * ss] & 1048575
    v9 = src[sp + 9 * ss] & 1048575
    v10 = src[sp + 10 * ss] & 1048575
    v11 = src[sp + 11 * ss] & 1048575
    v12 = src[sp + 12 * ss] & 1048575
    v13 = src[sp + 13 * ss] & 1048575
    v14 = src[sp + 14 * ss] & 1048575
    v15 = src[sp + 15 * ss] & 1048575
    v16 = src[sp + 16 * ss] & 1048575
    v17 = src[sp + 17 * ss] & 1048575
    v18 = src[sp + 18 * ss] & 1048575
    v19 = src[sp + 19 * ss] & 1048575
    v20 = src[sp + 20 * ss] & 1048575
    v21 = src[sp + 21 * ss] & 1048575
    v22 = src[sp + 22 * ss] & 1048575
    v23 = src[sp + 23 * ss] & 1048575
    v24 = src[sp + 24 * ss] & 1048575
    v25 = src[sp + 25 * ss] & 1048575
    v26 = src[sp + 26 * ss] & 1048575
    v27 = src[sp + 27 * ss] & 1048575
    v28 = src[sp + 28 * ss] & 1048575
    v29 = src[sp + 29 * ss] & 1048575
    v30 = src[sp + 30 * ss] & 1048575
    v31 = src[sp + 31 * ss] & 1048575
    dst[dp + 0 * ds] = (v0 | (v1 << 20)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 12) | (v2 << 8) | (v3 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v3 >> 4) | (v4 << 16)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v4 >> 16) | (v5 << 4) | (v6 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v6 >> 8) | (v7 << 12)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = (v8 | (v9 << 20)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v9 >> 12) | (v10 << 8) | (v11 << 28)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v11 >> 4) | (v12 << 16)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v12 >> 16) | (v13 << 4) | (v14 << 24)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v14 >> 8) | (v15 << 12)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = (v16 | (v17 << 20)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v17 >> 12) | (v18 << 8) | (v19 << 28)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v19 >> 4) | (v20 << 16)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v20 >> 16) | (v21 << 4) | (v22 << 24)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v22 >> 8) | (v23 << 12)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = (v24 | (v25 << 20)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v25 >> 12) | (v26 << 8) | (v27 << 28)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v27 >> 4) | (v28 << 16)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v28 >> 16) | (v29 << 4) | (v30 << 24)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v30 >> 8) | (v31 << 12)) & 0xFFFFFFFF

@njit(inline="always")
def unpack20(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    dst[dp + 0 * ds] = w0 & 1048575
    dst[dp + 1 * ds] = (w0 >> 20) | ((w1 & 255) << 12)
    dst[dp + 2 * ds] = (w1 >> 8) & 1048575
    dst[dp + 3 * ds] = (w1 >> 28) | ((w2 & 65535) << 4)
    dst[dp + 4 * ds] = (w2 >> 16) | ((w3 & 15) << 16)
    dst[dp + 5 * ds] = (w3 >> 4) & 1048575
    dst[dp + 6 * ds] = (w3 >> 24) | ((w4 & 4095) << 8)
    dst[dp + 7 * ds] = (w4 >> 12)
    dst[dp + 8 * ds] = w5 & 1048575
    dst[dp + 9 * ds] = (w5 >> 20) | ((w6 & 255) << 12)
    dst[dp + 10 * ds] = (w6 >> 8) & 1048575
    dst[dp + 11 * ds] = (w6 >> 28) | ((w7 & 65535) << 4)
    dst[dp + 12 * ds] = (w7 >> 16) | ((w8 & 15) << 16)
    dst[dp + 13 * ds] = (w8 >> 4) & 1048575
    dst[dp + 14 * ds] = (w8 >> 24) | ((w9 & 4095) << 8)
    dst[dp + 15 * ds] = (w9 >> 12)
    dst[dp + 16 * ds] = w10 & 1048575
    dst[dp + 17 * ds] = (w10 >> 20) | ((w11 & 255) << 12)
    dst[dp + 18 * ds] = (w11 >> 8) & 1048575
    dst[dp + 19 * ds] = (w11 >> 28) | ((w12 & 65535) << 4)
    dst[dp + 20 * ds] = (w12 >> 16) | ((w13 & 15) << 16)
    dst[dp + 21 * ds] = (w13 >> 4) & 1048575
    dst[dp + 22 * ds] = (w13 >> 24) | ((w14 & 4095) << 8)
    dst[dp + 23 * ds] = (w14 >> 12)
    dst[dp + 24 * ds] = w15 & 1048575
    dst[dp + 25 * ds] = (w15 >> 20) | ((w16 & 255) << 12)
    dst[dp + 26 * ds] = (w16 >> 8) & 1048575
    dst[dp + 27 * ds] = (w16 >> 28) | ((w17 & 65535) << 4)
    dst[dp + 28 * ds] = (w17 >> 16) | ((w18 & 15) << 16)
    dst[dp + 29 * ds] = (w18 >> 4) & 1048575
    dst[dp + 30 * ds] = (w18 >> 24) | ((w19 & 4095) << 8)
    dst[dp + 31 * ds] = (w19 >> 12)

@njit(inline="always")
def pack21(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 2097151
    v1 = src[sp + 1 * ss] & 2097151
    v2 = src[sp + 2 * ss] & 2097151
    v3 = src[sp + 3 * ss] & 2097151
    v4 = src[sp + 4 * ss] & 2097151
    v5 = src[sp + 5 * ss] & 2097151
    v6 = src[sp + 6 * ss] & 2097151
    v7 = src[sp + 7 * ss] & 2097151
    v8 = src[sp + 8 * ss] & 2097151
    v9 = src[sp + 9 * ss] & 2097151
    v10 = src[sp + 10 * ss] & 2097151
    v11 = src[sp + 11 * ss] & 2097151
    v12 = src[sp + 12 * ss] & 2097151
    v13 = src[sp + 13 * ss] & 2097151
    v14 = src[sp + 14 * ss] & 2097151
    v15 = src[sp + 15 * ss] & 2097151
    v16 = src[sp + 16 * ss] & 2097151
    v17 = src[sp + 17 * ss] & 2097151
    v18 = src[sp + 18 * ss] & 2097151
    v19 = src[sp + 19 * ss] & 2097151
    v20 = src[sp + 20 * ss] & 2097151
    v21 = src[sp + 21 * ss] & 2097151
    v22 = src[sp + 22 * ss] & 2097151
    v23 = src[sp + 23 * ss] & 2097151
    v24 = src[sp + 24 * ss] & 2097151
    v25 = src[sp + 25 * ss] & 2097151
    v26 = src[sp + 26 * ss] & 2097151
    v27 = src[sp + 27 * ss] & 2097151
    v28 = src[sp + 28 * ss] & 2097151
    v29 = src[sp + 29 * ss] & 2097151
    v30 = src[sp + 30 * ss] & 2097151
    v31 = src[sp + 31 * ss] & 2097151
    dst[dp + 0 * ds] = (v0 | (v1 << 21)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 11) | (v2 << 10) | (v3 << 31)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v3 >> 1) | (v4 << 20)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v4 >> 12) | (v5 << 9) | (v6 << 30)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v6 >> 2) | (v7 << 19)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v7 >> 13) | (v8 << 8) | (v9 << 29)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v9 >> 3) | (v10 << 18)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v10 >> 14) | (v11 << 7) | (v12 << 28)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v12 >> 4) | (v13 << 17)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v13 >> 15) | (v14 << 6) | (v15 << 27)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v15 >> 5) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v16 >> 16) | (v17 << 5) | (v18 << 26)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v18 >> 6) | (v19 << 15)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v19 >> 17) | (v20 << 4) | (v21 << 25)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v21 >> 7) | (v22 << 14)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v22 >> 18) | (v23 << 3) | (v24 << 24)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v24 >> 8) | (v25 << 13)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v25 >> 19) | (v26 << 2) | (v27 << 23)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v27 >> 9) | (v28 << 12)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v28 >> 20) | (v29 << 1) | (v30 << 22)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v30 >> 10) | (v31 << 11)) & 0xFFFFFFFF

@njit(inline="always")
def unpack21(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    dst[dp + 0 * ds] = w0 & 2097151
    dst[dp + 1 * ds] = (w0 >> 21) | ((w1 & 1023) << 11)
    dst[dp + 2 * ds] = (w1 >> 10) & 2097151
    dst[dp + 3 * ds] = (w1 >> 31) | ((w2 & 1048575) << 1)
    dst[dp + 4 * ds] = (w2 >> 20) | ((w3 & 511) << 12)
    dst[dp + 5 * ds] = (w3 >> 9) & 2097151
    dst[dp + 6 * ds] = (w3 >> 30) | ((w4 & 524287) << 2)
    dst[dp + 7 * ds] = (w4 >> 19) | ((w5 & 255) << 13)
    dst[dp + 8 * ds] = (w5 >> 8) & 2097151
    dst[dp + 9 * ds] = (w5 >> 29) | ((w6 & 262143) << 3)
    dst[dp + 10 * ds] = (w6 >> 18) | ((w7 & 127) << 14)
    dst[dp + 11 * ds] = (w7 >> 7) & 2097151
    dst[dp + 12 * ds] = (w7 >> 28) | ((w8 & 131071) << 4)
    dst[dp + 13 * ds] = (w8 >> 17) | ((w9 & 63) << 15)
    dst[dp + 14 * ds] = (w9 >> 6) & 2097151
    dst[dp + 15 * ds] = (w9 >> 27) | ((w10 & 65535) << 5)
    dst[dp + 16 * ds] = (w10 >> 16) | ((w11 & 31) << 16)
    dst[dp + 17 * ds] = (w11 >> 5) & 2097151
    dst[dp + 18 * ds] = (w11 >> 26) | ((w12 & 32767) << 6)
    dst[dp + 19 * ds] = (w12 >> 15) | ((w13 & 15) << 17)
    dst[dp + 20 * ds] = (w13 >> 4) & 2097151
    dst[dp + 21 * ds] = (w13 >> 25) | ((w14 & 16383) << 7)
    dst[dp + 22 * ds] = (w14 >> 14) | ((w15 & 7) << 18)
    dst[dp + 23 * ds] = (w15 >> 3) & 2097151
    dst[dp + 24 * ds] = (w15 >> 24) | ((w16 & 8191) << 8)
    dst[dp + 25 * ds] = (w16 >> 13) | ((w17 & 3) << 19)
    dst[dp + 26 * ds] = (w17 >> 2) & 2097151
    dst[dp + 27 * ds] = (w17 >> 23) | ((w18 & 4095) << 9)
    dst[dp + 28 * ds] = (w18 >> 12) | ((w19 & 1) << 20)
    dst[dp + 29 * ds] = (w19 >> 1) & 2097151
    dst[dp + 30 * ds] = (w19 >> 22) | ((w20 & 2047) << 10)
    dst[dp + 31 * ds] = (w20 >> 11)

@njit(inline="always")
def pack22(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 4194303
    v1 = src[sp + 1 * ss] & 4194303
    v2 = src[sp + 2 * ss] & 4194303
    v3 = src[sp + 3 * ss] & 4194303
    v4 = src[sp + 4 * ss] & 4194303
    v5 = src[sp + 5 * ss] & 4194303
    v6 = src[sp + 6 * ss] & 4194303
    v7 = src[sp + 7 * ss] & 4194303
    v8 = src[sp + 8 * ss] & 4194303
    v9 = src[sp + 9 * ss] & 4194303
    v10 = src[sp + 10 * ss] & 4194303
    v11 = src[sp + 11 * ss] & 4194303
    v12 = src[sp + 12 * ss] & 4194303
    v13 = src[sp + 13 * ss] & 4194303
    v14 = src[sp + 14 * ss] & 4194303
    v15 = src[sp + 15 * ss] & 4194303
    v16 = src[sp + 16 * ss] & 4194303
    v17 = src[sp + 17 * ss] & 4194303
    v18 = src[sp + 18 * ss] & 4194303
    v19 = src[sp + 19 * ss] & 4194303
    v20 = src[sp + 20 * ss] & 4194303
    v21 = src[sp + 21 * ss] & 4194303
    v22 = src[sp + 22 * ss] & 4194303
    v23 = src[sp + 23 * ss] & 4194303
    v24 = src[sp + 24 * ss] & 4194303
    v25 = src[sp + 25 * ss] & 4194303
    v26 = src[sp + 26 * ss] & 4194303
    v27 = src[sp + 27 * ss] & 4194303
    v28 = src[sp + 28 * ss] & 4194303
    v29 = src[sp + 29 * ss] & 4194303
    v30 = src[sp + 30 * ss] & 4194303
    v31 = src[sp + 31 * ss] & 4194303
    dst[dp + 0 * ds] = (v0 | (v1 << 22)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 10) | (v2 << 12)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 20) | (v3 << 2) | (v4 << 24)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v4 >> 8) | (v5 << 14)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v5 >> 18) | (v6 << 4) | (v7 << 26)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v7 >> 6) | (v8 << 16)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v8 >> 16) | (v9 << 6) | (v10 << 28)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v10 >> 4) | (v11 << 18)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v11 >> 14) | (v12 << 8) | (v13 << 30)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v13 >> 2) | (v14 << 20)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v14 >> 12) | (v15 << 10)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = (v16 | (v17 << 22)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v17 >> 10) | (v18 << 12)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v18 >> 20) | (v19 << 2) | (v20 << 24)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v20 >> 8) | (v21 << 14)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v21 >> 18) | (v22 << 4) | (v23 << 26)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v23 >> 6) | (v24 << 16)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v24 >> 16) | (v25 << 6) | (v26 << 28)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v26 >> 4) | (v27 << 18)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v27 >> 14) | (v28 << 8) | (v29 << 30)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v29 >> 2) | (v30 << 20)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v30 >> 12) | (v31 << 10)) & 0xFFFFFFFF

@njit(inline="always")
def unpack22(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    dst[dp + 0 * ds] = w0 & 4194303
    dst[dp + 1 * ds] = (w0 >> 22) | ((w1 & 4095) << 10)
    dst[dp + 2 * ds] = (w1 >> 12) | ((w2 & 3) << 20)
    dst[dp + 3 * ds] = (w2 >> 2) & 4194303
    dst[dp + 4 * ds] = (w2 >> 24) | ((w3 & 16383) << 8)
    dst[dp + 5 * ds] = (w3 >> 14) | ((w4 & 15) << 18)
    dst[dp + 6 * ds] = (w4 >> 4) & 4194303
    dst[dp + 7 * ds] = (w4 >> 26) | ((w5 & 65535) << 6)
    dst[dp + 8 * ds] = (w5 >> 16) | ((w6 & 63) << 16)
    dst[dp + 9 * ds] = (w6 >> 6) & 4194303
    dst[dp + 10 * ds] = (w6 >> 28) | ((w7 & 262143) << 4)
    dst[dp + 11 * ds] = (w7 >> 18) | ((w8 & 255) << 14)
    dst[dp + 12 * ds] = (w8 >> 8) & 4194303
    dst[dp + 13 * ds] = (w8 >> 30) | ((w9 & 1048575) << 2)
    dst[dp + 14 * ds] = (w9 >> 20) | ((w10 & 1023) << 12)
    dst[dp + 15 * ds] = (w10 >> 10)
    dst[dp + 16 * ds] = w11 & 4194303
    dst[dp + 17 * ds] = (w11 >> 22) | ((w12 & 4095) << 10)
    dst[dp + 18 * ds] = (w12 >> 12) | ((w13 & 3) << 20)
    dst[dp + 19 * ds] = (w13 >> 2) & 4194303
    dst[dp + 20 * ds] = (w13 >> 24) | ((w14 & 16383) << 8)
    dst[dp + 21 * ds] = (w14 >> 14) | ((w15 & 15) << 18)
    dst[dp + 22 * ds] = (w15 >> 4) & 4194303
    dst[dp + 23 * ds] = (w15 >> 26) | ((w16 & 65535) << 6)
    dst[dp + 24 * ds] = (w16 >> 16) | ((w17 & 63) << 16)
    dst[dp + 25 * ds] = (w17 >> 6) & 4194303
    dst[dp + 26 * ds] = (w17 >> 28) | ((w18 & 262143) << 4)
    dst[dp + 27 * ds] = (w18 >> 18) | ((w19 & 255) << 14)
    dst[dp + 28 * ds] = (w19 >> 8) & 4194303
    dst[dp + 29 * ds] = (w19 >> 30) | ((w20 & 1048575) << 2)
    dst[dp + 30 * ds] = (w20 >> 20) | ((w21 & 1023) << 12)
    dst[dp + 31 * ds] = (w21 >> 10)

@njit(inline="always")
def pack23(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 8388607
    v1 = src[sp + 1 * ss] & 8388607
    v2 = src[sp + 2 * ss] & 8388607
    v3 = src[sp + 3 * ss] & 8388607
    v4 = src[sp + 4 * ss] & 8388607
    v5 = src[sp + 5 * ss] & 8388607
    v6 = src[sp + 6 * ss] & 8388607
    v7 = src[sp + 7 * ss] & 8388607
    v8 = src[sp + 8 * ss] & 8388607
    v9 = src[sp + 9 * ss] & 8388607
    v10 = src[sp + 10 * ss] & 8388607
    v11 = src[sp + 11 * ss] & 8388607
    v12 = src[sp + 12 * ss] & 8388607
    v13 = src[sp + 13 * ss] & 8388607
    v14 = src[sp + 14 * ss] & 8388607
    v15 = src[sp + 15 * ss] & 8388607
    v16 = src[sp + 16 * ss] & 8388607
    v17 = src[sp + 17 * ss] & 8388607
    v18 = src[sp + 18 * ss] & 8388607
    v19 = src[sp + 19 * ss] & 8388607
    v20 = src[sp + 20 * ss] & 8388607
    v21 = src[sp + 21 * ss] & 8388607
    v22 = src[sp + 22 * ss] & 8388607
    v23 = src[sp + 23 * ss] & 8388607
    v24 = src[sp + 24 * ss] & 8388607
    v25 = src[sp + 25 * ss] & 8388607
    v26 = src[sp + 26 * ss] & 8388607
    v27 = src[sp + 27 * ss] & 8388607
    v28 = src[sp + 28 * ss] & 8388607
    v29 = src[sp + 29 * ss] & 8388607
    v30 = src[sp + 30 * ss] & 8388607
    v31 = src[sp + 31 * ss] & 8388607
    dst[dp + 0 * ds] = (v0 | (v1 << 23)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 9) | (v2 << 14)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 18) | (v3 << 5) | (v4 << 28)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v4 >> 4) | (v5 << 19)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v5 >> 13) | (v6 << 10)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v6 >> 22) | (v7 << 1) | (v8 << 24)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v8 >> 8) | (v9 << 15)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v9 >> 17) | (v10 << 6) | (v11 << 29)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v11 >> 3) | (v12 << 20)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v12 >> 12) | (v13 << 11)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v13 >> 21) | (v14 << 2) | (v15 << 25)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v15 >> 7) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v16 >> 16) | (v17 << 7) | (v18 << 30)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v18 >> 2) | (v19 << 21)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v19 >> 11) | (v20 << 12)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v20 >> 20) | (v21 << 3) | (v22 << 26)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v22 >> 6) | (v23 << 17)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v23 >> 15) | (v24 << 8) | (v25 << 31)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v25 >> 1) | (v26 << 22)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v26 >> 10) | (v27 << 13)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v27 >> 19) | (v28 << 4) | (v29 << 27)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v29 >> 5) | (v30 << 18)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v30 >> 14) | (v31 << 9)) & 0xFFFFFFFF

@njit(inline="always")
def unpack23(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    dst[dp + 0 * ds] = w0 & 8388607
    dst[dp + 1 * ds] = (w0 >> 23) | ((w1 & 16383) << 9)
    dst[dp + 2 * ds] = (w1 >> 14) | ((w2 & 31) << 18)
    dst[dp + 3 * ds] = (w2 >> 5) & 8388607
    dst[dp + 4 * ds] = (w2 >> 28) | ((w3 & 524287) << 4)
    dst[dp + 5 * ds] = (w3 >> 19) | ((w4 & 1023) << 13)
    dst[dp + 6 * ds] = (w4 >> 10) | ((w5 & 1) << 22)
    dst[dp + 7 * ds] = (w5 >> 1) & 8388607
    dst[dp + 8 * ds] = (w5 >> 24) | ((w6 & 32767) << 8)
    dst[dp + 9 * ds] = (w6 >> 15) | ((w7 & 63) << 17)
    dst[dp + 10 * ds] = (w7 >> 6) & 8388607
    dst[dp + 11 * ds] = (w7 >> 29) | ((w8 & 1048575) << 3)
    dst[dp + 12 * ds] = (w8 >> 20) | ((w9 & 2047) << 12)
    dst[dp + 13 * ds] = (w9 >> 11) | ((w10 & 3) << 21)
    dst[dp + 14 * ds] = (w10 >> 2) & 8388607
    dst[dp + 15 * ds] = (w10 >> 25) | ((w11 & 65535) << 7)
    dst[dp + 16 * ds] = (w11 >> 16) | ((w12 & 127) << 16)
    dst[dp + 17 * ds] = (w12 >> 7) & 8388607
    dst[dp + 18 * ds] = (w12 >> 30) | ((w13 & 2097151) << 2)
    dst[dp + 19 * ds] = (w13 >> 21) | ((w14 & 4095) << 11)
    dst[dp + 20 * ds] = (w14 >> 12) | ((w15 & 7) << 20)
    dst[dp + 21 * ds] = (w15 >> 3) & 8388607
    dst[dp + 22 * ds] = (w15 >> 26) | ((w16 & 131071) << 6)
    dst[dp + 23 * ds] = (w16 >> 17) | ((w17 & 255) << 15)
    dst[dp + 24 * ds] = (w17 >> 8) & 8388607
    dst[dp + 25 * ds] = (w17 >> 31) | ((w18 & 4194303) << 1)
    dst[dp + 26 * ds] = (w18 >> 22) | ((w19 & 8191) << 10)
    dst[dp + 27 * ds] = (w19 >> 13) | ((w20 & 15) << 19)
    dst[dp + 28 * ds] = (w20 >> 4) & 8388607
    dst[dp + 29 * ds] = (w20 >> 27) | ((w21 & 262143) << 5)
    dst[dp + 30 * ds] = (w21 >> 18) | ((w22 & 511) << 14)
    dst[dp + 31 * ds] = (w22 >> 9)

@njit(inline="always")
def pack24(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 16777215
    v1 = src[sp + 1 * ss] & 16777215
    v2 = src[sp + 2 * ss] & 16777215
    v3 = src[sp + 3 * ss] & 16777215
    v4 = src[sp + 4 * ss] & 16777215
    v5 = src[sp + 5 * ss] & 16777215
    v6 = src[sp + 6 * ss] & 16777215
    v7 = src[sp + 7 * ss] & 16777215
    v8 = src[sp + 8 * ss] & 16777215
    v9 = src[sp + 9 * ss] & 16777215
    v10 = src[sp + 10 * ss] & 16777215
    v11 = src[sp + 11 * ss] & 16777215
    v12 = src[sp + 12 * ss] & 16777215
    v13 = src[sp + 13 * ss] & 16777215
    v14 = src[sp + 14 * ss] & 16777215
    v15 = src[sp + 15 * ss] & 16777215
    v16 = src[sp + 16 * ss] & 16777215
    v17 = src[sp + 17 * ss] & 16777215
    v18 = src[sp + 18 * ss] & 16777215
    v19 = src[sp + 19 * ss] & 16777215
    v20 = src[sp + 20 * ss] & 16777215
    v21 = src[sp + 21 * ss] & 16777215
    v22 = src[sp + 22 * ss] & 16777215
    v23 = src[sp + 23 * ss] & 16777215
    v24 = src[sp + 24 * ss] & 16777215
    v25 = src[sp + 25 * ss] & 16777215
    v26 = src[sp + 26 * ss] & 16777215
    v27 = src[sp + 27 * ss] & 16777215
    v28 = src[sp + 28 * ss] & 16777215
    v29 = src[sp + 29 * ss] & 16777215
    v30 = src[sp + 30 * ss] & 16777215
    v31 = src[sp + 31 * ss] & 16777215
    dst[dp + 0 * ds] = (v0 | (v1 << 24)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 8) | (v2 << 16)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 16) | (v3 << 8)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = (v4 | (v5 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v5 >> 8) | (v6 << 16)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v6 >> 16) | (v7 << 8)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = (v8 | (v9 << 24)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v9 >> 8) | (v10 << 16)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v10 >> 16) | (v11 << 8)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = (v12 | (v13 << 24)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v13 >> 8) | (v14 << 16)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v14 >> 16) | (v15 << 8)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = (v16 | (v17 << 24)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v17 >> 8) | (v18 << 16)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v18 >> 16) | (v19 << 8)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = (v20 | (v21 << 24)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v21 >> 8) | (v22 << 16)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v22 >> 16) | (v23 << 8)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = (v24 | (v25 << 24)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v25 >> 8) | (v26 << 16)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v26 >> 16) | (v27 << 8)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = (v28 | (v29 << 24)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v29 >> 8) | (v30 << 16)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v30 >> 16) | (v31 << 8)) & 0xFFFFFFFF

@njit(inline="always")
def unpack24(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    dst[dp + 0 * ds] = w0 & 16777215
    dst[dp + 1 * ds] = (w0 >> 24) | ((w1 & 65535) << 8)
    dst[dp + 2 * ds] = (w1 >> 16) | ((w2 & 255) << 16)
    dst[dp + 3 * ds] = (w2 >> 8)
    dst[dp + 4 * ds] = w3 & 16777215
    dst[dp + 5 * ds] = (w3 >> 24) | ((w4 & 65535) << 8)
    dst[dp + 6 * ds] = (w4 >> 16) | ((w5 & 255) << 16)
    dst[dp + 7 * ds] = (w5 >> 8)
    dst[dp + 8 * ds] = w6 & 16777215
    dst[dp + 9 * ds] = (w6 >> 24) | ((w7 & 65535) << 8)
    dst[dp + 10 * ds] = (w7 >> 16) | ((w8 & 255) << 16)
    dst[dp + 11 * ds] = (w8 >> 8)
    dst[dp + 12 * ds] = w9 & 16777215
    dst[dp + 13 * ds] = (w9 >> 24) | ((w10 & 65535) << 8)
    dst[dp + 14 * ds] = (w10 >> 16) | ((w11 & 255) << 16)
    dst[dp + 15 * ds] = (w11 >> 8)
    dst[dp + 16 * ds] = w12 & 16777215
    dst[dp + 17 * ds] = (w12 >> 24) | ((w13 & 65535) << 8)
    dst[dp + 18 * ds] = (w13 >> 16) | ((w14 & 255) << 16)
    dst[dp + 19 * ds] = (w14 >> 8)
    dst[dp + 20 * ds] = w15 & 16777215
    dst[dp + 21 * ds] = (w15 >> 24) | ((w16 & 65535) << 8)
    dst[dp + 22 * ds] = (w16 >> 16) | ((w17 & 255) << 16)
    dst[dp + 23 * ds] = (w17 >> 8)
    dst[dp + 24 * ds] = w18 & 16777215
    dst[dp + 25 * ds] = (w18 >> 24) | ((w19 & 65535) << 8)
    dst[dp + 26 * ds] = (w19 >> 16) | ((w20 & 255) << 16)
    dst[dp + 27 * ds] = (w20 >> 8)
    dst[dp + 28 * ds] = w21 & 16777215
    dst[dp + 29 * ds] = (w21 >> 24) | ((w22 & 65535) << 8)
    dst[dp + 30 * ds] = (w22 >> 16) | ((w23 & 255) << 16)
    dst[dp + 31 * ds] = (w23 >> 8)

@njit(inline="always")
def pack25(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 33554431
    v1 = src[sp + 1 * ss] & 33554431
    v2 = src[sp + 2 * ss] & 33554431
    v3 = src[sp + 3 * ss] & 33554431
    v4 = src[sp + 4 * ss] & 33554431
    v5 = src[sp + 5 * ss] & 33554431
    v6 = src[sp + 6 * ss] & 33554431
    v7 = src[sp + 7 * ss] & 33554431
    v8 = src[sp + 8 * ss] & 33554431
    v9 = src[sp + 9 * ss] & 33554431
    v10 = src[sp + 10 * ss] & 33554431
    v11 = src[sp + 11 * ss] & 33554431
    v12 = src[sp + 12 * ss] & 33554431
    v13 = src[sp + 13 * ss] & 33554431
    v14 = src[sp + 14 * ss] & 33554431
    v15 = src[sp + 15 * ss] & 33554431
    v16 = src[sp + 16 * ss] & 33554431
    v17 = src[sp + 17 * ss] & 33554431
    v18 = src[sp + 18 * ss] & 33554431
    v19 = src[sp + 19 * ss] & 33554431
    v20 = src[sp + 20 * ss] & 33554431
    v21 = src[sp + 21 * ss] & 33554431
    v22 = src[sp + 22 * ss] & 33554431
    v23 = src[sp + 23 * ss] & 33554431
    v24 = src[sp + 24 * ss] & 33554431
    v25 = src[sp + 25 * ss] & 33554431
    v26 = src[sp + 26 * ss] & 33554431
    v27 = src[sp + 27 * ss] & 33554431
    v28 = src[sp + 28 * ss] & 33554431
    v29 = src[sp + 29 * ss] & 33554431
    v30 = src[sp + 30 * ss] & 33554431
    v31 = src[sp + 31 * ss] & 33554431
    dst[dp + 0 * ds] = (v0 | (v1 << 25)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 7) | (v2 << 18)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 14) | (v3 << 11)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 21) | (v4 << 4) | (v5 << 29)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v5 >> 3) | (v6 << 22)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v6 >> 10) | (v7 << 15)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v7 >> 17) | (v8 << 8)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v8 >> 24) | (v9 << 1) | (v10 << 26)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v10 >> 6) | (v11 << 19)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v11 >> 13) | (v12 << 12)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v12 >> 20) | (v13 << 5) | (v14 << 30)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v14 >> 2) | (v15 << 23)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v15 >> 9) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v16 >> 16) | (v17 << 9)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v17 >> 23) | (v18 << 2) | (v19 << 27)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v19 >> 5) | (v20 << 20)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v20 >> 12) | (v21 << 13)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v21 >> 19) | (v22 << 6) | (v23 << 31)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v23 >> 1) | (v24 << 24)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v24 >> 8) | (v25 << 17)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v25 >> 15) | (v26 << 10)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v26 >> 22) | (v27 << 3) | (v28 << 28)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v28 >> 4) | (v29 << 21)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v29 >> 11) | (v30 << 14)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v30 >> 18) | (v31 << 7)) & 0xFFFFFFFF

@njit(inline="always")
def unpack25(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    dst[dp + 0 * ds] = w0 & 33554431
    dst[dp + 1 * ds] = (w0 >> 25) | ((w1 & 262143) << 7)
    dst[dp + 2 * ds] = (w1 >> 18) | ((w2 & 2047) << 14)
    dst[dp + 3 * ds] = (w2 >> 11) | ((w3 & 15) << 21)
    dst[dp + 4 * ds] = (w3 >> 4) & 33554431
    dst[dp + 5 * ds] = (w3 >> 29) | ((w4 & 4194303) << 3)
    dst[dp + 6 * ds] = (w4 >> 22) | ((w5 & 32767) << 10)
    dst[dp + 7 * ds] = (w5 >> 15) | ((w6 & 255) << 17)
    dst[dp + 8 * ds] = (w6 >> 8) | ((w7 & 1) << 24)
    dst[dp + 9 * ds] = (w7 >> 1) & 33554431
    dst[dp + 10 * ds] = (w7 >> 26) | ((w8 & 524287) << 6)
    dst[dp + 11 * ds] = (w8 >> 19) | ((w9 & 4095) << 13)
    dst[dp + 12 * ds] = (w9 >> 12) | ((w10 & 31) << 20)
    dst[dp + 13 * ds] = (w10 >> 5) & 33554431
    dst[dp + 14 * ds] = (w10 >> 30) | ((w11 & 8388607) << 2)
    dst[dp + 15 * ds] = (w11 >> 23) | ((w12 & 65535) << 9)
    dst[dp + 16 * ds] = (w12 >> 16) | ((w13 & 511) << 16)
    dst[dp + 17 * ds] = (w13 >> 9) | ((w14 & 3) << 23)
    dst[dp + 18 * ds] = (w14 >> 2) & 33554431
    dst[dp + 19 * ds] = (w14 >> 27) | ((w15 & 1048575) << 5)
    dst[dp + 20 * ds] = (w15 >> 20) | ((w16 & 8191) << 12)
    dst[dp + 21 * ds] = (w16 >> 13) | ((w17 & 63) << 19)
    dst[dp + 22 * ds] = (w17 >> 6) & 33554431
    dst[dp + 23 * ds] = (w17 >> 31) | ((w18 & 16777215) << 1)
    dst[dp + 24 * ds] = (w18 >> 24) | ((w19 & 131071) << 8)
    dst[dp + 25 * ds] = (w19 >> 17) | ((w20 & 1023) << 15)
    dst[dp + 26 * ds] = (w20 >> 10) | ((w21 & 7) << 22)
    dst[dp + 27 * ds] = (w21 >> 3) & 33554431
    dst[dp + 28 * ds] = (w21 >> 28) | ((w22 & 2097151) << 4)
    dst[dp + 29 * ds] = (w22 >> 21) | ((w23 & 16383) << 11)
    dst[dp + 30 * ds] = (w23 >> 14) | ((w24 & 127) << 18)
    dst[dp + 31 * ds] = (w24 >> 7)

@njit(inline="always")
def pack26(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 67108863
    v1 = src[sp + 1 * ss] & 67108863
    v2 = src[sp + 2 * ss] & 67108863
    v3 = src[sp + 3 * ss] & 67108863
    v4 = src[sp + 4 * ss] & 67108863
    v5 = src[sp + 5 * ss] & 67108863
    v6 = src[sp + 6 * ss] & 67108863
    v7 = src[sp + 7 * ss] & 67108863
    v8 = src[sp + 8 * ss] & 67108863
    v9 = src[sp + 9 * ss] & 67108863
    v10 = src[sp + 10 * ss] & 67108863
    v11 = src[sp + 11 * ss] & 67108863
    v12 = src[sp + 12 * ss] & 67108863
    v13 = src[sp + 13 * ss] & 67108863
    v14 = src[sp + 14 * ss] & 67108863
    v15 = src[sp + 15 * ss] & 67108863
    v16 = src[sp + 16 * ss] & 67108863
    v17 = src[sp + 17 * ss] & 67108863
    v18 = src[sp + 18 * ss] & 67108863
    v19 = src[sp + 19 * ss] & 67108863
    v20 = src[sp + 20 * ss] & 67108863
    v21 = src[sp + 21 * ss] & 67108863
    v22 = src[sp + 22 * ss] & 67108863
    v23 = src[sp + 23 * ss] & 67108863
    v24 = src[sp + 24 * ss] & 67108863
    v25 = src[sp + 25 * ss] & 67108863
    v26 = src[sp + 26 * ss] & 67108863
    v27 = src[sp + 27 * ss] & 67108863
    v28 = src[sp + 28 * ss] & 67108863
    v29 = src[sp + 29 * ss] & 67108863
    v30 = src[sp + 30 * ss] & 67108863
    v31 = src[sp + 31 * ss] & 67108863
    dst[dp + 0 * ds] = (v0 | (v1 << 26)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 6) | (v2 << 20)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 12) | (v3 << 14)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 18) | (v4 << 8)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v4 >> 24) | (v5 << 2) | (v6 << 28)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v6 >> 4) | (v7 << 22)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v7 >> 10) | (v8 << 16)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v8 >> 16) | (v9 << 10)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v9 >> 22) | (v10 << 4) | (v11 << 30)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v11 >> 2) | (v12 << 24)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v12 >> 8) | (v13 << 18)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v13 >> 14) | (v14 << 12)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v14 >> 20) | (v15 << 6)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = (v16 | (v17 << 26)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v17 >> 6) | (v18 << 20)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v18 >> 12) | (v19 << 14)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v19 >> 18) | (v20 << 8)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v20 >> 24) | (v21 << 2) | (v22 << 28)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v22 >> 4) | (v23 << 22)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v23 >> 10) | (v24 << 16)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v24 >> 16) | (v25 << 10)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v25 >> 22) | (v26 << 4) | (v27 << 30)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v27 >> 2) | (v28 << 24)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v28 >> 8) | (v29 << 18)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v29 >> 14) | (v30 << 12)) & 0xFFFFFFFF
    dst[dp + 25 * ds] = ((v30 >> 20) | (v31 << 6)) & 0xFFFFFFFF

@njit(inline="always")
def unpack26(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    w25 = src[sp + 25 * ss]
    dst[dp + 0 * ds] = w0 & 67108863
    dst[dp + 1 * ds] = (w0 >> 26) | ((w1 & 1048575) << 6)
    dst[dp + 2 * ds] = (w1 >> 20) | ((w2 & 16383) << 12)
    dst[dp + 3 * ds] = (w2 >> 14) | ((w3 & 255) << 18)
    dst[dp + 4 * ds] = (w3 >> 8) | ((w4 & 3) << 24)
    dst[dp + 5 * ds] = (w4 >> 2) & 67108863
    dst[dp + 6 * ds] = (w4 >> 28) | ((w5 & 4194303) << 4)
    dst[dp + 7 * ds] = (w5 >> 22) | ((w6 & 65535) << 10)
    dst[dp + 8 * ds] = (w6 >> 16) | ((w7 & 1023) << 16)
    dst[dp + 9 * ds] = (w7 >> 10) | ((w8 & 15) << 22)
    dst[dp + 10 * ds] = (w8 >> 4) & 67108863
    dst[dp + 11 * ds] = (w8 >> 30) | ((w9 & 16777215) << 2)
    dst[dp + 12 * ds] = (w9 >> 24) | ((w10 & 262143) << 8)
    dst[dp + 13 * ds] = (w10 >> 18) | ((w11 & 4095) << 14)
    dst[dp + 14 * ds] = (w11 >> 12) | ((w12 & 63) << 20)
    dst[dp + 15 * ds] = (w12 >> 6)
    dst[dp + 16 * ds] = w13 & 67108863
    dst[dp + 17 * ds] = (w13 >> 26) | ((w14 & 1048575) << 6)
    dst[dp + 18 * ds] = (w14 >> 20) | ((w15 & 16383) << 12)
    dst[dp + 19 * ds] = (w15 >> 14) | ((w16 & 255) << 18)
    dst[dp + 20 * ds] = (w16 >> 8) | ((w17 & 3) << 24)
    dst[dp + 21 * ds] = (w17 >> 2) & 67108863
    dst[dp + 22 * ds] = (w17 >> 28) | ((w18 & 4194303) << 4)
    dst[dp + 23 * ds] = (w18 >> 22) | ((w19 & 65535) << 10)
    dst[dp + 24 * ds] = (w19 >> 16) | ((w20 & 1023) << 16)
    dst[dp + 25 * ds] = (w20 >> 10) | ((w21 & 15) << 22)
    dst[dp + 26 * ds] = (w21 >> 4) & 67108863
    dst[dp + 27 * ds] = (w21 >> 30) | ((w22 & 16777215) << 2)
    dst[dp + 28 * ds] = (w22 >> 24) | ((w23 & 262143) << 8)
    dst[dp + 29 * ds] = (w23 >> 18) | ((w24 & 4095) << 14)
    dst[dp + 30 * ds] = (w24 >> 12) | ((w25 & 63) << 20)
    dst[dp + 31 * ds] = (w25 >> 6)

@njit(inline="always")
def pack27(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 134217727
    v1 = src[sp + 1 * ss] & 134217727
    v2 = src[sp + 2 * ss] & 134217727
    v3 = src[sp + 3 * ss] & 134217727
    v4 = src[sp + 4 * ss] & 134217727
    v5 = src[sp + 5 * ss] & 134217727
    v6 = src[sp + 6 * ss] & 134217727
    v7 = src[sp + 7 * ss] & 134217727
    v8 = src[sp + 8 * ss] & 134217727
    v9 = src[sp + 9 * ss] & 134217727
    v10 = src[sp + 10 * ss] & 134217727
    v11 = src[sp + 11 * ss] & 134217727
    v12 = src[sp + 12 * ss] & 134217727
    v13 = src[sp + 13 * ss] & 134217727
    v14 = src[sp + 14 * ss] & 134217727
    v15 = src[sp + 15 * ss] & 134217727
    v16 = src[sp + 16 * ss] & 134217727
    v17 = src[sp + 17 * ss] & 134217727
    v18 = src[sp + 18 * ss] & 134217727
    v19 = src[sp + 19 * ss] & 134217727
    v20 = src[sp + 20 * ss] & 134217727
    v21 = src[sp + 21 * ss] & 134217727
    v22 = src[sp + 22 * ss] & 134217727
    v23 = src[sp + 23 * ss] & 134217727
    v24 = src[sp + 24 * ss] & 134217727
    v25 = src[sp + 25 * ss] & 134217727
    v26 = src[sp + 26 * ss] & 134217727
    v27 = src[sp + 27 * ss] & 134217727
    v28 = src[sp + 28 * ss] & 134217727
    v29 = src[sp + 29 * ss] & 134217727
    v30 = src[sp + 30 * ss] & 134217727
    v31 = src[sp + 31 * ss] & 134217727
    dst[dp + 0 * ds] = (v0 | (v1 << 27)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 5) | (v2 << 22)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 10) | (v3 << 17)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 15) | (v4 << 12)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v4 >> 20) | (v5 << 7)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v5 >> 25) | (v6 << 2) | (v7 << 29)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v7 >> 3) | (v8 << 24)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v8 >> 8) | (v9 << 19)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v9 >> 13) | (v10 << 14)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v10 >> 18) | (v11 << 9)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v11 >> 23) | (v12 << 4) | (v13 << 31)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v13 >> 1) | (v14 << 26)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v14 >> 6) | (v15 << 21)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v15 >> 11) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v16 >> 16) | (v17 << 11)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v17 >> 21) | (v18 << 6)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v18 >> 26) | (v19 << 1) | (v20 << 28)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v20 >> 4) | (v21 << 23)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v21 >> 9) | (v22 << 18)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v22 >> 14) | (v23 << 13)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v23 >> 19) | (v24 << 8)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v24 >> 24) | (v25 << 3) | (v26 << 30)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v26 >> 2) | (v27 << 25)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v27 >> 7) | (v28 << 20)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v28 >> 12) | (v29 << 15)) & 0xFFFFFFFF
    dst[dp + 25 * ds] = ((v29 >> 17) | (v30 << 10)) & 0xFFFFFFFF
    dst[dp + 26 * ds] = ((v30 >> 22) | (v31 << 5)) & 0xFFFFFFFF

@njit(inline="always")
def unpack27(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    w25 = src[sp + 25 * ss]
    w26 = src[sp + 26 * ss]
    dst[dp + 0 * ds] = w0 & 134217727
    dst[dp + 1 * ds] = (w0 >> 27) | ((w1 & 4194303) << 5)
    dst[dp + 2 * ds] = (w1 >> 22) | ((w2 & 131071) << 10)
    dst[dp + 3 * ds] = (w2 >> 17) | ((w3 & 4095) << 15)
    dst[dp + 4 * ds] = (w3 >> 12) | ((w4 & 127) << 20)
    dst[dp + 5 * ds] = (w4 >> 7) | ((w5 & 3) << 25)
    dst[dp + 6 * ds] = (w5 >> 2) & 134217727
    dst[dp + 7 * ds] = (w5 >> 29) | ((w6 & 16777215) << 3)
    dst[dp + 8 * ds] = (w6 >> 24) | ((w7 & 524287) << 8)
    dst[dp + 9 * ds] = (w7 >> 19) | ((w8 & 16383) << 13)
    dst[dp + 10 * ds] = (w8 >> 14) | ((w9 & 511) << 18)
    dst[dp + 11 * ds] = (w9 >> 9) | ((w10 & 15) << 23)
    dst[dp + 12 * ds] = (w10 >> 4) & 134217727
    dst[dp + 13 * ds] = (w10 >> 31) | ((w11 & 67108863) << 1)
    dst[dp + 14 * ds] = (w11 >> 26) | ((w12 & 2097151) << 6)
    dst[dp + 15 * ds] = (w12 >> 21) | ((w13 & 65535) << 11)
    dst[dp + 16 * ds] = (w13 >> 16) | ((w14 & 2047) << 16)
    dst[dp + 17 * ds] = (w14 >> 11) | ((w15 & 63) << 21)
    dst[dp + 18 * ds] = (w15 >> 6) | ((w16 & 1) << 26)
    dst[dp + 19 * ds] = (w16 >> 1) & 134217727
    dst[dp + 20 * ds] = (w16 >> 28) | ((w17 & 8388607) << 4)
    dst[dp + 21 * ds] = (w17 >> 23) | ((w18 & 262143) << 9)
    dst[dp + 22 * ds] = (w18 >> 18) | ((w19 & 8191) << 14)
    dst[dp + 23 * ds] = (w19 >> 13) | ((w20 & 255) << 19)
    dst[dp + 24 * ds] = (w20 >> 8) | ((w21 & 7) << 24)
    dst[dp + 25 * ds] = (w21 >> 3) & 134217727
    dst[dp + 26 * ds] = (w21 >> 30) | ((w22 & 33554431) << 2)
    dst[dp + 27 * ds] = (w22 >> 25) | ((w23 & 1048575) << 7)
    dst[dp + 28 * ds] = (w23 >> 20) | ((w24 & 32767) << 12)
    dst[dp + 29 * ds] = (w24 >> 15) | ((w25 & 1023) << 17)
    dst[dp + 30 * ds] = (w25 >> 10) | ((w26 & 31) << 22)
    dst[dp + 31 * ds] = (w26 >> 5)

@njit(inline="always")
def pack28(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 268435455
    v1 = src[sp + 1 * ss] & 268435455
    v2 = src[sp + 2 * ss] & 268435455
    v3 = src[sp + 3 * ss] & 268435455
    v4 = src[sp + 4 * ss] & 268435455
    v5 = src[sp + 5 * ss] & 268435455
    v6 = src[sp + 6 * ss] & 268435455
    v7 = src[sp + 7 * ss] & 268435455
    v8 = src[sp + 8 * ss] & 268435455
    v9 = src[sp + 9 * ss] & 268435455
    v10 = src[sp + 10 * ss] & 268435455
    v11 = src[sp + 11 * ss] & 268435455
    v12 = src[sp + 12 * ss] & 268435455
    v13 = src[sp + 13 * ss] & 268435455
    v14 = src[sp + 14 * ss] & 268435455
    v15 = src[sp + 15 * ss] & 268435455
    v16 = src[sp + 16 * ss] & 268435455
    v17 = src[sp + 17 * ss] & 268435455
    v18 = src[sp + 18 * ss] & 268435455
    v19 = src[sp + 19 * ss] & 268435455
    v20 = src[sp + 20 * ss] & 268435455
    v21 = src[sp + 21 * ss] & 268435455
    v22 = src[sp + 22 * ss] & 268435455
    v23 = src[sp + 23 * ss] & 268435455
    v24 = src[sp + 24 * ss] & 268435455
    v25 = src[sp + 25 * ss] & 268435455
    v26 = src[sp + 26 * ss] & 268435455
    v27 = src[sp + 27 * ss] & 268435455
    v28 = src[sp + 28 * ss] & 268435455
    v29 = src[sp + 29 * ss] & 268435455
    v30 = src[sp + 30 * ss] & 268435455
    v31 = src[sp + 31 * ss] & 268435455
    dst[dp + 0 * ds] = (v0 | (v1 << 28)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 4) | (v2 << 24)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 8) | (v3 << 20)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 12) | (v4 << 16)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v4 >> 16) | (v5 << 12)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v5 >> 20) | (v6 << 8)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v6 >> 24) | (v7 << 4)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = (v8 | (v9 << 28)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v9 >> 4) | (v10 << 24)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v10 >> 8) | (v11 << 20)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v11 >> 12) | (v12 << 16)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v12 >> 16) | (v13 << 12)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v13 >> 20) | (v14 << 8)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v14 >> 24) | (v15 << 4)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = (v16 | (v17 << 28)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v17 >> 4) | (v18 << 24)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v18 >> 8) | (v19 << 20)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v19 >> 12) | (v20 << 16)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v20 >> 16) | (v21 << 12)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v21 >> 20) | (v22 << 8)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v22 >> 24) | (v23 << 4)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = (v24 | (v25 << 28)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v25 >> 4) | (v26 << 24)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v26 >> 8) | (v27 << 20)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v27 >> 12) | (v28 << 16)) & 0xFFFFFFFF
    dst[dp + 25 * ds] = ((v28 >> 16) | (v29 << 12)) & 0xFFFFFFFF
    dst[dp + 26 * ds] = ((v29 >> 20) | (v30 << 8)) & 0xFFFFFFFF
    dst[dp + 27 * ds] = ((v30 >> 24) | (v31 << 4)) & 0xFFFFFFFF

@njit(inline="always")
def unpack28(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    w25 = src[sp + 25 * ss]
    w26 = src[sp + 26 * ss]
    w27 = src[sp + 27 * ss]
    dst[dp + 0 * ds] = w0 & 268435455
    dst[dp + 1 * ds] = (w0 >> 28) | ((w1 & 16777215) << 4)
    dst[dp + 2 * ds] = (w1 >> 24) | ((w2 & 1048575) << 8)
    dst[dp + 3 * ds] = (w2 >> 20) | ((w3 & 65535) << 12)
    dst[dp + 4 * ds] = (w3 >> 16) | ((w4 & 4095) << 16)
    dst[dp + 5 * ds] = (w4 >> 12) | ((w5 & 255) << 20)
    dst[dp + 6 * ds] = (w5 >> 8) | ((w6 & 15) << 24)
    dst[dp + 7 * ds] = (w6 >> 4)
    dst[dp + 8 * ds] = w7 & 268435455
    dst[dp + 9 * ds] = (w7 >> 28) | ((w8 & 16777215) << 4)
    dst[dp + 10 * ds] = (w8 >> 24) | ((w9 & 1048575) << 8)
    dst[dp + 11 * ds] = (w9 >> 20) | ((w10 & 65535) << 12)
    dst[dp + 12 * ds] = (w10 >> 16) | ((w11 & 4095) << 16)
    dst[dp + 13 * ds] = (w11 >> 12) | ((w12 & 255) << 20)
    dst[dp + 14 * ds] = (w12 >> 8) | ((w13 & 15) << 24)
    dst[dp + 15 * ds] = (w13 >> 4)
    dst[dp + 16 * ds] = w14 & 268435455
    dst[dp + 17 * ds] = (w14 >> 28) | ((w15 & 16777215) << 4)
    dst[dp + 18 * ds] = (w15 >> 24) | ((w16 & 1048575) << 8)
    dst[dp + 19 * ds] = (w16 >> 20) | ((w17 & 65535) << 12)
    dst[dp + 20 * ds] = (w17 >> 16) | ((w18 & 4095) << 16)
    dst[dp + 21 * ds] = (w18 >> 12) | ((w19 & 255) << 20)
    dst[dp + 22 * ds] = (w19 >> 8) | ((w20 & 15) << 24)
    dst[dp + 23 * ds] = (w20 >> 4)
    dst[dp + 24 * ds] = w21 & 268435455
    dst[dp + 25 * ds] = (w21 >> 28) | ((w22 & 16777215) << 4)
    dst[dp + 26 * ds] = (w22 >> 24) | ((w23 & 1048575) << 8)
    dst[dp + 27 * ds] = (w23 >> 20) | ((w24 & 65535) << 12)
    dst[dp + 28 * ds] = (w24 >> 16) | ((w25 & 4095) << 16)
    dst[dp + 29 * ds] = (w25 >> 12) | ((w26 & 255) << 20)
    dst[dp + 30 * ds] = (w26 >> 8) | ((w27 & 15) << 24)
    dst[dp + 31 * ds] = (w27 >> 4)

@njit(inline="always")
def pack29(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 536870911
    v1 = src[sp + 1 * ss] & 536870911
    v2 = src[sp + 2 * ss] & 536870911
    v3 = src[sp + 3 * ss] & 536870911
    v4 = src[sp + 4 * ss] & 536870911
    v5 = src[sp + 5 * ss] & 536870911
    v6 = src[sp + 6 * ss] & 536870911
    v7 = src[sp + 7 * ss] & 536870911
    v8 = src[sp + 8 * ss] & 536870911
    v9 = src[sp + 9 * ss] & 536870911
    v10 = src[sp + 10 * ss] & 536870911
    v11 = src[sp + 11 * ss] & 536870911
    v12 = src[sp + 12 * ss] & 536870911
    v13 = src[sp + 13 * ss] & 536870911
    v14 = src[sp + 14 * ss] & 536870911
    v15 = src[sp + 15 * ss] & 536870911
    v16 = src[sp + 16 * ss] & 536870911
    v17 = src[sp + 17 * ss] & 536870911
    v18 = src[sp + 18 * ss] & 536870911
    v19 = src[sp + 19 * ss] & 536870911
    v20 = src[sp + 20 * ss] & 536870911
    v21 = src[sp + 21 * ss] & 536870911
    v22 = src[sp + 22 * ss] & 536870911
    v23 = src[sp + 23 * ss] & 536870911
    v24 = src[sp + 24 * ss] & 536870911
    v25 = src[sp + 25 * ss] & 536870911
    v26 = src[sp + 26 * ss] & 536870911
    v27 = src[sp + 27 * ss] & 536870911
    v28 = src[sp + 28 * ss] & 536870911
    v29 = src[sp + 29 * ss] & 536870911
    v30 = src[sp + 30 * ss] & 536870911
    v31 = src[sp + 31 * ss] & 536870911
    dst[dp + 0 * ds] = (v0 | (v1 << 29)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 3) | (v2 << 26)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 6) | (v3 << 23)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 9) | (v4 << 20)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v4 >> 12) | (v5 << 17)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v5 >> 15) | (v6 << 14)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v6 >> 18) | (v7 << 11)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v7 >> 21) | (v8 << 8)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v8 >> 24) | (v9 << 5)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v9 >> 27) | (v10 << 2) | (v11 << 31)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v11 >> 1) | (v12 << 28)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v12 >> 4) | (v13 << 25)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v13 >> 7) | (v14 << 22)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v14 >> 10) | (v15 << 19)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v15 >> 13) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v16 >> 16) | (v17 << 13)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v17 >> 19) | (v18 << 10)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v18 >> 22) | (v19 << 7)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v19 >> 25) | (v20 << 4)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v20 >> 28) | (v21 << 1) | (v22 << 30)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v22 >> 2) | (v23 << 27)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v23 >> 5) | (v24 << 24)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v24 >> 8) | (v25 << 21)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v25 >> 11) | (v26 << 18)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v26 >> 14) | (v27 << 15)) & 0xFFFFFFFF
    dst[dp + 25 * ds] = ((v27 >> 17) | (v28 << 12)) & 0xFFFFFFFF
    dst[dp + 26 * ds] = ((v28 >> 20) | (v29 << 9)) & 0xFFFFFFFF
    dst[dp + 27 * ds] = ((v29 >> 23) | (v30 << 6)) & 0xFFFFFFFF
    dst[dp + 28 * ds] = ((v30 >> 26) | (v31 << 3)) & 0xFFFFFFFF

@njit(inline="always")
def unpack29(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    w25 = src[sp + 25 * ss]
    w26 = src[sp + 26 * ss]
    w27 = src[sp + 27 * ss]
    w28 = src[sp + 28 * ss]
    dst[dp + 0 * ds] = w0 & 536870911
    dst[dp + 1 * ds] = (w0 >> 29) | ((w1 & 67108863) << 3)
    dst[dp + 2 * ds] = (w1 >> 26) | ((w2 & 8388607) << 6)
    dst[dp + 3 * ds] = (w2 >> 23) | ((w3 & 1048575) << 9)
    dst[dp + 4 * ds] = (w3 >> 20) | ((w4 & 131071) << 12)
    dst[dp + 5 * ds] = (w4 >> 17) | ((w5 & 16383) << 15)
    dst[dp + 6 * ds] = (w5 >> 14) | ((w6 & 2047) << 18)
    dst[dp + 7 * ds] = (w6 >> 11) | ((w7 & 255) << 21)
    dst[dp + 8 * ds] = (w7 >> 8) | ((w8 & 31) << 24)
    dst[dp + 9 * ds] = (w8 >> 5) | ((w9 & 3) << 27)
    dst[dp + 10 * ds] = (w9 >> 2) & 536870911
    dst[dp + 11 * ds] = (w9 >> 31) | ((w10 & 268435455) << 1)
    dst[dp + 12 * ds] = (w10 >> 28) | ((w11 & 33554431) << 4)
    dst[dp + 13 * ds] = (w11 >> 25) | ((w12 & 4194303) << 7)
    dst[dp + 14 * ds] = (w12 >> 22) | ((w13 & 524287) << 10)
    dst[dp + 15 * ds] = (w13 >> 19) | ((w14 & 65535) << 13)
    dst[dp + 16 * ds] = (w14 >> 16) | ((w15 & 8191) << 16)
    dst[dp + 17 * ds] = (w15 >> 13) | ((w16 & 1023) << 19)
    dst[dp + 18 * ds] = (w16 >> 10) | ((w17 & 127) << 22)
    dst[dp + 19 * ds] = (w17 >> 7) | ((w18 & 15) << 25)
    dst[dp + 20 * ds] = (w18 >> 4) | ((w19 & 1) << 28)
    dst[dp + 21 * ds] = (w19 >> 1) & 536870911
    dst[dp + 22 * ds] = (w19 >> 30) | ((w20 & 134217727) << 2)
    dst[dp + 23 * ds] = (w20 >> 27) | ((w21 & 16777215) << 5)
    dst[dp + 24 * ds] = (w21 >> 24) | ((w22 & 2097151) << 8)
    dst[dp + 25 * ds] = (w22 >> 21) | ((w23 & 262143) << 11)
    dst[dp + 26 * ds] = (w23 >> 18) | ((w24 & 32767) << 14)
    dst[dp + 27 * ds] = (w24 >> 15) | ((w25 & 4095) << 17)
    dst[dp + 28 * ds] = (w25 >> 12) | ((w26 & 511) << 20)
    dst[dp + 29 * ds] = (w26 >> 9) | ((w27 & 63) << 23)
    dst[dp + 30 * ds] = (w27 >> 6) | ((w28 & 7) << 26)
    dst[dp + 31 * ds] = (w28 >> 3)

@njit(inline="always")
def pack30(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 1073741823
    v1 = src[sp + 1 * ss] & 1073741823
    v2 = src[sp + 2 * ss] & 1073741823
    v3 = src[sp + 3 * ss] & 1073741823
    v4 = src[sp + 4 * ss] & 1073741823
    v5 = src[sp + 5 * ss] & 1073741823
    v6 = src[sp + 6 * ss] & 1073741823
    v7 = src[sp + 7 * ss] & 1073741823
    v8 = src[sp + 8 * ss] & 1073741823
    v9 = src[sp + 9 * ss] & 1073741823
    v10 = src[sp + 10 * ss] & 1073741823
    v11 = src[sp + 11 * ss] & 1073741823
    v12 = src[sp + 12 * ss] & 1073741823
    v13 = src[sp + 13 * ss] & 1073741823
    v14 = src[sp + 14 * ss] & 1073741823
    v15 = src[sp + 15 * ss] & 1073741823
    v16 = src[sp + 16 * ss] & 1073741823
    v17 = src[sp + 17 * ss] & 1073741823
    v18 = src[sp + 18 * ss] & 1073741823
    v19 = src[sp + 19 * ss] & 1073741823
    v20 = src[sp + 20 * ss] & 1073741823
    v21 = src[sp + 21 * ss] & 1073741823
    v22 = src[sp + 22 * ss] & 1073741823
    v23 = src[sp + 23 * ss] & 1073741823
    v24 = src[sp + 24 * ss] & 1073741823
    v25 = src[sp + 25 * ss] & 1073741823
    v26 = src[sp + 26 * ss] & 1073741823
    v27 = src[sp + 27 * ss] & 1073741823
    v28 = src[sp + 28 * ss] & 1073741823
    v29 = src[sp + 29 * ss] & 1073741823
    v30 = src[sp + 30 * ss] & 1073741823
    v31 = src[sp + 31 * ss] & 1073741823
    dst[dp + 0 * ds] = (v0 | (v1 << 30)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 2) | (v2 << 28)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 4) | (v3 << 26)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 6) | (v4 << 24)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v4 >> 8) | (v5 << 22)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v5 >> 10) | (v6 << 20)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v6 >> 12) | (v7 << 18)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v7 >> 14) | (v8 << 16)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v8 >> 16) | (v9 << 14)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v9 >> 18) | (v10 << 12)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v10 >> 20) | (v11 << 10)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v11 >> 22) | (v12 << 8)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v12 >> 24) | (v13 << 6)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v13 >> 26) | (v14 << 4)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v14 >> 28) | (v15 << 2)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = (v16 | (v17 << 30)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v17 >> 2) | (v18 << 28)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v18 >> 4) | (v19 << 26)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v19 >> 6) | (v20 << 24)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v20 >> 8) | (v21 << 22)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v21 >> 10) | (v22 << 20)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v22 >> 12) | (v23 << 18)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v23 >> 14) | (v24 << 16)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v24 >> 16) | (v25 << 14)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v25 >> 18) | (v26 << 12)) & 0xFFFFFFFF
    dst[dp + 25 * ds] = ((v26 >> 20) | (v27 << 10)) & 0xFFFFFFFF
    dst[dp + 26 * ds] = ((v27 >> 22) | (v28 << 8)) & 0xFFFFFFFF
    dst[dp + 27 * ds] = ((v28 >> 24) | (v29 << 6)) & 0xFFFFFFFF
    dst[dp + 28 * ds] = ((v29 >> 26) | (v30 << 4)) & 0xFFFFFFFF
    dst[dp + 29 * ds] = ((v30 >> 28) | (v31 << 2)) & 0xFFFFFFFF

@njit(inline="always")
def unpack30(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    w25 = src[sp + 25 * ss]
    w26 = src[sp + 26 * ss]
    w27 = src[sp + 27 * ss]
    w28 = src[sp + 28 * ss]
    w29 = src[sp + 29 * ss]
    dst[dp + 0 * ds] = w0 & 1073741823
    dst[dp + 1 * ds] = (w0 >> 30) | ((w1 & 268435455) << 2)
    dst[dp + 2 * ds] = (w1 >> 28) | ((w2 & 67108863) << 4)
    dst[dp + 3 * ds] = (w2 >> 26) | ((w3 & 16777215) << 6)
    dst[dp + 4 * ds] = (w3 >> 24) | ((w4 & 4194303) << 8)
    dst[dp + 5 * ds] = (w4 >> 22) | ((w5 & 1048575) << 10)
    dst[dp + 6 * ds] = (w5 >> 20) | ((w6 & 262143) << 12)
    dst[dp + 7 * ds] = (w6 >> 18) | ((w7 & 65535) << 14)
    dst[dp + 8 * ds] = (w7 >> 16) | ((w8 & 16383) << 16)
    dst[dp + 9 * ds] = (w8 >> 14) | ((w9 & 4095) << 18)
    dst[dp + 10 * ds] = (w9 >> 12) | ((w10 & 1023) << 20)
    dst[dp + 11 * ds] = (w10 >> 10) | ((w11 & 255) << 22)
    dst[dp + 12 * ds] = (w11 >> 8) | ((w12 & 63) << 24)
    dst[dp + 13 * ds] = (w12 >> 6) | ((w13 & 15) << 26)
    dst[dp + 14 * ds] = (w13 >> 4) | ((w14 & 3) << 28)
    dst[dp + 15 * ds] = (w14 >> 2)
    dst[dp + 16 * ds] = w15 & 1073741823
    dst[dp + 17 * ds] = (w15 >> 30) | ((w16 & 268435455) << 2)
    dst[dp + 18 * ds] = (w16 >> 28) | ((w17 & 67108863) << 4)
    dst[dp + 19 * ds] = (w17 >> 26) | ((w18 & 16777215) << 6)
    dst[dp + 20 * ds] = (w18 >> 24) | ((w19 & 4194303) << 8)
    dst[dp + 21 * ds] = (w19 >> 22) | ((w20 & 1048575) << 10)
    dst[dp + 22 * ds] = (w20 >> 20) | ((w21 & 262143) << 12)
    dst[dp + 23 * ds] = (w21 >> 18) | ((w22 & 65535) << 14)
    dst[dp + 24 * ds] = (w22 >> 16) | ((w23 & 16383) << 16)
    dst[dp + 25 * ds] = (w23 >> 14) | ((w24 & 4095) << 18)
    dst[dp + 26 * ds] = (w24 >> 12) | ((w25 & 1023) << 20)
    dst[dp + 27 * ds] = (w25 >> 10) | ((w26 & 255) << 22)
    dst[dp + 28 * ds] = (w26 >> 8) | ((w27 & 63) << 24)
    dst[dp + 29 * ds] = (w27 >> 6) | ((w28 & 15) << 26)
    dst[dp + 30 * ds] = (w28 >> 4) | ((w29 & 3) << 28)
    dst[dp + 31 * ds] = (w29 >> 2)

@njit(inline="always")
def pack31(src, sp, ss, dst, dp, ds):
    v0 = src[sp + 0 * ss] & 2147483647
    v1 = src[sp + 1 * ss] & 2147483647
    v2 = src[sp + 2 * ss] & 2147483647
    v3 = src[sp + 3 * ss] & 2147483647
    v4 = src[sp + 4 * ss] & 2147483647
    v5 = src[sp + 5 * ss] & 2147483647
    v6 = src[sp + 6 * ss] & 2147483647
    v7 = src[sp + 7 * ss] & 2147483647
    v8 = src[sp + 8 * ss] & 2147483647
    v9 = src[sp + 9 * ss] & 2147483647
    v10 = src[sp + 10 * ss] & 2147483647
    v11 = src[sp + 11 * ss] & 2147483647
    v12 = src[sp + 12 * ss] & 2147483647
    v13 = src[sp + 13 * ss] & 2147483647
    v14 = src[sp + 14 * ss] & 2147483647
    v15 = src[sp + 15 * ss] & 2147483647
    v16 = src[sp + 16 * ss] & 2147483647
    v17 = src[sp + 17 * ss] & 2147483647
    v18 = src[sp + 18 * ss] & 2147483647
    v19 = src[sp + 19 * ss] & 2147483647
    v20 = src[sp + 20 * ss] & 2147483647
    v21 = src[sp + 21 * ss] & 2147483647
    v22 = src[sp + 22 * ss] & 2147483647
    v23 = src[sp + 23 * ss] & 2147483647
    v24 = src[sp + 24 * ss] & 2147483647
    v25 = src[sp + 25 * ss] & 2147483647
    v26 = src[sp + 26 * ss] & 2147483647
    v27 = src[sp + 27 * ss] & 2147483647
    v28 = src[sp + 28 * ss] & 2147483647
    v29 = src[sp + 29 * ss] & 2147483647
    v30 = src[sp + 30 * ss] & 2147483647
    v31 = src[sp + 31 * ss] & 2147483647
    dst[dp + 0 * ds] = (v0 | (v1 << 31)) & 0xFFFFFFFF
    dst[dp + 1 * ds] = ((v1 >> 1) | (v2 << 30)) & 0xFFFFFFFF
    dst[dp + 2 * ds] = ((v2 >> 2) | (v3 << 29)) & 0xFFFFFFFF
    dst[dp + 3 * ds] = ((v3 >> 3) | (v4 << 28)) & 0xFFFFFFFF
    dst[dp + 4 * ds] = ((v4 >> 4) | (v5 << 27)) & 0xFFFFFFFF
    dst[dp + 5 * ds] = ((v5 >> 5) | (v6 << 26)) & 0xFFFFFFFF
    dst[dp + 6 * ds] = ((v6 >> 6) | (v7 << 25)) & 0xFFFFFFFF
    dst[dp + 7 * ds] = ((v7 >> 7) | (v8 << 24)) & 0xFFFFFFFF
    dst[dp + 8 * ds] = ((v8 >> 8) | (v9 << 23)) & 0xFFFFFFFF
    dst[dp + 9 * ds] = ((v9 >> 9) | (v10 << 22)) & 0xFFFFFFFF
    dst[dp + 10 * ds] = ((v10 >> 10) | (v11 << 21)) & 0xFFFFFFFF
    dst[dp + 11 * ds] = ((v11 >> 11) | (v12 << 20)) & 0xFFFFFFFF
    dst[dp + 12 * ds] = ((v12 >> 12) | (v13 << 19)) & 0xFFFFFFFF
    dst[dp + 13 * ds] = ((v13 >> 13) | (v14 << 18)) & 0xFFFFFFFF
    dst[dp + 14 * ds] = ((v14 >> 14) | (v15 << 17)) & 0xFFFFFFFF
    dst[dp + 15 * ds] = ((v15 >> 15) | (v16 << 16)) & 0xFFFFFFFF
    dst[dp + 16 * ds] = ((v16 >> 16) | (v17 << 15)) & 0xFFFFFFFF
    dst[dp + 17 * ds] = ((v17 >> 17) | (v18 << 14)) & 0xFFFFFFFF
    dst[dp + 18 * ds] = ((v18 >> 18) | (v19 << 13)) & 0xFFFFFFFF
    dst[dp + 19 * ds] = ((v19 >> 19) | (v20 << 12)) & 0xFFFFFFFF
    dst[dp + 20 * ds] = ((v20 >> 20) | (v21 << 11)) & 0xFFFFFFFF
    dst[dp + 21 * ds] = ((v21 >> 21) | (v22 << 10)) & 0xFFFFFFFF
    dst[dp + 22 * ds] = ((v22 >> 22) | (v23 << 9)) & 0xFFFFFFFF
    dst[dp + 23 * ds] = ((v23 >> 23) | (v24 << 8)) & 0xFFFFFFFF
    dst[dp + 24 * ds] = ((v24 >> 24) | (v25 << 7)) & 0xFFFFFFFF
    dst[dp + 25 * ds] = ((v25 >> 25) | (v26 << 6)) & 0xFFFFFFFF
    dst[dp + 26 * ds] = ((v26 >> 26) | (v27 << 5)) & 0xFFFFFFFF
    dst[dp + 27 * ds] = ((v27 >> 27) | (v28 << 4)) & 0xFFFFFFFF
    dst[dp + 28 * ds] = ((v28 >> 28) | (v29 << 3)) & 0xFFFFFFFF
    dst[dp + 29 * ds] = ((v29 >> 29) | (v30 << 2)) & 0xFFFFFFFF
    dst[dp + 30 * ds] = ((v30 >> 30) | (v31 << 1)) & 0xFFFFFFFF

@njit(inline="always")
def unpack31(src, sp, ss, dst, dp, ds):
    w0 = src[sp + 0 * ss]
    w1 = src[sp + 1 * ss]
    w2 = src[sp + 2 * ss]
    w3 = src[sp + 3 * ss]
    w4 = src[sp + 4 * ss]
    w5 = src[sp + 5 * ss]
    w6 = src[sp + 6 * ss]
    w7 = src[sp + 7 * ss]
    w8 = src[sp + 8 * ss]
    w9 = src[sp + 9 * ss]
    w10 = src[sp + 10 * ss]
    w11 = src[sp + 11 * ss]
    w12 = src[sp + 12 * ss]
    w13 = src[sp + 13 * ss]
    w14 = src[sp + 14 * ss]
    w15 = src[sp + 15 * ss]
    w16 = src[sp + 16 * ss]
    w17 = src[sp + 17 * ss]
    w18 = src[sp + 18 * ss]
    w19 = src[sp + 19 * ss]
    w20 = src[sp + 20 * ss]
    w21 = src[sp + 21 * ss]
    w22 = src[sp + 22 * ss]
    w23 = src[sp + 23 * ss]
    w24 = src[sp + 24 * ss]
    w25 = src[sp + 25 * ss]
    w26 = src[sp + 26 * ss]
    w27 = src[sp + 27 * ss]
    w28 = src[sp + 28 * ss]
    w29 = src[sp + 29 * ss]
    w30 = src[sp + 30 * ss]
    dst[dp + 0 * ds] = w0 & 2147483647
    dst[dp + 1 * ds] = (w0 >> 31) | ((w1 & 1073741823) << 1)
    dst[dp + 2 * ds] = (w1 >> 30) | ((w2 & 536870911) << 2)
    dst[dp + 3 * ds] = (w2 >> 29) | ((w3 & 268435455) << 3)
    dst[dp + 4 * ds] = (w3 >> 28) | ((w4 & 134217727) << 4)
    dst[dp + 5 * ds] = (w4 >> 27) | ((w5 & 67108863) << 5)
    dst[dp + 6 * ds] = (w5 >> 26) | ((w6 & 33554431) << 6)
    dst[dp + 7 * ds] = (w6 >> 25) | ((w7 & 16777215) << 7)
    dst[dp + 8 * ds] = (w7 >> 24) | ((w8 & 8388607) << 8)
    dst[dp + 9 * ds] = (w8 >> 23) | ((w9 & 4194303) << 9)
    dst[dp + 10 * ds] = (w9 >> 22) | ((w10 & 2097151) << 10)
    dst[dp + 11 * ds] = (w10 >> 21) | ((w11 & 1048575) << 11)
    dst[dp + 12 * ds] = (w11 >> 20) | ((w12 & 524287) << 12)
    dst[dp + 13 * ds] = (w12 >> 19) | ((w13 & 262143) << 13)
    dst[dp + 14 * ds] = (w13 >> 18) | ((w14 & 131071) << 14)
    dst[dp + 15 * ds] = (w14 >> 17) | ((w15 & 65535) << 15)
    dst[dp + 16 * ds] = (w15 >> 16) | ((w16 & 32767) << 16)
    dst[dp + 17 * ds] = (w16 >> 15) | ((w17 & 16383) << 17)
    dst[dp + 18 * ds] = (w17 >> 14) | ((w18 & 8191) << 18)
    dst[dp + 19 * ds] = (w18 >> 13) | ((w19 & 4095) << 19)
    dst[dp + 20 * ds] = (w19 >> 12) | ((w20 & 2047) << 20)
    dst[dp + 21 * ds] = (w20 >> 11) | ((w21 & 1023) << 21)
    dst[dp + 22 * ds] = (w21 >> 10) | ((w22 & 511) << 22)
    dst[dp + 23 * ds] = (w22 >> 9) | ((w23 & 255) << 23)
    dst[dp + 24 * ds] = (w23 >> 8) | ((w24 & 127) << 24)
    dst[dp + 25 * ds] = (w24 >> 7) | ((w25 & 63) << 25)
    dst[dp + 26 * ds] = (w25 >> 6) | ((w26 & 31) << 26)
    dst[dp + 27 * ds] = (w26 >> 5) | ((w27 & 15) << 27)
    dst[dp + 28 * ds] = (w27 >> 4) | ((w28 & 7) << 28)
    dst[dp + 29 * ds] = (w28 >> 3) | ((w29 & 3) << 29)
    dst[dp + 30 * ds] = (w29 >> 2) | ((w30 & 1) << 30)
    dst[dp + 31 * ds] = (w30 >> 1)

@njit(cache=True)
def pack_group(src, sp, ss, dst, dp, ds, b):
    if b == 0:
        return
    elif b == 1:
        pack1(src, sp, ss, dst, dp, ds)
    elif b == 2:
        pack2(src, sp, ss, dst, dp, ds)
    elif b == 3:
        pack3(src, sp, ss, dst, dp, ds)
    elif b == 4:
        pack4(src, sp, ss, dst, dp, ds)
    elif b == 5:
        pack5(src, sp, ss, dst, dp, ds)
    elif b == 6:
        pack6(src, sp, ss, dst, dp, ds)
    elif b == 7:
        pack7(src, sp, ss, dst, dp, ds)
    elif b == 8:
        pack8(src, sp, ss, dst, dp, ds)
    elif b == 9:
        pack9(src, sp, ss, dst, dp, ds)
    elif b == 10:
        pack10(src, sp, ss, dst, dp, ds)
    elif b == 11:
        pack11(src, sp, ss, dst, dp, ds)
    elif b == 12:
        pack12(src, sp, ss, dst, dp, ds)
    elif b == 13:
        pack13(src, sp, ss, dst, dp, ds)
    elif b == 14:
        pack14(src, sp, ss, dst, dp, ds)
    elif b == 15:
        pack15(src, sp, ss, dst, dp, ds)
    elif b == 16:
        pack16(src, sp, ss, dst, dp, ds)
    elif b == 17:
        pack17(src, sp, ss, dst, dp, ds)
    elif b == 18:
        pack18(src, sp, ss, dst, dp, ds)
    elif b == 19:
        pack19(src, sp, ss, dst, dp, ds)
    elif b == 20:
        pack20(src, sp, ss, dst, dp, ds)
    elif b == 21:
        pack21(src, sp, ss, dst, dp, ds)
    elif b == 22:
        pack22(src, sp, ss, dst, dp, ds)
    elif b == 23:
        pack23(src, sp, ss, dst, dp, ds)
    elif b == 24:
        pack24(src, sp, ss, dst, dp, ds)
    elif b == 25:
        pack25(src, sp, ss, dst, dp, ds)
    elif b == 26:
        pack26(src, sp, ss, dst, dp, ds)
    elif b == 27:
        pack27(src, sp, ss, dst, dp, ds)
    elif b == 28:
        pack28(src, sp, ss, dst, dp, ds)
    elif b == 29:
        pack29(src, sp, ss, dst, dp, ds)
    elif b == 30:
        pack30(src, sp, ss, dst, dp, ds)
    elif b == 31:
        pack31(src, sp, ss, dst, dp, ds)
    else:
        for i in range(32):
            dst[dp + i * ds] = src[sp + i * ss]


@njit(cache=True)
def pack_run(src, sp, dst, dp, b, groups):
    if b == 0:
        return
    elif b == 1:
        for g in range(groups):
            pack1(src, sp + g * 32, 1, dst, dp + g * 1, 1)
    elif b == 2:
        for g in range(groups):
            pack2(src, sp + g * 32, 1, dst, dp + g * 2, 1)
    elif b == 3:
        for g in range(groups):
            pack3(src, sp + g * 32, 1, dst, dp + g * 3, 1)
    elif b == 4:
        for g in range(groups):
            pack4(src, sp + g * 32, 1, dst, dp + g * 4, 1)
    elif b == 5:
        for g in range(groups):
            pack5(src, sp + g * 32, 1, dst, dp + g * 5, 1)
    elif b == 6:
        for g in range(groups):
            pack6(src, sp + g * 32, 1, dst, dp + g * 6, 1)
    elif b == 7:
        for g in range(groups):
            pack7(src, sp + g * 32, 1, dst, dp + g * 7, 1)
    elif b == 8:
        for g in range(groups):
            pack8(src, sp + g * 32, 1, dst, dp + g * 8, 1)
    elif b == 9:
        for g in range(groups):
            pack9(src, sp + g * 32, 1, dst, dp + g * 9, 1)
    elif b == 10:
        for g in range(groups):
            pack10(src, sp + g * 32, 1, dst, dp + g * 10, 1)
    elif b == 11:
        for g in range(groups):
            pack11(src, sp + g * 32, 1, dst, dp + g * 11, 1)
    elif b == 12:
        for g in range(groups):
            pack12(src, sp + g * 32, 1, dst, dp + g * 12, 1)
    elif b == 13:
        for g in range(groups):
            pack13(src, sp + g * 32, 1, dst, dp + g * 13, 1)
    elif b == 14:
        for g in range(groups):
            pack14(src, sp + g * 32, 1, dst, dp + g * 14, 1)
    elif b == 15:
        for g in range(groups):
            pack15(src, sp + g * 32, 1, dst, dp + g * 15, 1)
    elif b == 16:
        for g in range(groups):
            pack16(src, sp + g * 32, 1, dst, dp + g * 16, 1)
    elif b == 17:
        for g in range(groups):
            pack17(src, sp + g * 32, 1, dst, dp + g * 17, 1)
    elif b == 18:
        for g in range(groups):
            pack18(src, sp + g * 32, 1, dst, dp + g * 18, 1)
    elif b == 19:
        for g in range(groups):
            pack19(src, sp + g * 32, 1, dst, dp + g * 19, 1)
    elif b == 20:
        for g in range(groups):
            pack20(src, sp + g * 32, 1, dst, dp + g * 20, 1)
    elif b == 21:
        for g in range(groups):
            pack21(src, sp + g * 32, 1, dst, dp + g * 21, 1)
    elif b == 22:
        for g in range(groups):
            pack22(src, sp + g * 32, 1, dst, dp + g * 22, 1)
    elif b == 23:
        for g in range(groups):
            pack23(src, sp + g * 32, 1, dst, dp + g * 23, 1)
    elif b == 24:
        for g in range(groups):
            pack24(src, sp + g * 32, 1, dst, dp + g * 24, 1)
    elif b == 25:
        for g in range(groups):
            pack25(src, sp + g * 32, 1, dst, dp + g * 25, 1)
    elif b == 26:
        for g in range(groups):
            pack26(src, sp + g * 32, 1, dst, dp + g * 26, 1)
    elif b == 27:
        for g in range(groups):
            pack27(src, sp + g * 32, 1, dst, dp + g * 27, 1)
    elif b == 28:
        for g in range(groups):
            pack28(src, sp + g * 32, 1, dst, dp + g * 28, 1)
    elif b == 29:
        for g in range(groups):
            pack29(src, sp + g * 32, 1, dst, dp + g * 29, 1)
    elif b == 30:
        for g in range(groups):
            pack30(src, sp + g * 32, 1, dst, dp + g * 30, 1)
    elif b == 31:
        for g in range(groups):
            pack31(src, sp + g * 32, 1, dst, dp + g * 31, 1)
    else:
        for i in range(32 * groups):
            dst[dp + i] = src[sp + i]


@njit(cache=True)
def pack_vertical(src, sp, dst, dp, b):
    if b == 0:
        return
    elif b == 1:
        for lane in range(4):
            pack1(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 2:
        for lane in range(4):
            pack2(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 3:
        for lane in range(4):
            pack3(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 4:
        for lane in range(4):
            pack4(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 5:
        for lane in range(4):
            pack5(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 6:
        for lane in range(4):
            pack6(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 7:
        for lane in range(4):
            pack7(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 8:
        for lane in range(4):
            pack8(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 9:
        for lane in range(4):
            pack9(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 10:
        for lane in range(4):
            pack10(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 11:
        for lane in range(4):
            pack11(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 12:
        for lane in range(4):
            pack12(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 13:
        for lane in range(4):
            pack13(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 14:
        for lane in range(4):
            pack14(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 15:
        for lane in range(4):
            pack15(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 16:
        for lane in range(4):
            pack16(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 17:
        for lane in range(4):
            pack17(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 18:
        for lane in range(4):
            pack18(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 19:
        for lane in range(4):
            pack19(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 20:
        for lane in range(4):
            pack20(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 21:
        for lane in range(4):
            pack21(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 22:
        for lane in range(4):
            pack22(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 23:
        for lane in range(4):
            pack23(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 24:
        for lane in range(4):
            pack24(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 25:
        for lane in range(4):
            pack25(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 26:
        for lane in range(4):
            pack26(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 27:
        for lane in range(4):
            pack27(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 28:
        for lane in range(4):
            pack28(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 29:
        for lane in range(4):
            pack29(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 30:
        for lane in range(4):
            pack30(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 31:
        for lane in range(4):
            pack31(src, sp + lane, 4, dst, dp + lane, 4)
    else:
        for i in range(128):
            dst[dp + i] = src[sp + i]


@njit(cache=True)
def unpack_group(src, sp, ss, dst, dp, ds, b):
    if b == 0:
        for i in range(32):
            dst[dp + i * ds] = 0
    elif b == 1:
        unpack1(src, sp, ss, dst, dp, ds)
    elif b == 2:
        unpack2(src, sp, ss, dst, dp, ds)
    elif b == 3:
        unpack3(src, sp, ss, dst, dp, ds)
    elif b == 4:
        unpack4(src, sp, ss, dst, dp, ds)
    elif b == 5:
        unpack5(src, sp, ss, dst, dp, ds)
    elif b == 6:
        unpack6(src, sp, ss, dst, dp, ds)
    elif b == 7:
        unpack7(src, sp, ss, dst, dp, ds)
    elif b == 8:
        unpack8(src, sp, ss, dst, dp, ds)
    elif b == 9:
        unpack9(src, sp, ss, dst, dp, ds)
    elif b == 10:
        unpack10(src, sp, ss, dst, dp, ds)
    elif b == 11:
        unpack11(src, sp, ss, dst, dp, ds)
    elif b == 12:
        unpack12(src, sp, ss, dst, dp, ds)
    elif b == 13:
        unpack13(src, sp, ss, dst, dp, ds)
    elif b == 14:
        unpack14(src, sp, ss, dst, dp, ds)
    elif b == 15:
        unpack15(src, sp, ss, dst, dp, ds)
    elif b == 16:
        unpack16(src, sp, ss, dst, dp, ds)
    elif b == 17:
        unpack17(src, sp, ss, dst, dp, ds)
    elif b == 18:
        unpack18(src, sp, ss, dst, dp, ds)
    elif b == 19:
        unpack19(src, sp, ss, dst, dp, ds)
    elif b == 20:
        unpack20(src, sp, ss, dst, dp, ds)
    elif b == 21:
        unpack21(src, sp, ss, dst, dp, ds)
    elif b == 22:
        unpack22(src, sp, ss, dst, dp, ds)
    elif b == 23:
        unpack23(src, sp, ss, dst, dp, ds)
    elif b == 24:
        unpack24(src, sp, ss, dst, dp, ds)
    elif b == 25:
        unpack25(src, sp, ss, dst, dp, ds)
    elif b == 26:
        unpack26(src, sp, ss, dst, dp, ds)
    elif b == 27:
        unpack27(src, sp, ss, dst, dp, ds)
    elif b == 28:
        unpack28(src, sp, ss, dst, dp, ds)
    elif b == 29:
        unpack29(src, sp, ss, dst, dp, ds)
    elif b == 30:
        unpack30(src, sp, ss, dst, dp, ds)
    elif b == 31:
        unpack31(src, sp, ss, dst, dp, ds)
    else:
        for i in range(32):
            dst[dp + i * ds] = src[sp + i * ss]


@njit(cache=True)
def unpack_run(src, sp, dst, dp, b, groups):
    if b == 0:
        for i in range(32 * groups):
            dst[dp + i] = 0
    elif b == 1:
        for g in range(groups):
            unpack1(src, sp + g * 1, 1, dst, dp + g * 32, 1)
    elif b == 2:
        for g in range(groups):
            unpack2(src, sp + g * 2, 1, dst, dp + g * 32, 1)
    elif b == 3:
        for g in range(groups):
            unpack3(src, sp + g * 3, 1, dst, dp + g * 32, 1)
    elif b == 4:
        for g in range(groups):
            unpack4(src, sp + g * 4, 1, dst, dp + g * 32, 1)
    elif b == 5:
        for g in range(groups):
            unpack5(src, sp + g * 5, 1, dst, dp + g * 32, 1)
    elif b == 6:
        for g in range(groups):
            unpack6(src, sp + g * 6, 1, dst, dp + g * 32, 1)
    elif b == 7:
        for g in range(groups):
            unpack7(src, sp + g * 7, 1, dst, dp + g * 32, 1)
    elif b == 8:
        for g in range(groups):
            unpack8(src, sp + g * 8, 1, dst, dp + g * 32, 1)
    elif b == 9:
        for g in range(groups):
            unpack9(src, sp + g * 9, 1, dst, dp + g * 32, 1)
    elif b == 10:
        for g in range(groups):
            unpack10(src, sp + g * 10, 1, dst, dp + g * 32, 1)
    elif b == 11:
        for g in range(groups):
            unpack11(src, sp + g * 11, 1, dst, dp + g * 32, 1)
    elif b == 12:
        for g in range(groups):
            unpack12(src, sp + g * 12, 1, dst, dp + g * 32, 1)
    elif b == 13:
        for g in range(groups):
            unpack13(src, sp + g * 13, 1, dst, dp + g * 32, 1)
    elif b == 14:
        for g in range(groups):
            unpack14(src, sp + g * 14, 1, dst, dp + g * 32, 1)
    elif b == 15:
        for g in range(groups):
            unpack15(src, sp + g * 15, 1, dst, dp + g * 32, 1)
    elif b == 16:
        for g in range(groups):
            unpack16(src, sp + g * 16, 1, dst, dp + g * 32, 1)
    elif b == 17:
        for g in range(groups):
            unpack17(src, sp + g * 17, 1, dst, dp + g * 32, 1)
    elif b == 18:
        for g in range(groups):
            unpack18(src, sp + g * 18, 1, dst, dp + g * 32, 1)
    elif b == 19:
        for g in range(groups):
            unpack19(src, sp + g * 19, 1, dst, dp + g * 32, 1)
    elif b == 20:
        for g in range(groups):
            unpack20(src, sp + g * 20, 1, dst, dp + g * 32, 1)
    elif b == 21:
        for g in range(groups):
            unpack21(src, sp + g * 21, 1, dst, dp + g * 32, 1)
    elif b == 22:
        for g in range(groups):
            unpack22(src, sp + g * 22, 1, dst, dp + g * 32, 1)
    elif b == 23:
        for g in range(groups):
            unpack23(src, sp + g * 23, 1, dst, dp + g * 32, 1)
    elif b == 24:
        for g in range(groups):
            unpack24(src, sp + g * 24, 1, dst, dp + g * 32, 1)
    elif b == 25:
        for g in range(groups):
            unpack25(src, sp + g * 25, 1, dst, dp + g * 32, 1)
    elif b == 26:
        for g in range(groups):
            unpack26(src, sp + g * 26, 1, dst, dp + g * 32, 1)
    elif b == 27:
        for g in range(groups):
            unpack27(src, sp + g * 27, 1, dst, dp + g * 32, 1)
    elif b == 28:
        for g in range(groups):
            unpack28(src, sp + g * 28, 1, dst, dp + g * 32, 1)
    elif b == 29:
        for g in range(groups):
            unpack29(src, sp + g * 29, 1, dst, dp + g * 32, 1)
    elif b == 30:
        for g in range(groups):
            unpack30(src, sp + g * 30, 1, dst, dp + g * 32, 1)
    elif b == 31:
        for g in range(groups):
            unpack31(src, sp + g * 31, 1, dst, dp + g * 32, 1)
    else:
        for i in range(32 * groups):
            dst[dp + i] = src[sp + i]


@njit(cache=True)
def unpack_vertical(src, sp, dst, dp, b):
    if b == 0:
        for i in range(128):
            dst[dp + i] = 0
    elif b == 1:
        for lane in range(4):
            unpack1(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 2:
        for lane in range(4):
            unpack2(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 3:
        for lane in range(4):
            unpack3(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 4:
        for lane in range(4):
            unpack4(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 5:
        for lane in range(4):
            unpack5(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 6:
        for lane in range(4):
            unpack6(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 7:
        for lane in range(4):
            unpack7(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 8:
        for lane in range(4):
            unpack8(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 9:
        for lane in range(4):
            unpack9(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 10:
        for lane in range(4):
            unpack10(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 11:
        for lane in range(4):
            unpack11(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 12:
        for lane in range(4):
            unpack12(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 13:
        for lane in range(4):
            unpack13(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 14:
        for lane in range(4):
            unpack14(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 15:
        for lane in range(4):
            unpack15(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 16:
        for lane in range(4):
            unpack16(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 17:
        for lane in range(4):
            unpack17(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 18:
        for lane in range(4):
            unpack18(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 19:
        for lane in range(4):
            unpack19(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 20:
        for lane in range(4):
            unpack20(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 21:
        for lane in range(4):
            unpack21(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 22:
        for lane in range(4):
            unpack22(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 23:
        for lane in range(4):
            unpack23(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 24:
        for lane in range(4):
            unpack24(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 25:
        for lane in range(4):
            unpack25(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 26:
        for lane in range(4):
            unpack26(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 27:
        for lane in range(4):
            unpack27(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 28:
        for lane in range(4):
            unpack28(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 29:
        for lane in range(4):
            unpack29(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 30:
        for lane in range(4):
            unpack30(src, sp + lane, 4, dst, dp + lane, 4)
    elif b == 31:
        for lane in range(4):
            unpack31(src, sp + lane, 4, dst, dp + lane, 4)
    else:
        for i in range(128):
            dst[dp + i] = src[sp + i]
