# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels for the packed symplectic engine.

Drop-in replacement for the numpy fallback in ``_slow``; see that module
for the layout conventions.
"""

from libc.stdint cimport int64_t, uint8_t, uint64_t

import numpy as np

cdef extern from *:
    """
    #if defined(__GNUC__) || defined(__clang__)
    #  define conj_popcount64(x) __builtin_popcountll(x)
    #else
    static int conj_popcount64(unsigned long long x) {
        int c = 0;
        while (x) { x &= x - 1; ++c; }
        return c;
    }
    #endif
    """
    int conj_popcount64(uint64_t x) nogil

S, SINV, H, FLIP_X, FLIP_Y, FLIP_Z = range(6)

# Opcode literals below match the S..FLIP_Z tuple ordering above.

def row_axis_pass(uint64_t[:, ::1] xs, uint64_t[:, ::1] zs, uint8_t[::1] signs,
                  uint64_t[::1] mask, int kind, bint quantum):
    cdef Py_ssize_t rows = xs.shape[0], words = xs.shape[1], r, w
    cdef uint64_t acc, m, xw, zw, swap
    with nogil:
        for r in range(rows):
            acc = 0
            for w in range(words):
                m = mask[w]
                if m == 0:
                    continue
                xw = xs[r, w]
                zw = zs[r, w]
                if kind == 0:
                    if quantum:
                        acc ^= <uint64_t>conj_popcount64(xw & zw & m)
                    else:
                        acc ^= <uint64_t>conj_popcount64(zw & m)
                    zs[r, w] = zw ^ (xw & m)
                elif kind == 1:
                    if quantum:
                        acc ^= <uint64_t>conj_popcount64(xw & ~zw & m)
                    else:
                        acc ^= <uint64_t>conj_popcount64((xw ^ zw) & m)
                    zs[r, w] = zw ^ (xw & m)
                elif kind == 2:
                    if quantum:
                        acc ^= <uint64_t>conj_popcount64(xw & zw & m)
                    swap = (xw ^ zw) & m
                    xs[r, w] = xw ^ swap
                    zs[r, w] = zw ^ swap
                elif kind == 3:
                    acc ^= <uint64_t>conj_popcount64(zw & m)
                elif kind == 4:
                    acc ^= <uint64_t>conj_popcount64((xw ^ zw) & m)
                else:
                    acc ^= <uint64_t>conj_popcount64(xw & m)
            signs[r] ^= <uint8_t>(acc & 1)


def row_cz_pass(uint64_t[:, ::1] xs, uint64_t[:, ::1] zs, uint8_t[::1] signs,
                Py_ssize_t pivot, uint64_t[::1] mask, bint tilde):
    cdef Py_ssize_t rows = xs.shape[0], words = xs.shape[1], r, w
    cdef Py_ssize_t pw = pivot >> 6
    cdef int pb = pivot & 63
    cdef uint64_t a, v, m, count, pi, flip
    cdef uint64_t k = 1 if tilde else 0
    with nogil:
        for r in range(rows):
            a = (xs[r, pw] >> pb) & 1
            v = (zs[r, pw] >> pb) & 1
            count = 0
            pi = 0
            for w in range(words):
                m = mask[w]
                if m:
                    count += <uint64_t>conj_popcount64(xs[r, w] & m)
                    pi ^= <uint64_t>conj_popcount64(xs[r, w] & zs[r, w] & m)
            flip = a & (((count & 1) & (k ^ v)) ^ ((count >> 1) & 1) ^ (pi & 1))
            signs[r] ^= <uint8_t>flip
            zs[r, pw] ^= (count & 1) << pb
            if a:
                for w in range(words):
                    zs[r, w] ^= mask[w]


def row_xor(uint64_t[:, ::1] xs, uint64_t[:, ::1] zs, uint8_t[::1] signs,
            Py_ssize_t dst, Py_ssize_t src):
    cdef Py_ssize_t words = xs.shape[1], w
    with nogil:
        for w in range(words):
            xs[dst, w] ^= xs[src, w]
            zs[dst, w] ^= zs[src, w]
        signs[dst] ^= signs[src]


def col_axis_pass(uint64_t[:, ::1] xc, uint64_t[:, ::1] zc, uint64_t[::1] sc,
                  int64_t[::1] positions, int kind, bint quantum):
    cdef Py_ssize_t nops = positions.shape[0], words = sc.shape[0], t, w
    cdef Py_ssize_t i
    cdef uint64_t xw, zw, swap
    with nogil:
        for t in range(nops):
            i = <Py_ssize_t>positions[t]
            for w in range(words):
                xw = xc[i, w]
                zw = zc[i, w]
                if kind == 0:
                    sc[w] ^= (xw & zw) if quantum else zw
                    zc[i, w] = zw ^ xw
                elif kind == 1:
                    sc[w] ^= (xw & ~zw) if quantum else (xw ^ zw)
                    zc[i, w] = zw ^ xw
                elif kind == 2:
                    if quantum:
                        sc[w] ^= xw & zw
                    swap = xw ^ zw
                    xc[i, w] = xw ^ swap
                    zc[i, w] = zw ^ swap
                elif kind == 3:
                    sc[w] ^= zw
                elif kind == 4:
                    sc[w] ^= xw ^ zw
                else:
                    sc[w] ^= xw


def col_cz_pass(uint64_t[:, ::1] xc, uint64_t[:, ::1] zc, uint64_t[::1] sc,
                Py_ssize_t pivot, int64_t[::1] positions, bint tilde):
    cdef Py_ssize_t nops = positions.shape[0], words = sc.shape[0], t, w
    cdef Py_ssize_t j
    cdef uint64_t parity
    with nogil:
        for t in range(nops):
            j = <Py_ssize_t>positions[t]
            for w in range(words):
                parity = zc[pivot, w] ^ zc[j, w]
                if tilde:
                    parity = ~parity
                sc[w] ^= xc[pivot, w] & xc[j, w] & parity
            for w in range(words):
                zc[pivot, w] ^= xc[j, w]
                zc[j, w] ^= xc[pivot, w]


def bit_transpose(uint64_t[:, ::1] mat, Py_ssize_t nbits):
    cdef Py_ssize_t a = mat.shape[0]
    cdef Py_ssize_t wa = (a + 63) >> 6
    cdef uint64_t[:, ::1] o
    cdef Py_ssize_t i, b
    out = np.zeros((nbits, wa), dtype=np.uint64)
    if a == 0 or nbits == 0:
        return out
    o = out
    with nogil:
        for i in range(a):
            for b in range(nbits):
                if (mat[i, b >> 6] >> (b & 63)) & 1:
                    o[b, i >> 6] |= (<uint64_t>1) << (i & 63)
    return out
