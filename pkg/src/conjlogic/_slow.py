"""Vectorised numpy kernels; fallback for the compiled module in ``_speed``.

Both modules expose the same functions over the same packed-uint64 layouts:
row tableaus are ``(rows, words)`` arrays of x and z bits plus a ``(rows,)``
uint8 sign vector; column batches are ``(positions, words)`` arrays whose
bit ``r`` of row ``i`` belongs to batch member ``r``.
"""

from __future__ import annotations

import numpy as np

# Axis-pass opcodes, shared with _speed.
S, SINV, H, FLIP_X, FLIP_Y, FLIP_Z = range(6)

_ONE = np.uint64(1)
_FULL = np.uint64(0xFFFFFFFFFFFFFFFF)


def _row_parity(words: np.ndarray) -> np.ndarray:
    return (np.bitwise_count(words).sum(axis=1) & _ONE).astype(np.uint8)


def row_axis_pass(xs, zs, signs, mask, kind, quantum):
    if kind == S:
        signs ^= _row_parity((xs & zs & mask) if quantum else (zs & mask))
        zs ^= xs & mask
    elif kind == SINV:
        signs ^= _row_parity((xs & ~zs & mask) if quantum else ((xs ^ zs) & mask))
        zs ^= xs & mask
    elif kind == H:
        if quantum:
            signs ^= _row_parity(xs & zs & mask)
        swap = (xs ^ zs) & mask
        xs ^= swap
        zs ^= swap
    elif kind == FLIP_X:
        signs ^= _row_parity(zs & mask)
    elif kind == FLIP_Y:
        signs ^= _row_parity((xs ^ zs) & mask)
    elif kind == FLIP_Z:
        signs ^= _row_parity(xs & mask)
    else:
        raise ValueError(f"unknown axis pass opcode {kind}")


def row_cz_pass(xs, zs, signs, pivot, mask, tilde):
    w, b = divmod(pivot, 64)
    bb = np.uint64(b)
    a = ((xs[:, w] >> bb) & _ONE).astype(np.uint8)
    v = ((zs[:, w] >> bb) & _ONE).astype(np.uint8)
    count = np.bitwise_count(xs & mask).sum(axis=1).astype(np.uint64)
    c1 = (count & _ONE).astype(np.uint8)
    c2 = ((count >> _ONE) & _ONE).astype(np.uint8)
    pi = _row_parity(xs & zs & mask)
    k = np.uint8(1 if tilde else 0)
    signs ^= a & ((c1 & (k ^ v)) ^ c2 ^ pi)
    zs[:, w] ^= c1.astype(np.uint64) << bb
    zs ^= mask * a.astype(np.uint64)[:, None]


def row_xor(xs, zs, signs, dst, src):
    xs[dst] ^= xs[src]
    zs[dst] ^= zs[src]
    signs[dst] ^= signs[src]


def col_axis_pass(xc, zc, sc, positions, kind, quantum):
    for i in positions:
        xcol = xc[i]
        zcol = zc[i]
        if kind == S:
            sc ^= (xcol & zcol) if quantum else zcol
            zc[i] = zcol ^ xcol
        elif kind == SINV:
            sc ^= (xcol & ~zcol) if quantum else (xcol ^ zcol)
            zc[i] = zcol ^ xcol
        elif kind == H:
            if quantum:
                sc ^= xcol & zcol
            swap = xcol ^ zcol
            xc[i] = xcol ^ swap
            zc[i] = zcol ^ swap
        elif kind == FLIP_X:
            sc ^= zcol
        elif kind == FLIP_Y:
            sc ^= xcol ^ zcol
        elif kind == FLIP_Z:
            sc ^= xcol
        else:
            raise ValueError(f"unknown axis pass opcode {kind}")


def col_cz_pass(xc, zc, sc, pivot, positions, tilde):
    xp = xc[pivot]
    for j in positions:
        parity = zc[pivot] ^ zc[j]
        if tilde:
            parity = parity ^ _FULL
        sc ^= xp & xc[j] & parity
        zc[pivot] ^= xc[j]
        zc[j] ^= xp


def bit_transpose(mat: np.ndarray, nbits: int) -> np.ndarray:
    """Transpose an ``(a, words)`` bit matrix of ``nbits`` columns.

    Returns ``(nbits, ceil(a/64))`` with out[b] bit i == mat[i] bit b.
    """
    a = mat.shape[0]
    wa = (a + 63) // 64
    if a == 0 or nbits == 0:
        return np.zeros((nbits, wa), dtype=np.uint64)
    bits = np.unpackbits(
        mat.view(np.uint8).reshape(a, -1), axis=1, bitorder="little"
    )[:, :nbits]
    packed = np.packbits(np.ascontiguousarray(bits.T), axis=1, bitorder="little")
    out = np.zeros((nbits, wa * 8), dtype=np.uint8)
    out[:, : packed.shape[1]] = packed
    return out.view(np.uint64)
