# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels: LSTM sequence passes and tree split counting.

Matrix products still go through numpy's BLAS; the win over the numpy
fallback is that gate math, gradient assembly, and count loops run as C
loops without per-timestep temporary arrays.
"""

import numpy as np

cimport numpy as cnp
from libc.math cimport exp, tanh

cnp.import_array()


cdef inline double _sig(double z) noexcept nogil:
    cdef double e
    if z >= 0.0:
        return 1.0 / (1.0 + exp(-z))
    e = exp(z)
    return e / (1.0 + e)


def lstm_seq_forward(object x, object w, object u, object b):
    """One LSTM direction over a batch: returns (h_seq, c_seq, gates)."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t B = x.shape[0], T = x.shape[1], E = x.shape[2]
    cdef Py_ssize_t H = u.shape[0]
    h_seq = np.empty((B, T, H))
    c_seq = np.empty((B, T, H))
    gates = np.empty((B, T, 4 * H))
    if B == 0 or T == 0:
        return h_seq, c_seq, gates
    # input contribution of every timestep in a single BLAS call
    zx_all = np.dot(x.reshape(B * T, E), w).reshape(B, T, 4 * H)
    h = np.zeros((B, H))
    zu = np.empty((B, 4 * H))
    c = np.zeros((B, H))

    cdef double[:, :, ::1] hs = h_seq
    cdef double[:, :, ::1] cs = c_seq
    cdef double[:, :, ::1] gs = gates
    cdef double[:, :, ::1] zx = zx_all
    cdef double[:, ::1] hv = h
    cdef double[:, ::1] zuv = zu
    cdef double[:, ::1] cv = c
    cdef double[::1] bv = np.ascontiguousarray(b, dtype=np.float64)
    cdef Py_ssize_t t, i, j
    cdef double zi, zf, zg, zo, gi, gf, gg, go, cc, hh

    for t in range(T):
        np.dot(h, u, out=zu)
        with nogil:
            for i in range(B):
                for j in range(H):
                    zi = zx[i, t, j] + zuv[i, j] + bv[j]
                    zf = zx[i, t, H + j] + zuv[i, H + j] + bv[H + j]
                    zg = zx[i, t, 2 * H + j] + zuv[i, 2 * H + j] + bv[2 * H + j]
                    zo = zx[i, t, 3 * H + j] + zuv[i, 3 * H + j] + bv[3 * H + j]
                    gi = _sig(zi)
                    gf = _sig(zf)
                    gg = tanh(zg)
                    go = _sig(zo)
                    cc = gf * cv[i, j] + gi * gg
                    hh = go * tanh(cc)
                    cv[i, j] = cc
                    hv[i, j] = hh
                    gs[i, t, j] = gi
                    gs[i, t, H + j] = gf
                    gs[i, t, 2 * H + j] = gg
                    gs[i, t, 3 * H + j] = go
                    cs[i, t, j] = cc
                    hs[i, t, j] = hh
    return h_seq, c_seq, gates


def lstm_seq_backward(object x, object w, object u, object gates,
                      object c_seq, object h_seq, object dh_last):
    """Exact gradients for one direction: returns (dx, dw, du, db)."""
    x = np.ascontiguousarray(x, dtype=np.float64)
    cdef Py_ssize_t B = x.shape[0], T = x.shape[1], E = x.shape[2]
    cdef Py_ssize_t H = u.shape[0]
    if B == 0 or T == 0:
        return (np.zeros_like(x), np.zeros_like(w), np.zeros_like(u),
                np.zeros(4 * H))
    dz_all = np.empty((B, T, 4 * H))
    dh = np.ascontiguousarray(dh_last, dtype=np.float64).copy()
    dc = np.zeros((B, H))
    ut = np.ascontiguousarray(u.T)

    cdef double[:, :, ::1] dzv = dz_all
    cdef double[:, :, ::1] gs = np.ascontiguousarray(gates)
    cdef double[:, :, ::1] cs = np.ascontiguousarray(c_seq)
    cdef double[:, ::1] dhv = dh
    cdef double[:, ::1] dcv = dc
    cdef Py_ssize_t t, i, j
    cdef double gi, gf, gg, go, tc, dhij, dcij, cprev, doij

    for t in range(T - 1, -1, -1):
        with nogil:
            for i in range(B):
                for j in range(H):
                    gi = gs[i, t, j]
                    gf = gs[i, t, H + j]
                    gg = gs[i, t, 2 * H + j]
                    go = gs[i, t, 3 * H + j]
                    tc = tanh(cs[i, t, j])
                    dhij = dhv[i, j]
                    doij = dhij * tc
                    dcij = dcv[i, j] + dhij * go * (1.0 - tc * tc)
                    cprev = cs[i, t - 1, j] if t > 0 else 0.0
                    dzv[i, t, j] = dcij * gg * gi * (1.0 - gi)
                    dzv[i, t, H + j] = dcij * cprev * gf * (1.0 - gf)
                    dzv[i, t, 2 * H + j] = dcij * gi * (1.0 - gg * gg)
                    dzv[i, t, 3 * H + j] = doij * go * (1.0 - go)
                    dcv[i, j] = dcij * gf
        np.dot(dz_all[:, t, :], ut, out=dh)

    dz_flat = dz_all.reshape(B * T, 4 * H)
    h_prev = np.zeros_like(np.asarray(h_seq))
    h_prev[:, 1:, :] = np.asarray(h_seq)[:, :-1, :]
    dw = np.dot(x.reshape(B * T, E).T, dz_flat)
    du = np.dot(h_prev.reshape(B * T, H).T, dz_flat)
    db = dz_flat.sum(axis=0)
    dx = np.dot(dz_flat, np.asarray(w).T).reshape(B, T, E)
    return dx, dw, du, db


def rf_split_counts(const unsigned char[:, ::1] X,
                    const unsigned char[::1] y,
                    const cnp.int64_t[::1] idx,
                    const cnp.int64_t[::1] feats):
    """Per candidate feature: samples with the bit set, and positives among them."""
    cdef Py_ssize_t n = idx.shape[0], m = feats.shape[0]
    n1 = np.zeros(m, dtype=np.int64)
    pos1 = np.zeros(m, dtype=np.int64)
    cdef cnp.int64_t[::1] n1v = n1
    cdef cnp.int64_t[::1] pos1v = pos1
    cdef Py_ssize_t k, j
    cdef cnp.int64_t i
    cdef unsigned char yi
    with nogil:
        for k in range(n):
            i = idx[k]
            yi = y[i]
            for j in range(m):
                if X[i, feats[j]]:
                    n1v[j] += 1
                    if yi:
                        pos1v[j] += 1
    return n1, pos1
