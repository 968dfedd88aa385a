"""Numba backend: word-packed bitset loops compiled with @njit.

Sets are rows of uint64 words (64 elements per word). Every scan walks
assignments in the same lexicographic order as the numpy backend and
bails out at the first violation.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from ._bits import pack_rows, unpack_rows

U1 = np.uint64(1)


@njit(cache=True)
def _cone(rows, sel, full, out):
    """Intersection of ``rows[j]`` over set bits j of ``sel`` (all-full if none)."""
    n, w_cnt = rows.shape
    for w in range(w_cnt):
        out[w] = full[w]
    for j in range(n):
        if (sel[j >> 6] >> np.uint64(j & 63)) & U1:
            for w in range(w_cnt):
                out[w] &= rows[j, w]


@njit(cache=True)
def _pair_tables(down_w, up_w, full):
    n, w_cnt = down_w.shape
    lu2 = np.empty((n, n, w_cnt), np.uint64)
    ul2 = np.empty((n, n, w_cnt), np.uint64)
    tmp = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            for w in range(w_cnt):
                tmp[w] = up_w[x, w] & up_w[y, w]
            _cone(down_w, tmp, full, lu2[x, y])
            for w in range(w_cnt):
                tmp[w] = down_w[x, w] & down_w[y, w]
            _cone(up_w, tmp, full, ul2[x, y])
    return lu2, ul2


@njit(cache=True)
def _modularity(down_w, up_w, full, lu2, ul2):
    n, w_cnt = down_w.shape
    s = np.empty(w_cnt, np.uint64)
    r = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if not (up_w[x, z >> 6] >> np.uint64(z & 63)) & U1:
                    continue
                for w in range(w_cnt):
                    s[w] = up_w[x, w] & ul2[y, z, w]
                _cone(down_w, s, full, r)
                for w in range(w_cnt):
                    if (lu2[x, y, w] & down_w[z, w]) != r[w]:
                        return np.array((x, y, z), np.int64)
    return np.array((-1, -1, -1), np.int64)


@njit(cache=True)
def _distributivity(down_w, up_w, full, lu2, ul2, variant):
    n, w_cnt = down_w.shape
    s = np.empty(w_cnt, np.uint64)
    r = np.empty(w_cnt, np.uint64)
    lhs = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if variant == 1:
                    for w in range(w_cnt):
                        lhs[w] = lu2[x, y, w] & down_w[z, w]
                        s[w] = ul2[x, z, w] & ul2[y, z, w]
                    _cone(down_w, s, full, r)
                else:
                    for w in range(w_cnt):
                        s[w] = ul2[x, y, w] & up_w[z, w]
                    _cone(down_w, s, full, lhs)
                    for w in range(w_cnt):
                        r[w] = lu2[x, z, w] & lu2[y, z, w]
                for w in range(w_cnt):
                    if lhs[w] != r[w]:
                        return np.array((x, y, z), np.int64)
    return np.array((-1, -1, -1), np.int64)


@njit(cache=True)
def _strong_modularity(down_w, up_w, full, lu2, ul2):
    n, w_cnt = down_w.shape
    s = np.empty(w_cnt, np.uint64)
    t = np.empty(w_cnt, np.uint64)
    r = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(w_cnt):
                    t[w] = down_w[y, w] & lu2[x, z, w]
                _cone(up_w, t, full, s)
                for w in range(w_cnt):
                    s[w] &= up_w[x, w]
                _cone(down_w, s, full, r)
                for w in range(w_cnt):
                    if (lu2[x, y, w] & lu2[x, z, w]) != r[w]:
                        return np.array((1, x, y, z), np.int64)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                for w in range(w_cnt):
                    s[w] = ul2[x, z, w] & up_w[y, w]
                _cone(down_w, s, full, t)
                for w in range(w_cnt):
                    s[w] = ul2[x, z, w] & ul2[y, z, w]
                _cone(down_w, s, full, r)
                for w in range(w_cnt):
                    if (t[w] & down_w[z, w]) != r[w]:
                        return np.array((2, x, y, z), np.int64)
    return np.array((-1, -1, -1, -1), np.int64)


@njit(cache=True)
def _strict_modularity(down_w, up_w, full, lu2, ul2, closed):
    n, w_cnt = down_w.shape
    m = closed.shape[0]
    s = np.empty(w_cnt, np.uint64)
    t = np.empty(w_cnt, np.uint64)
    r = np.empty(w_cnt, np.uint64)
    ly = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            for a in range(m):
                if not (closed[a, x >> 6] >> np.uint64(x & 63)) & U1:
                    continue
                for w in range(w_cnt):
                    t[w] = down_w[y, w] & closed[a, w]
                _cone(up_w, t, full, s)
                for w in range(w_cnt):
                    s[w] &= up_w[x, w]
                _cone(down_w, s, full, r)
                for w in range(w_cnt):
                    if (lu2[x, y, w] & closed[a, w]) != r[w]:
                        return np.array((1, x, y, a), np.int64)
    ua = np.empty(w_cnt, np.uint64)
    for a in range(m):
        _cone(up_w, closed[a], full, ua)
        for y in range(n):
            for w in range(w_cnt):
                s[w] = ua[w] & up_w[y, w]
            _cone(down_w, s, full, ly)
            for z in range(n):
                if not (ua[z >> 6] >> np.uint64(z & 63)) & U1:
                    continue
                for w in range(w_cnt):
                    t[w] = ua[w] & ul2[y, z, w]
                _cone(down_w, t, full, r)
                for w in range(w_cnt):
                    if (ly[w] & down_w[z, w]) != r[w]:
                        return np.array((2, a, y, z), np.int64)
    return np.array((-1, -1, -1, -1), np.int64)


@njit(cache=True)
def _modular_lattice(lub, glb):
    n = lub.shape[0]
    for x in range(n):
        for y in range(n):
            for z in range(n):
                k = lub[x, z]
                if glb[lub[x, y], k] != lub[x, glb[y, k]]:
                    return np.array((x, y, z), np.int64)
    return np.array((-1, -1, -1), np.int64)


@njit(cache=True)
def _mr_tables(down_w, up_w, full, lu2, ul2, comp):
    n, w_cnt = down_w.shape
    m_tab = np.empty((n, n, w_cnt), np.uint64)
    r_tab = np.empty((n, n, w_cnt), np.uint64)
    s = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            for w in range(w_cnt):
                m_tab[x, y, w] = lu2[x, comp[y], w] & down_w[y, w]
                s[w] = ul2[x, y, w] & up_w[comp[x], w]
            _cone(down_w, s, full, r_tab[x, y])
    return m_tab, r_tab


@njit(cache=True)
def _operator_adjointness(up_w, full, m_w, r_w):
    n = m_w.shape[0]
    w_cnt = m_w.shape[2]
    um = np.empty((n, n, w_cnt), np.uint64)
    for x in range(n):
        for y in range(n):
            _cone(up_w, m_w[x, y], full, um[x, y])
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if (um[x, y, z >> 6] >> np.uint64(z & 63)) & U1:
                    if not (r_w[y, z, x >> 6] >> np.uint64(x & 63)) & U1:
                        return np.array((1, x, y, z), np.int64)
    for x in range(n):
        for y in range(n):
            for z in range(n):
                if (r_w[y, z, x >> 6] >> np.uint64(x & 63)) & U1:
                    if not (um[x, y, z >> 6] >> np.uint64(z & 63)) & U1:
                        return np.array((2, x, y, z), np.int64)
    return np.array((-1, -1, -1, -1), np.int64)


@njit(cache=True)
def _operator_divisibility(down_w, up_w, full, comp, r_w):
    n, w_cnt = down_w.shape
    s = np.empty(w_cnt, np.uint64)
    t = np.empty(w_cnt, np.uint64)
    for x in range(n):
        for y in range(n):
            _cone(up_w, r_w[x, y], full, s)
            for w in range(w_cnt):
                s[w] &= up_w[comp[x], w]
            _cone(down_w, s, full, t)
            for w in range(w_cnt):
                if (t[w] & down_w[x, w]) != (down_w[x, w] & down_w[y, w]):
                    return np.array((x, y), np.int64)
    return np.array((-1, -1), np.int64)


@njit(cache=True)
def _residuum_order(up_w, full, r_w):
    n, w_cnt = up_w.shape
    for x in range(n):
        for y in range(n):
            is_full = True
            for w in range(w_cnt):
                if r_w[x, y, w] != full[w]:
                    is_full = False
                    break
            le = bool((up_w[x, y >> 6] >> np.uint64(y & 63)) & U1)
            if is_full != le:
                return np.array((x, y), np.int64)
    return np.array((-1, -1), np.int64)


# -- python-level wrappers -----------------------------------------------------

def prepare(leq: np.ndarray) -> dict:
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    up_w = pack_rows(leq)
    down_w = pack_rows(leq.T)
    full = pack_rows(np.ones((1, n), dtype=bool))[0]
    lu2, ul2 = _pair_tables(down_w, up_w, full)
    return {"n": n, "down_w": down_w, "up_w": up_w, "full": full,
            "lu2": lu2, "ul2": ul2}


def _res(arr):
    return None if arr[0] < 0 else arr


def modularity(d):
    return _res(_modularity(d["down_w"], d["up_w"], d["full"], d["lu2"], d["ul2"]))


def distributivity(d, variant):
    return _res(_distributivity(d["down_w"], d["up_w"], d["full"],
                                d["lu2"], d["ul2"], variant))


def strong_modularity(d):
    return _res(_strong_modularity(d["down_w"], d["up_w"], d["full"],
                                   d["lu2"], d["ul2"]))


def strict_modularity(d, closed_bool):
    closed = pack_rows(closed_bool) if closed_bool.shape[0] else \
        np.zeros((0, d["down_w"].shape[1]), np.uint64)
    return _res(_strict_modularity(d["down_w"], d["up_w"], d["full"],
                                   d["lu2"], d["ul2"], closed))


def modular_lattice(lub, glb):
    return _res(_modular_lattice(lub, glb))


def mr_tables(d, comp):
    n = d["n"]
    m_w, r_w = _mr_tables(d["down_w"], d["up_w"], d["full"], d["lu2"], d["ul2"], comp)
    m_tab = unpack_rows(m_w.reshape(n * n, -1), n).reshape(n, n, n)
    r_tab = unpack_rows(r_w.reshape(n * n, -1), n).reshape(n, n, n)
    return m_tab, r_tab


def _pack_table(tab):
    n = tab.shape[0]
    return pack_rows(tab.reshape(n * n, n)).reshape(n, n, -1)


def operator_adjointness(d, m_tab, r_tab):
    return _res(_operator_adjointness(d["up_w"], d["full"],
                                      _pack_table(m_tab), _pack_table(r_tab)))


def operator_divisibility(d, comp, r_tab):
    return _res(_operator_divisibility(d["down_w"], d["up_w"], d["full"],
                                       comp, _pack_table(r_tab)))


def residuum_order(d, r_tab):
    return _res(_residuum_order(d["up_w"], d["full"], _pack_table(r_tab)))
