"""Pure-numpy backend: batched boolean matrix products instead of loops.

Cones over whole batches of subsets reduce to one float32 matmul:
``x in L(S)`` iff no ``j in S`` has ``not (x <= j)``, so stacking the
subsets as rows of ``S`` gives ``L = ~(S @ ~leq^T)``. Scans vectorize
per outer variable; first violations are extracted in the same
lexicographic orders the numba backend uses.
"""

from __future__ import annotations

import numpy as np


def prepare(leq: np.ndarray) -> dict:
    leq = np.asarray(leq, dtype=bool)
    n = leq.shape[0]
    up = leq                       # row x = principal filter of x
    down = leq.T.copy()            # row x = principal ideal of x
    nl = (~leq).T.astype(np.float32)   # for L-cones of row batches
    nu = (~leq).astype(np.float32)     # for U-cones of row batches
    data = {"n": n, "leq": leq, "up": up, "down": down, "nl": nl, "nu": nu}
    pairs_u = (up[:, None, :] & up[None, :, :]).reshape(n * n, n)
    data["lu2"] = _l_rows(data, pairs_u).reshape(n, n, n)
    pairs_l = (down[:, None, :] & down[None, :, :]).reshape(n * n, n)
    data["ul2"] = _u_rows(data, pairs_l).reshape(n, n, n)
    return data


def _l_rows(data, rows: np.ndarray) -> np.ndarray:
    return (rows.astype(np.float32) @ data["nl"]) < 0.5


def _u_rows(data, rows: np.ndarray) -> np.ndarray:
    return (rows.astype(np.float32) @ data["nu"]) < 0.5


def _first(viol: np.ndarray):
    """First True index tuple of a boolean array, in C (lexicographic) order."""
    if not viol.any():
        return None
    return tuple(int(v) for v in np.argwhere(viol)[0])


def modularity(data):
    n, up, down, lu2, ul2 = data["n"], data["up"], data["down"], data["lu2"], data["ul2"]
    for x in range(n):
        lhs = lu2[x][:, None, :] & down[None, :, :]
        rhs = _l_rows(data, (up[x][None, None, :] & ul2).reshape(n * n, n))
        viol = (lhs != rhs.reshape(n, n, n)).any(axis=2) & up[x][None, :]
        w = _first(viol)
        if w is not None:
            return (x,) + w
    return None


def distributivity(data, variant):
    n, up, down, lu2, ul2 = data["n"], data["up"], data["down"], data["lu2"], data["ul2"]
    for x in range(n):
        if variant == 1:
            lhs = lu2[x][:, None, :] & down[None, :, :]
            rhs = _l_rows(data, (ul2[x][None, :, :] & ul2).reshape(n * n, n)).reshape(n, n, n)
        else:
            lhs = _l_rows(data, (ul2[x][:, None, :] & up[None, :, :]).reshape(n * n, n)).reshape(n, n, n)
            rhs = lu2[x][None, :, :] & lu2
        viol = (lhs != rhs).any(axis=2)
        w = _first(viol)
        if w is not None:
            return (x,) + w
    return None


def strong_modularity(data):
    n, up, down, lu2, ul2 = data["n"], data["up"], data["down"], data["lu2"], data["ul2"]
    for x in range(n):
        lhs = lu2[x][:, None, :] & lu2[x][None, :, :]
        t = down[:, None, :] & lu2[x][None, :, :]
        ut = _u_rows(data, t.reshape(n * n, n))
        rhs = _l_rows(data, up[x][None, :] & ut).reshape(n, n, n)
        w = _first((lhs != rhs).any(axis=2))
        if w is not None:
            return (1, x) + w
    for x in range(n):
        core = _l_rows(data, (up[:, None, :] & ul2[x][None, :, :]).reshape(n * n, n)).reshape(n, n, n)
        lhs = core & down[None, :, :]
        rhs = _l_rows(data, (ul2[x][None, :, :] & ul2).reshape(n * n, n)).reshape(n, n, n)
        w = _first((lhs != rhs).any(axis=2))
        if w is not None:
            return (2, x) + w
    return None


def strict_modularity(data, closed):
    n, up, down, lu2, ul2 = data["n"], data["up"], data["down"], data["lu2"], data["ul2"]
    m = closed.shape[0]
    best = None
    for a in range(m):
        A = closed[a]
        uda = _u_rows(data, down & A[None, :])          # [y] = U(L(y) & A)
        rhs = _l_rows(data, (up[:, None, :] & uda[None, :, :]).reshape(n * n, n)).reshape(n, n, n)
        lhs = lu2 & A[None, None, :]
        viol = (lhs != rhs).any(axis=2) & A[:, None]    # requires x in A
        w = _first(viol)
        if w is not None and (best is None or w + (a,) < best):
            best = w + (a,)
    if best is not None:
        return (1,) + best
    for a in range(m):
        A = closed[a]
        ua = _u_rows(data, A[None, :])[0]
        ly = _l_rows(data, up & ua[None, :])            # [y] = L(U(A,y))
        lhs = ly[:, None, :] & down[None, :, :]
        rhs = _l_rows(data, (ua[None, None, :] & ul2).reshape(n * n, n)).reshape(n, n, n)
        viol = (lhs != rhs).any(axis=2) & ua[None, :]   # requires z in U(A)
        w = _first(viol)
        if w is not None:
            return (2, a) + w
    return None


def modular_lattice(lub, glb):
    n = lub.shape[0]
    idx = np.arange(n)
    for x in range(n):
        k = lub[x]                                      # [z] = x v z
        lhs = glb[lub[x][:, None], k[None, :]]          # (x v y) ^ (x v z)
        rhs = lub[x, glb[idx[:, None], k[None, :]]]     # x v (y ^ (x v z))
        w = _first(lhs != rhs)
        if w is not None:
            return (x,) + w
    return None


def mr_tables(data, comp):
    n, up, down, lu2, ul2 = data["n"], data["up"], data["down"], data["lu2"], data["ul2"]
    m_tab = lu2[:, comp, :] & down[None, :, :]
    r_tab = _l_rows(data, (ul2 & up[comp][:, None, :]).reshape(n * n, n)).reshape(n, n, n)
    return m_tab, r_tab


def operator_adjointness(data, m_tab, r_tab):
    n = data["n"]
    um = _u_rows(data, m_tab.reshape(n * n, n)).reshape(n, n, n)
    rt = np.transpose(r_tab, (2, 0, 1))                 # rt[x,y,z] = R[y,z,x]
    w = _first(um & ~rt)
    if w is not None:
        return (1,) + w
    w = _first(rt & ~um)
    if w is not None:
        return (2,) + w
    return None


def operator_divisibility(data, comp, r_tab):
    n, up, down = data["n"], data["up"], data["down"]
    ur = _u_rows(data, r_tab.reshape(n * n, n)).reshape(n, n, n)
    rows = (ur & up[comp][:, None, :]).reshape(n * n, n)
    lhs = _l_rows(data, rows).reshape(n, n, n) & down[:, None, :]
    rhs = down[:, None, :] & down[None, :, :]
    return _first((lhs != rhs).any(axis=2))


def residuum_order(data, r_tab):
    return _first(r_tab.all(axis=2) != data["up"])
