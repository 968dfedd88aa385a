"""Hot exhaustive-scan kernels with two interchangeable backends.

The numba backend JIT-compiles word-packed bitset loops; the numpy backend
vectorizes the same scans as batched boolean matrix products. Select with
the ``LUPOSETS_BACKEND`` environment variable (``numba`` or ``numpy``);
default is numba when importable. Both backends implement identical scan
orders, so witnesses are byte-identical.

Every kernel answers a universally quantified question with either ``None``
(holds) or the lexicographically first violating assignment.
"""

from __future__ import annotations

import os
from typing import Sequence

import numpy as np

from ..poset import ComplementedPoset, Poset
from ._bits import pack_rows, unpack_rows  # noqa: F401  (re-exported)

_ENV = "LUPOSETS_BACKEND"


def _load_backend():
    choice = os.environ.get(_ENV, "").strip().lower()
    if choice not in ("", "numba", "numpy"):
        raise ValueError(f"{_ENV} must be 'numba' or 'numpy', got {choice!r}")
    if choice in ("", "numba"):
        try:
            from . import numba_impl
            return "numba", numba_impl
        except ImportError:
            if choice == "numba":
                raise
    from . import numpy_impl
    return "numpy", numpy_impl


_BACKEND_NAME, _impl = _load_backend()


def backend_name() -> str:
    return _BACKEND_NAME


def get_impl(name: str | None = None):
    """Return a backend module by name (for benchmarks/tests); default active."""
    if name is None:
        return _impl
    if name == "numba":
        from . import numba_impl
        return numba_impl
    if name == "numpy":
        from . import numpy_impl
        return numpy_impl
    raise ValueError(f"unknown backend {name!r}")


# -- packing helpers ---------------------------------------------------------

def masks_to_rows(masks: Sequence[int], n: int) -> np.ndarray:
    """Convert Python int bitmasks to a (m, n) bool matrix."""
    out = np.zeros((len(masks), n), dtype=bool)
    for r, m in enumerate(masks):
        while m:
            b = m & -m
            out[r, b.bit_length() - 1] = True
            m ^= b
    return out


def _data(p: Poset):
    """Backend-ready representation of a poset, cached on the instance."""
    key = "data:" + _BACKEND_NAME
    d = p._kernel_cache.get(key)
    if d is None:
        d = _impl.prepare(p.leq)
        p._kernel_cache[key] = d
    return d


def _as_tuple(res) -> tuple[int, ...] | None:
    if res is None:
        return None
    return tuple(int(v) for v in res)


# -- public kernel surface ----------------------------------------------------

def modularity_witness(p: Poset) -> tuple[int, int, int] | None:
    """First (x, y, z) with x <= z violating L(U(x,y),z) = LU(x,L(y,z))."""
    return _as_tuple(_impl.modularity(_data(p)))


def distributivity_witness(p: Poset, variant: int) -> tuple[int, int, int] | None:
    """First (x, y, z) violating distributive LU-identity 1 or 2."""
    if variant not in (1, 2):
        raise ValueError("variant must be 1 or 2")
    return _as_tuple(_impl.distributivity(_data(p), variant))


def strong_modularity_witness(p: Poset) -> tuple[int, int, int, int] | None:
    """(identity, x, y, z): identity 1 scanned over all triples, then 2."""
    return _as_tuple(_impl.strong_modularity(_data(p)))


def strict_modularity_witness(
        p: Poset, closed_masks: Sequence[int]) -> tuple[int, int, int, int] | None:
    """Check the two subset-quantified conditions over the LU-closed sets.

    Returns (condition, x, y, a) for condition 1 (a indexes ``closed_masks``)
    or (condition, a, y, z) for condition 2; condition 1 is scanned fully
    first, each in lexicographic order of its index triple.
    """
    closed = masks_to_rows(closed_masks, p.n)
    return _as_tuple(_impl.strict_modularity(_data(p), closed))


def modular_lattice_witness(p: Poset) -> tuple[int, int, int] | None:
    """First (x, y, z) violating (x v y) ^ (x v z) = x v (y ^ (x v z))."""
    lub = p.lub_table().astype(np.int64)
    glb = p.glb_table().astype(np.int64)
    return _as_tuple(_impl.modular_lattice(lub, glb))


def mr_tables(cp: ComplementedPoset) -> tuple[np.ndarray, np.ndarray]:
    """Materialized operator tables M(x,y) = L(U(x,y'),y) and
    R(x,y) = LU(L(x,y),x') as (n, n, n) bool arrays indexed [x, y, element]."""
    comp = np.asarray(cp.comp, dtype=np.int64)
    return _impl.mr_tables(_data(cp.poset), comp)


def operator_adjointness_witness(
        cp: ComplementedPoset, m_tab: np.ndarray,
        r_tab: np.ndarray) -> tuple[int, int, int, int] | None:
    """(direction, x, y, z): forward direction (M(x,y) subset of L(z) but
    L(x) not subset of R(y,z)) scanned fully first, then backward."""
    return _as_tuple(_impl.operator_adjointness(_data(cp.poset), m_tab, r_tab))


def operator_divisibility_witness(
        cp: ComplementedPoset, r_tab: np.ndarray) -> tuple[int, int] | None:
    """First (x, y) with M(R(x,y),x) != L(x,y)."""
    comp = np.asarray(cp.comp, dtype=np.int64)
    return _as_tuple(_impl.operator_divisibility(_data(cp.poset), comp, r_tab))


def residuum_order_witness(
        cp: ComplementedPoset, r_tab: np.ndarray) -> tuple[int, int] | None:
    """First (x, y) where x <= y fails to coincide with R(x,y) = P."""
    return _as_tuple(_impl.residuum_order(_data(cp.poset), r_tab))
