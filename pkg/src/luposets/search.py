"""Exhaustive enumeration of small posets up to isomorphism, and
property-combination witness hunting.

Generation adds elements one at a time, choosing each new element's strict
down-set among the order ideals of the part already built; this produces
every naturally-labelled poset exactly once with transitivity for free.
Isomorphism classes are collapsed by a canonical form: the lexicographically
minimal row-major order-matrix encoding over all permutations that sort
elements by rank (height), which is an isomorphism invariant.
"""

from __future__ import annotations

from itertools import permutations, product
from typing import Callable, Iterator

import numpy as np

from . import props
from .errors import SearchLimitError
from .poset import ComplementedPoset, Poset, is_lattice, unary_properties

DEFAULT_LIMIT = 7


def _heights(down_strict: list[int], n: int) -> list[int]:
    h = [0] * n
    for i in range(n):           # generation order is a linear extension
        m = down_strict[i]
        best = -1
        while m:
            b = m & -m
            j = b.bit_length() - 1
            if h[j] > best:
                best = h[j]
            m ^= b
        h[i] = best + 1
    return h


def canonical_key(p: Poset) -> bytes:
    """Canonical form of the order matrix; equal keys iff isomorphic."""
    return _canonical_from_masks(list(p.up_masks()), _heights_poset(p), p.n)


def _heights_poset(p: Poset) -> list[int]:
    cached = p._kernel_cache.get("heights")
    if cached is None:
        n = p.n
        down = p.down_masks()
        h = [0] * n
        for i in sorted(range(n), key=lambda i: down[i].bit_count()):
            m = down[i] & ~(1 << i)
            best = -1
            while m:
                b = m & -m
                j = b.bit_length() - 1
                if h[j] > best:
                    best = h[j]
                m ^= b
            h[i] = best + 1
        cached = h
        p._kernel_cache["heights"] = cached
    return cached


def _canonical_from_masks(up_masks: list[int], heights: list[int], n: int) -> bytes:
    levels: dict[int, list[int]] = {}
    for i, h in enumerate(heights):
        levels.setdefault(h, []).append(i)
    level_lists = [levels[h] for h in sorted(levels)]
    best = None
    for parts in product(*(permutations(lv) for lv in level_lists)):
        perm = [i for part in parts for i in part]   # position -> element
        enc = 0
        bit = 0
        for i in perm:
            row = up_masks[i]
            for j in perm:
                enc = enc << 1 | (row >> j & 1)
        if best is None or enc < best:
            best = enc
    return best.to_bytes((n * n + 7) // 8, "big")


def _key_to_poset(key: bytes, n: int) -> Poset:
    enc = int.from_bytes(key, "big")
    leq = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(n):
            leq[i, j] = enc >> (n * n - 1 - (i * n + j)) & 1
    return Poset([f"e{i}" for i in range(n)], leq)


def is_isomorphic(p: Poset, q: Poset) -> bool:
    return p.n == q.n and canonical_key(p) == canonical_key(q)


def _ideals(down_strict: list[int], k: int) -> Iterator[int]:
    """All order ideals (down-closed subsets) of the first k elements."""
    for s in range(1 << k):
        m = s
        ok = True
        while m:
            b = m & -m
            if down_strict[b.bit_length() - 1] & ~s:
                ok = False
                break
            m ^= b
        if ok:
            yield s


def _labelled_posets(n: int) -> Iterator[list[int]]:
    """All naturally-labelled posets as strict-down-set lists."""
    down_strict = [0] * n

    def extend(k: int):
        if k == n:
            yield list(down_strict)
            return
        for s in _ideals(down_strict, k):
            down_strict[k] = s
            yield from extend(k + 1)

    yield from extend(0)


def enumerate_posets(n: int, require_bounded: bool = False,
                     limit: int = DEFAULT_LIMIT) -> Iterator[Poset]:
    """One representative per isomorphism class, in canonical-form order."""
    if n > limit:
        raise SearchLimitError(f"size {n} exceeds the limit {limit}")
    if n < 1:
        return
    seen = set()
    for down_strict in _labelled_posets(n):
        up = [0] * n
        for i in range(n):
            up[i] |= 1 << i
            m = down_strict[i]
            while m:
                b = m & -m
                up[b.bit_length() - 1] |= 1 << i
                m ^= b
        heights = _heights(down_strict, n)
        seen.add(_canonical_from_masks(up, heights, n))
    for key in sorted(seen):
        p = _key_to_poset(key, n)
        if require_bounded and not p.bounded:
            continue
        yield p


def complement_candidates(p: Poset) -> list[list[int]]:
    """Per-element lists of all y with U(x,y) = {1} and L(x,y) = {0}."""
    if not p.bounded:
        raise SearchLimitError("complementations require a bounded poset")
    up, down = p.up_masks(), p.down_masks()
    top_mask, bot_mask = 1 << p.top, 1 << p.bottom
    return [[y for y in range(p.n)
             if up[x] & up[y] == top_mask and down[x] & down[y] == bot_mask]
            for x in range(p.n)]


def enumerate_complementations(p: Poset) -> list[ComplementedPoset]:
    """All total maps satisfying both LU-laws, in lexicographic table order.

    The two laws constrain each element independently, so the valid maps
    are exactly the choice functions through the candidate lists.
    """
    cands = complement_candidates(p)
    if any(not c for c in cands):
        return []
    return [ComplementedPoset(p, choice) for choice in product(*cands)]


# -- property registry for witness hunting --------------------------------------

def _plain(struct) -> Poset:
    return struct.poset if isinstance(struct, ComplementedPoset) else struct


def _poset_prop(check: Callable) -> Callable:
    return lambda s: check(_plain(s)).holds


def _lattice_prop(check: Callable) -> Callable:
    """On a non-lattice the lattice-only property counts as False."""
    def run(struct) -> bool:
        if not is_lattice(_plain(struct)).holds:
            return False
        return check(struct).holds
    return run


def _has_complementation(struct) -> bool:
    p = _plain(struct)
    return p.bounded and all(complement_candidates(p))


PROPERTIES: dict[str, tuple[Callable, bool]] = {
    # name -> (predicate on Poset / (poset, complementation) pair,
    #          concerns the complementation)
    "lattice": (_poset_prop(is_lattice), False),
    "bounded": (lambda s: _plain(s).bounded, False),
    "modular": (_poset_prop(props.is_modular_poset), False),
    "distributive": (_poset_prop(props.is_distributive_poset), False),
    "strongly-modular": (_poset_prop(props.is_strongly_modular), False),
    "strictly-modular": (_poset_prop(props.is_strictly_modular), False),
    "modular-lattice": (_lattice_prop(lambda s: props.is_modular_lattice(_plain(s))), False),
    "complemented": (_has_complementation, False),
    "involution": (lambda s: unary_properties(s)["involution"].holds, True),
    "antitone": (lambda s: unary_properties(s)["antitone"].holds, True),
    "orthoposet": (lambda s: props.is_orthoposet(s).holds, True),
    "boolean-poset": (lambda s: props.is_boolean_poset(s).holds, True),
    "ortholattice": (_lattice_prop(props.is_orthoposet), True),
    "orthomodular-lattice": (_lattice_prop(props.is_orthomodular_lattice), True),
    "orthomodular-law": (_lattice_prop(props.orthomodular_law), True),
}


def find_witness(spec: list[tuple[str, bool]], max_n: int,
                 require_bounded: bool = True, complemented: bool = False,
                 limit: int = DEFAULT_LIMIT):
    """First canonical structure (smallest n, then canonical order, then
    complementation order) matching every (property, expected) constraint.

    Bounded posets are the default search universe. With ``complemented``
    (or when any requested property concerns the complementation) each
    candidate is a (poset, complementation) pair and the first matching
    pair is returned; otherwise plain posets are searched and
    complementation properties are rejected.
    """
    checks = []
    for name, expected in spec:
        if name not in PROPERTIES:
            raise KeyError(f"unknown property {name!r}")
        fn, needs_comp = PROPERTIES[name]
        if needs_comp and not complemented:
            raise SearchLimitError(
                f"property {name!r} concerns the complementation; "
                "search complemented pairs instead")
        checks.append((fn, expected))
    for n in range(1, max_n + 1):
        for p in enumerate_posets(n, require_bounded=require_bounded, limit=limit):
            if complemented:
                if not p.bounded:
                    continue
                for cp in enumerate_complementations(p):
                    if all(fn(cp) == expected for fn, expected in checks):
                        return cp
            else:
                if all(fn(p) == expected for fn, expected in checks):
                    return p
    return None
