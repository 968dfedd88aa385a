"""Finite posets with optional bounds and complementation.

Elements are dense integer indices ``0..n-1``; labels are metadata only.
All structures are immutable after construction, so any operation may be
called concurrently (lazy caches are idempotent to recompute).
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from .errors import (
    ComplementationError,
    NotALatticeError,
    PosetConstructionError,
)
from .verdicts import Verdict


def _to_mask(bits: np.ndarray) -> int:
    """Pack a 1-d bool array into a Python int (bit i set iff bits[i])."""
    return int.from_bytes(np.packbits(bits, bitorder="little").tobytes(), "little")


class Poset:
    """A finite partial order given by its full relation matrix.

    ``leq[i, j]`` means element ``i`` is below element ``j``. The matrix is
    validated (reflexive, antisymmetric, transitive) on construction and
    frozen. ``bottom`` and ``top`` are detected, never asserted by callers.
    """

    __slots__ = (
        "names", "leq", "n", "bottom", "top", "_index",
        "_down_masks", "_up_masks", "_lub", "_glb", "_lattice_verdict",
        "_kernel_cache",
    )

    def __init__(self, names: Sequence[str], leq: np.ndarray):
        names = tuple(names)
        n = len(names)
        if len(set(names)) != n:
            dup = next(s for s in names if names.count(s) > 1)
            raise PosetConstructionError(f"duplicate label {dup!r}")
        for s in names:
            if not s or any(c.isspace() for c in s) or "<" in s or ":" in s:
                raise PosetConstructionError(
                    f"label {s!r} must be a nonempty token without whitespace, '<' or ':'")
        leq = np.asarray(leq, dtype=bool)
        if leq.shape != (n, n):
            raise PosetConstructionError(f"order matrix must be {n}x{n}")
        if not leq[np.diag_indices(n)].all():
            raise PosetConstructionError("order is not reflexive")
        if n and ((leq & leq.T) & ~np.eye(n, dtype=bool)).any():
            i, j = np.argwhere((leq & leq.T) & ~np.eye(n, dtype=bool))[0]
            raise PosetConstructionError(
                f"order is not antisymmetric: {names[i]} <= {names[j]} <= {names[i]}")
        if ((leq @ leq) & ~leq).any():
            raise PosetConstructionError("order is not transitive")
        leq = leq.copy()
        leq.flags.writeable = False
        self.names = names
        self.leq = leq
        self.n = n
        self._index = {s: i for i, s in enumerate(names)}
        below_all = leq.all(axis=1)
        above_all = leq.all(axis=0)
        self.bottom = int(np.flatnonzero(below_all)[0]) if below_all.any() else None
        self.top = int(np.flatnonzero(above_all)[0]) if above_all.any() else None
        self._down_masks = None
        self._up_masks = None
        self._lub = None
        self._glb = None
        self._lattice_verdict = None
        self._kernel_cache = {}

    # -- basic queries ----------------------------------------------------

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise PosetConstructionError(f"unknown label {label!r}") from None

    def le(self, x: int, y: int) -> bool:
        return bool(self.leq[x, y])

    @property
    def bounded(self) -> bool:
        return self.bottom is not None and self.top is not None

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def down_masks(self) -> tuple[int, ...]:
        """Principal ideals as bitmasks: bit y of down_masks()[x] iff y <= x."""
        if self._down_masks is None:
            self._down_masks = tuple(_to_mask(self.leq[:, x]) for x in range(self.n))
        return self._down_masks

    def up_masks(self) -> tuple[int, ...]:
        """Principal filters as bitmasks: bit y of up_masks()[x] iff x <= y."""
        if self._up_masks is None:
            self._up_masks = tuple(_to_mask(self.leq[x, :]) for x in range(self.n))
        return self._up_masks

    def __repr__(self):
        return f"Poset({self.n} elements: {' '.join(self.names)})"

    def __eq__(self, other):
        return self is other

    def __hash__(self):
        return id(self)

    # -- lattice structure -------------------------------------------------

    def lattice_verdict(self) -> Verdict:
        """Holds iff every pair has a least upper bound and a greatest lower
        bound; on failure the witness is the first such pair in index order."""
        if self._lattice_verdict is None:
            self._lattice_verdict = self._compute_lattice()
        return self._lattice_verdict

    def _compute_lattice(self) -> Verdict:
        n = self.n
        up = self.up_masks()
        down = self.down_masks()
        lub = np.full((n, n), -1, dtype=np.int32)
        glb = np.full((n, n), -1, dtype=np.int32)
        for x in range(n):
            for y in range(n):
                ub = up[x] & up[y]
                m = ub
                while m:
                    b = m & -m
                    i = b.bit_length() - 1
                    if ub & ~up[i] == 0:
                        lub[x, y] = i
                        break
                    m ^= b
                else:
                    self._lub = self._glb = None
                    return Verdict.fail(
                        "no least upper bound",
                        x=self.names[x], y=self.names[y])
                lb = down[x] & down[y]
                m = lb
                while m:
                    b = m & -m
                    i = b.bit_length() - 1
                    if lb & ~down[i] == 0:
                        glb[x, y] = i
                        break
                    m ^= b
                else:
                    self._lub = self._glb = None
                    return Verdict.fail(
                        "no greatest lower bound",
                        x=self.names[x], y=self.names[y])
        lub.flags.writeable = False
        glb.flags.writeable = False
        self._lub = lub
        self._glb = glb
        return Verdict.ok()

    def lub_table(self) -> np.ndarray:
        if not self.lattice_verdict().holds:
            w = self.lattice_verdict().witness
            raise NotALatticeError(f"not a lattice: {w.render()}")
        return self._lub

    def glb_table(self) -> np.ndarray:
        self.lub_table()
        return self._glb


class ComplementedPoset:
    """A bounded poset together with a validated complementation map.

    The map satisfies, for every x, the two LU-laws ``U(x, x') = {top}``
    and ``L(x, x') = {bottom}``. Posets without any such map (e.g. ``p6``)
    simply stay plain :class:`Poset` instances.
    """

    __slots__ = ("poset", "comp")

    def __init__(self, poset: Poset, comp: Sequence[int]):
        comp = tuple(int(c) for c in comp)
        bad = check_complement(poset, comp)
        if bad is not None:
            x, law = bad
            raise ComplementationError(
                f"complementation law violated at {poset.names[x]}: "
                f"{law}({poset.names[x]},{poset.names[comp[x]]}) is not "
                + ("{" + poset.names[poset.top if law == 'U' else poset.bottom] + "}"),
                element=poset.names[x], law=law)
        self.poset = poset
        self.comp = comp

    @property
    def names(self):
        return self.poset.names

    @property
    def n(self):
        return self.poset.n

    def comp_label(self, label: str) -> str:
        return self.poset.names[self.comp[self.poset.index(label)]]

    def __repr__(self):
        pairs = " ".join(f"{a}:{self.poset.names[c]}"
                         for a, c in zip(self.poset.names, self.comp))
        return f"ComplementedPoset({pairs})"


def check_complement(poset: Poset, comp: Sequence[int]) -> tuple[int, str] | None:
    """Return (element, law) for the first LU-law violation, or None.

    Precondition: the poset is bounded and ``comp`` is total.
    """
    if not poset.bounded:
        raise ComplementationError("complementation requires both bounds")
    if len(comp) != poset.n or any(not 0 <= c < poset.n for c in comp):
        raise ComplementationError("complement map must be total over the carrier")
    up = poset.up_masks()
    down = poset.down_masks()
    top_mask = 1 << poset.top
    bot_mask = 1 << poset.bottom
    for x in range(poset.n):
        if up[x] & up[comp[x]] != top_mask:
            return x, "U"
        if down[x] & down[comp[x]] != bot_mask:
            return x, "L"
    return None


def from_covers(names: Sequence[str],
                covers: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from its Hasse diagram.

    The order is the reflexive-transitive closure of the cover pairs;
    bounds are detected if a unique minimum/maximum exists.
    """
    names = tuple(names)
    n = len(names)
    index = {}
    for i, s in enumerate(names):
        if s in index:
            raise PosetConstructionError(f"duplicate label {s!r}")
        index[s] = i
    rel = np.eye(n, dtype=bool)
    for lo, hi in covers:
        if lo not in index:
            raise PosetConstructionError(f"unknown label {lo!r} in cover pair")
        if hi not in index:
            raise PosetConstructionError(f"unknown label {hi!r} in cover pair")
        if lo == hi:
            raise PosetConstructionError(f"cycle detected: cover {lo!r}<{hi!r}")
        rel[index[lo], index[hi]] = True
    while True:
        new = rel | (rel @ rel)
        if (new == rel).all():
            break
        rel = new
    cyc = (rel & rel.T) & ~np.eye(n, dtype=bool)
    if cyc.any():
        i, j = np.argwhere(cyc)[0]
        raise PosetConstructionError(
            f"cycle detected through {names[i]!r} and {names[j]!r}")
    return Poset(names, rel)


def attach_complement(p: Poset, comp: dict[str, str]) -> ComplementedPoset:
    """Validate a label-level complement map and attach it to ``p``."""
    missing = [s for s in p.names if s not in comp]
    if missing:
        raise ComplementationError(f"complement map missing {missing[0]!r}")
    table = [p.index(comp[s]) for s in p.names]
    return ComplementedPoset(p, table)


def direct_product(p, q):
    """Componentwise direct product.

    Accepts plain or complemented posets; the result carries a complement
    exactly when both factors do. Pair labels are joined with ``.``.
    """
    cp_p = p if isinstance(p, ComplementedPoset) else None
    cp_q = q if isinstance(q, ComplementedPoset) else None
    pp = cp_p.poset if cp_p else p
    qq = cp_q.poset if cp_q else q
    names = tuple(f"{a}.{b}" for a in pp.names for b in qq.names)
    leq = np.kron(pp.leq, qq.leq).astype(bool)
    prod = Poset(names, leq)
    if cp_p is not None and cp_q is not None:
        comp = [cp_p.comp[i] * qq.n + cp_q.comp[j]
                for i in range(pp.n) for j in range(qq.n)]
        return ComplementedPoset(prod, comp)
    return prod


def dual(p: Poset) -> Poset:
    """Transpose the order; bounds swap roles."""
    return Poset(p.names, p.leq.T)


def is_lattice(p: Poset) -> Verdict:
    return p.lattice_verdict()


def unary_properties(cp: ComplementedPoset) -> dict[str, Verdict]:
    """Check whether the complementation is an involution and antitone."""
    p, comp = cp.poset, cp.comp
    involution = Verdict.ok()
    for x in range(p.n):
        if comp[comp[x]] != x:
            involution = Verdict.fail(
                f"{p.names[x]}'' = {p.names[comp[comp[x]]]}", x=p.names[x])
            break
    antitone = Verdict.ok()
    for x in range(p.n):
        for y in range(p.n):
            if p.leq[x, y] and not p.leq[comp[y], comp[x]]:
                antitone = Verdict.fail(
                    f"{p.names[x]} <= {p.names[y]} but "
                    f"{p.names[comp[y]]} !<= {p.names[comp[x]]}",
                    x=p.names[x], y=p.names[y])
                break
        if not antitone.holds:
            break
    return {"involution": involution, "antitone": antitone}
