"""The L and U cone operators on subsets of a fixed poset.

``L(A)`` is the set of common lower bounds of ``A``; ``U(A)`` the common
upper bounds. ``L(emptyset) = U(emptyset) = P`` (the conditions are vacuous).
Subsets are packed bitmasks; cones over singletons come from the poset's
cached ideal/filter rows, cones over sets intersect those rows.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .errors import MixedPosetError
from .poset import Poset


def lcone_mask(p: Poset, mask: int) -> int:
    """L of a bitmask subset, as a bitmask."""
    down = p.down_masks()
    acc = p.full_mask
    m = mask
    while m and acc:
        b = m & -m
        acc &= down[b.bit_length() - 1]
        m ^= b
    return acc


def ucone_mask(p: Poset, mask: int) -> int:
    """U of a bitmask subset, as a bitmask."""
    up = p.up_masks()
    acc = p.full_mask
    m = mask
    while m and acc:
        b = m & -m
        acc &= up[b.bit_length() - 1]
        m ^= b
    return acc


@dataclass(frozen=True)
class Subset:
    """A set of elements of a fixed ambient poset."""

    poset: Poset
    mask: int

    def __post_init__(self):
        if self.mask < 0 or self.mask >> self.poset.n:
            raise ValueError("subset members outside the carrier")

    # -- constructors ------------------------------------------------------

    @classmethod
    def of(cls, poset: Poset, labels: Iterable[str]) -> "Subset":
        mask = 0
        for s in labels:
            mask |= 1 << poset.index(s)
        return cls(poset, mask)

    @classmethod
    def full(cls, poset: Poset) -> "Subset":
        return cls(poset, poset.full_mask)

    @classmethod
    def empty(cls, poset: Poset) -> "Subset":
        return cls(poset, 0)

    # -- set algebra ---------------------------------------------------------

    def _check(self, other: "Subset") -> None:
        if self.poset is not other.poset:
            raise MixedPosetError("subsets over different ambient posets")

    def __or__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.poset, self.mask | other.mask)

    def __and__(self, other: "Subset") -> "Subset":
        self._check(other)
        return Subset(self.poset, self.mask & other.mask)

    def __le__(self, other: "Subset") -> bool:
        self._check(other)
        return self.mask & ~other.mask == 0

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __iter__(self) -> Iterator[int]:
        m = self.mask
        while m:
            b = m & -m
            yield b.bit_length() - 1
            m ^= b

    def labels(self) -> tuple[str, ...]:
        return tuple(self.poset.names[i] for i in self)

    def render(self) -> str:
        return "{" + ",".join(self.labels()) + "}"

    def __repr__(self):
        return f"Subset({self.render()})"


def lower_cone(a: Subset) -> Subset:
    return Subset(a.poset, lcone_mask(a.poset, a.mask))


def upper_cone(a: Subset) -> Subset:
    return Subset(a.poset, ucone_mask(a.poset, a.mask))


def lu_closure(a: Subset) -> Subset:
    """LU(A) = L(U(A)): extensive, monotone, idempotent."""
    return Subset(a.poset, lcone_mask(a.poset, ucone_mask(a.poset, a.mask)))


def ul_closure(a: Subset) -> Subset:
    """UL(A) = U(L(A)), the order dual of :func:`lu_closure`."""
    return Subset(a.poset, ucone_mask(a.poset, lcone_mask(a.poset, a.mask)))


def lu_closed_masks(p: Poset) -> list[int]:
    """All LU-closed subsets as bitmasks, in canonical order.

    A set is LU-closed iff it is an intersection of principal ideals
    (L(S) = intersection of L(s) over s, and A = L(U(A)) for closed A), so
    closing {P} under intersection with every L(x) enumerates them in time
    polynomial in the output. Canonical order is (size, member list).
    """
    closed = {p.full_mask}
    for dm in p.down_masks():
        closed |= {c & dm for c in closed}
    return sorted(closed, key=lambda m: (m.bit_count(), _mask_key(m)))


def _mask_key(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def render_mask(p: Poset, mask: int) -> str:
    """Braced, comma-joined member labels in index order, e.g. ``{0,a}``."""
    return Subset(p, mask).render()
