"""Dedekind-MacNeille completion, the sublattice generated by the image
of the base poset, and the orthocomplement extension to the completion."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import props
from .cones import lcone_mask, lu_closed_masks, render_mask, ucone_mask
from .errors import NotAnOrthoposetError
from .poset import ComplementedPoset, Poset
from .verdicts import Verdict, Witness


@dataclass(frozen=True)
class CompletionLattice:
    """The family of LU-closed subsets of ``base`` ordered by inclusion.

    ``closed_masks`` is in canonical order (size, then member list), so the
    first entry is the least closed set and the last is the whole carrier.
    ``embedding[x]`` is the index of L(x). ``star``, when present, maps each
    closed set A to L(A') (elementwise complement image).
    """

    base: Poset
    closed_masks: tuple[int, ...]
    embedding: tuple[int, ...]
    star: tuple[int, ...] | None = None

    @property
    def size(self) -> int:
        return len(self.closed_masks)

    def index_of(self, mask: int) -> int:
        try:
            return self._lookup()[mask]
        except KeyError:
            raise KeyError(f"{render_mask(self.base, mask)} is not a closed set") from None

    def _lookup(self) -> dict[int, int]:
        d = self.base._kernel_cache.get(("dm_lookup", self.closed_masks))
        if d is None:
            d = {m: i for i, m in enumerate(self.closed_masks)}
            self.base._kernel_cache[("dm_lookup", self.closed_masks)] = d
        return d

    def includes(self, i: int, j: int) -> bool:
        return self.closed_masks[i] & ~self.closed_masks[j] == 0

    def join(self, i: int, j: int) -> int:
        """A v B = LU(A u B)."""
        u = self.closed_masks[i] | self.closed_masks[j]
        return self.index_of(lcone_mask(self.base, ucone_mask(self.base, u)))

    def meet(self, i: int, j: int) -> int:
        """A ^ B = A n B."""
        return self.index_of(self.closed_masks[i] & self.closed_masks[j])

    def as_poset(self) -> Poset:
        """The inclusion order as a plain Poset; elements are named by their
        member lists, e.g. ``{0,a}``."""
        m = self.size
        names = [render_mask(self.base, mask) for mask in self.closed_masks]
        leq = np.zeros((m, m), dtype=bool)
        for i, a in enumerate(self.closed_masks):
            for j, b in enumerate(self.closed_masks):
                leq[i, j] = a & ~b == 0
        return Poset(names, leq)

    def as_complemented_poset(self) -> ComplementedPoset:
        if self.star is None:
            raise NotAnOrthoposetError("no star extension attached")
        return ComplementedPoset(self.as_poset(), self.star)


def dm_completion(p: Poset) -> CompletionLattice:
    """Enumerate every LU-closed subset exactly once, ordered canonically,
    with the embedding x -> L(x)."""
    masks = lu_closed_masks(p)
    lookup = {m: i for i, m in enumerate(masks)}
    down = p.down_masks()
    embedding = tuple(lookup[down[x]] for x in range(p.n))
    return CompletionLattice(p, tuple(masks), embedding)


def d0_sublattice(c: CompletionLattice) -> CompletionLattice:
    """Least subset of the completion containing all L(x) and closed under
    join and meet, by fixpoint iteration; inherits the canonical order."""
    members = set(c.embedding)
    while True:
        fresh = set()
        current = sorted(members)
        for i in current:
            for j in current:
                if i < j:
                    for k in (c.join(i, j), c.meet(i, j)):
                        if k not in members:
                            fresh.add(k)
        if not fresh:
            break
        members |= fresh
    masks = tuple(c.closed_masks[i] for i in sorted(members))
    lookup = {m: i for i, m in enumerate(masks)}
    down = c.base.down_masks()
    embedding = tuple(lookup[down[x]] for x in range(c.base.n))
    return CompletionLattice(c.base, masks, embedding)


def star_extension(c: CompletionLattice, cp: ComplementedPoset) -> CompletionLattice:
    """Extend the complementation to A* = L(A') on the closed sets.

    Requires ``cp`` to be an orthoposet over the completion's base; the
    defining identities of an orthocomplementation are re-verified
    exhaustively (see :func:`star_report`)."""
    if cp.poset is not c.base:
        raise ValueError("completion was not built from this poset")
    ortho = props.is_orthoposet(cp)
    if not ortho.holds:
        raise NotAnOrthoposetError(
            f"complementation is not an antitone involution: {ortho.witness.render()}")
    star = []
    for mask in c.closed_masks:
        image = _comp_image(cp, mask)
        star.append(c.index_of(lcone_mask(c.base, image)))
    out = CompletionLattice(c.base, c.closed_masks, c.embedding, tuple(star))
    report = star_report(out, cp)
    bad = [(k, v) for k, v in report.items() if not v.holds]
    if bad:
        k, v = bad[0]
        raise AssertionError(f"star extension failed check {k}: {v.render()}")
    return out


def _comp_image(cp: ComplementedPoset, mask: int) -> int:
    out = 0
    m = mask
    while m:
        b = m & -m
        out |= 1 << cp.comp[b.bit_length() - 1]
        m ^= b
    return out


def star_report(c: CompletionLattice, cp: ComplementedPoset) -> dict[str, Verdict]:
    """Exhaustively verify the six orthocomplementation facts on D(P):
    L(A') = (U(A))', antitonicity, A** = A, A v A* = P, A n A* = {0},
    and (L(a))* = L(a')."""
    p = c.base
    full = p.full_mask
    bot_ideal = p.down_masks()[p.bottom]
    checks: dict[str, Verdict] = {}

    def fail(name, **assign):
        checks[name] = Verdict(False, Witness(assign, name))

    star_mask = [c.closed_masks[s] for s in c.star]

    v = Verdict.ok()
    for i, a in enumerate(c.closed_masks):
        if lcone_mask(p, _comp_image(cp, a)) != _comp_image(cp, ucone_mask(p, a)):
            v = Verdict(False, Witness({"A": render_mask(p, a)}, "L(A') != (U(A))'"))
            break
    checks["l-prime-is-u-primed"] = v

    v = Verdict.ok()
    for i, a in enumerate(c.closed_masks):
        for j, b in enumerate(c.closed_masks):
            if a & ~b == 0 and star_mask[j] & ~star_mask[i] != 0:
                v = Verdict(False, Witness(
                    {"A": render_mask(p, a), "B": render_mask(p, b)}, "star not antitone"))
                break
        if not v.holds:
            break
    checks["antitone"] = v

    v = Verdict.ok()
    for i in range(c.size):
        if c.star[c.star[i]] != i:
            v = Verdict(False, Witness(
                {"A": render_mask(p, c.closed_masks[i])}, "A** != A"))
            break
    checks["involution"] = v

    v = Verdict.ok()
    for i, a in enumerate(c.closed_masks):
        u = a | star_mask[i]
        if lcone_mask(p, ucone_mask(p, u)) != full:
            v = Verdict(False, Witness({"A": render_mask(p, a)}, "A v A* != P"))
            break
    checks["join-is-top"] = v

    v = Verdict.ok()
    for i, a in enumerate(c.closed_masks):
        if a & star_mask[i] != bot_ideal:
            v = Verdict(False, Witness({"A": render_mask(p, a)}, "A n A* != {0}"))
            break
    checks["meet-is-bottom"] = v

    v = Verdict.ok()
    down = p.down_masks()
    for x in range(p.n):
        if star_mask[c.embedding[x]] != down[cp.comp[x]]:
            v = Verdict(False, Witness({"a": p.names[x]}, "(L(a))* != L(a')"))
            break
    checks["extends-complement"] = v
    return checks


def completion_modularity_report(p: Poset) -> dict[str, Verdict]:
    """Modularity of D(P) and D0(P) side by side with strong/strict
    modularity of P; the two one-directional implications (D0 modular
    implies strongly modular, D modular implies strictly modular) are
    asserted as internal consistency checks."""
    c = dm_completion(p)
    d0 = d0_sublattice(c)
    report = {
        "d_modular": props.is_modular_lattice(c.as_poset()),
        "d0_modular": props.is_modular_lattice(d0.as_poset()),
        "p_strongly_modular": props.is_strongly_modular(p),
        "p_strictly_modular": props.is_strictly_modular(p),
    }
    if report["d0_modular"].holds and not report["p_strongly_modular"].holds:
        raise AssertionError("D0(P) modular but P not strongly modular")
    if report["d_modular"].holds and not report["p_strictly_modular"].holds:
        raise AssertionError("D(P) modular but P not strictly modular")
    return report
