"""Decision procedures for the structural properties of posets.

Each checker returns a :class:`Verdict`; a failing verdict carries the
lexicographically first falsifying assignment of its scan order.
"""

from __future__ import annotations

from . import kernels
from .cones import lu_closed_masks, render_mask
from .errors import NotALatticeError
from .poset import ComplementedPoset, Poset, is_lattice, unary_properties
from .verdicts import Verdict, Witness


def _triple_witness(p: Poset, xyz, note="") -> Verdict:
    x, y, z = xyz
    return Verdict(False, Witness(
        {"x": p.names[x], "y": p.names[y], "z": p.names[z]}, note))


def is_modular_poset(p: Poset) -> Verdict:
    """L(U(x,y),z) = LU(x,L(y,z)) for all x, y, z with x <= z."""
    w = kernels.modularity_witness(p)
    if w is None:
        return Verdict.ok()
    return _triple_witness(p, w, "modularity fails")


def is_distributive_poset(p: Poset) -> Verdict:
    """Both equivalent distributive LU-identities; the witness comes from
    the first identity, and the two verdicts are asserted to agree."""
    w1 = kernels.distributivity_witness(p, 1)
    w2 = kernels.distributivity_witness(p, 2)
    if (w1 is None) != (w2 is None):
        raise AssertionError(
            "the two distributive LU-identities disagreed; "
            f"identity 1: {w1}, identity 2: {w2}")
    if w1 is None:
        return Verdict.ok()
    return _triple_witness(p, w1, "distributive identity 1 fails")


def is_strongly_modular(p: Poset) -> Verdict:
    """The two strong-modularity LU-identities; identity 1 is scanned over
    all triples before identity 2, and the witness is tagged with the
    identity that failed."""
    w = kernels.strong_modularity_witness(p)
    if w is None:
        return Verdict.ok()
    ident, x, y, z = w
    return _triple_witness(p, (x, y, z), f"strong modularity identity {ident} fails")


def is_strictly_modular(p: Poset) -> Verdict:
    """The two subset-quantified strict-modularity conditions.

    Any subset Z enters condition 1 only through L(Z), and L(Z) ranges over
    exactly the LU-closed sets, so the check quantifies one closed set A in
    place of Z (x <= Z becomes x in A); dually for condition 2 with L(X)
    replaced by A and L(X) <= z becoming z in U(A). This replaces the 2^n
    subset scan by one pass over the completion.
    """
    closed = lu_closed_masks(p)
    w = kernels.strict_modularity_witness(p, closed)
    if w is None:
        return Verdict.ok()
    cond = w[0]
    if cond == 1:
        _, x, y, a = w
        return Verdict(False, Witness(
            {"x": p.names[x], "y": p.names[y], "Z": render_mask(p, closed[a])},
            "strict modularity condition 1 fails"))
    _, a, y, z = w
    return Verdict(False, Witness(
        {"X": render_mask(p, closed[a]), "y": p.names[y], "z": p.names[z]},
        "strict modularity condition 2 fails"))


def is_strictly_modular_naive(p: Poset) -> Verdict:
    """Brute-force oracle quantifying over all 2^n subsets directly.

    Only usable for small posets; kept as the independent cross-check for
    the completion-reduced checker.
    """
    from .cones import lcone_mask, ucone_mask

    n = p.n
    down = p.down_masks()
    up = p.up_masks()
    for zset in range(1 << n):
        lz = lcone_mask(p, zset)
        for x in range(n):
            if not lz >> x & 1:       # x <= Z
                continue
            for y in range(n):
                lhs = lcone_mask(p, ucone_mask(p, 1 << x | 1 << y)) & lz
                rhs = lcone_mask(p, ucone_mask(p, 1 << x | (down[y] & lz)))
                if lhs != rhs:
                    return Verdict(False, Witness(
                        {"x": p.names[x], "y": p.names[y],
                         "Z": render_mask(p, zset)},
                        "strict modularity condition 1 fails"))
    for xset in range(1 << n):
        lx = lcone_mask(p, xset)
        ulx = ucone_mask(p, lx)
        for z in range(n):
            if not ulx >> z & 1:      # L(X) <= z
                continue
            for y in range(n):
                lhs = lcone_mask(p, ulx & up[y]) & down[z]
                rhs = lcone_mask(p, ucone_mask(p, lx | (down[y] & down[z])))
                if lhs != rhs:
                    return Verdict(False, Witness(
                        {"X": render_mask(p, xset), "y": p.names[y],
                         "z": p.names[z]},
                        "strict modularity condition 2 fails"))
    return Verdict.ok()


def is_modular_lattice(p: Poset) -> Verdict:
    """(x v y) ^ (x v z) = x v (y ^ (x v z)) over all triples; the poset
    must be a lattice."""
    lat = is_lattice(p)
    if not lat.holds:
        raise NotALatticeError(f"not a lattice: {lat.witness.render()}")
    w = kernels.modular_lattice_witness(p)
    if w is None:
        return Verdict.ok()
    return _triple_witness(p, w, "modular law fails")


def orthomodular_law(cp: ComplementedPoset) -> Verdict:
    """x v ((x v y) ^ x') = x v y over all pairs; requires a lattice."""
    p = cp.poset
    lat = is_lattice(p)
    if not lat.holds:
        raise NotALatticeError(f"not a lattice: {lat.witness.render()}")
    lub, glb = p.lub_table(), p.glb_table()
    for x in range(p.n):
        for y in range(p.n):
            j = lub[x, y]
            if lub[x, glb[j, cp.comp[x]]] != j:
                return Verdict(False, Witness(
                    {"x": p.names[x], "y": p.names[y]},
                    "orthomodular law fails"))
    return Verdict.ok()


def _conjunction(parts) -> Verdict:
    """First failing constituent wins; its name prefixes the note."""
    for name, verdict in parts:
        if not verdict.holds:
            w = verdict.witness or Witness()
            note = f"{name}: {w.note}" if w.note else name
            return Verdict(False, Witness(dict(w.assignment), note))
    return Verdict.ok()


def is_orthoposet(cp: ComplementedPoset) -> Verdict:
    """The complementation (already validated on construction) must be an
    antitone involution."""
    u = unary_properties(cp)
    return _conjunction([("involution", u["involution"]),
                         ("antitone", u["antitone"])])


def is_boolean_poset(cp: ComplementedPoset) -> Verdict:
    return _conjunction([("orthoposet", is_orthoposet(cp)),
                         ("distributive", is_distributive_poset(cp.poset))])


def is_ortholattice(cp: ComplementedPoset) -> Verdict:
    lat = is_lattice(cp.poset)
    if not lat.holds:
        raise NotALatticeError(f"not a lattice: {lat.witness.render()}")
    return is_orthoposet(cp)


def is_orthomodular_lattice(cp: ComplementedPoset) -> Verdict:
    return _conjunction([("ortholattice", is_ortholattice(cp)),
                         ("orthomodular-law", orthomodular_law(cp))])
