"""The two residuation constructions and their exhaustive verifiers.

Lattice case: term operations x*y = (x v y') ^ y and x->y = (x ^ y) v x'.
Poset case: operator tables M(x,y) = L(U(x,y'),y), R(x,y) = LU(L(x,y),x').
The verifiers test the conclusions directly (no modularity assumed), so
they double as counterexample engines on non-modular inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels
from .errors import MissingComplementError, NotALatticeError
from .poset import ComplementedPoset, Poset, is_lattice
from .verdicts import Verdict, Witness


@dataclass(frozen=True)
class LatticeTables:
    """Materialized n x n element tables for * (odot) and -> (arrow)."""

    cp: ComplementedPoset
    odot: np.ndarray
    arrow: np.ndarray


@dataclass(frozen=True)
class OperatorTables:
    """Materialized n x n subset tables, indexed [x, y, element]."""

    cp: ComplementedPoset
    m: np.ndarray
    r: np.ndarray


def _require_cp(cp) -> ComplementedPoset:
    if not isinstance(cp, ComplementedPoset):
        raise MissingComplementError("structure carries no complementation")
    return cp


def lattice_tables(cp: ComplementedPoset) -> LatticeTables:
    """Build the * and -> tables; requires a complemented lattice."""
    cp = _require_cp(cp)
    p = cp.poset
    lat = is_lattice(p)
    if not lat.holds:
        raise NotALatticeError(f"not a lattice: {lat.witness.render()}")
    lub, glb = p.lub_table(), p.glb_table()
    comp = np.asarray(cp.comp)
    idx = np.arange(p.n)
    odot = glb[lub[idx[:, None], comp[None, :]], idx[None, :]]
    arrow = lub[glb, comp[:, None]]
    return LatticeTables(cp, odot, arrow)


def odot(cp: ComplementedPoset, x: int, y: int) -> int:
    return int(lattice_tables(cp).odot[x, y])


def arrow(cp: ComplementedPoset, x: int, y: int) -> int:
    return int(lattice_tables(cp).arrow[x, y])


def operator_tables(cp: ComplementedPoset) -> OperatorTables:
    """Build the M and R subset tables; requires bounds and a complement."""
    cp = _require_cp(cp)
    m, r = kernels.mr_tables(cp)
    return OperatorTables(cp, m, r)


def verify_left_residuated_lattice(cp: ComplementedPoset) -> Verdict:
    """Unit laws for all x, left adjointness for all triples, then
    divisibility (x->y)*x = x^y for all pairs."""
    t = lattice_tables(cp)
    p = cp.poset
    n, names = p.n, p.names
    top = p.top
    for x in range(n):
        if t.odot[x, top] != x or t.odot[top, x] != x:
            return Verdict(False, Witness({"x": names[x]}, "unit law fails"))
    leq = p.leq
    idx = np.arange(n)
    lhs = leq[t.odot[:, :, None], idx[None, None, :]]          # x*y <= z
    rhs = leq[idx[:, None, None], t.arrow[None, :, :]]         # x <= y->z
    bad = lhs != rhs
    if bad.any():
        x, y, z = np.argwhere(bad)[0]
        return Verdict(False, Witness(
            {"x": names[x], "y": names[y], "z": names[z]}, "left adjointness fails"))
    glb = p.glb_table()
    div = t.odot[t.arrow, idx[:, None]]                        # (x->y)*x
    bad = div != glb
    if bad.any():
        x, y = np.argwhere(bad)[0]
        return Verdict(False, Witness(
            {"x": names[x], "y": names[y]}, "divisibility fails"))
    return Verdict.ok()


def operator_adjointness(cp: ComplementedPoset,
                         tables: OperatorTables | None = None) -> Verdict:
    """M(x,y) subset of L(z) iff L(x) subset of R(y,z), all triples; the
    forward implication is scanned fully before the backward one."""
    t = tables or operator_tables(cp)
    w = kernels.operator_adjointness_witness(cp, t.m, t.r)
    if w is None:
        return Verdict.ok()
    d, x, y, z = w
    names = cp.poset.names
    which = "forward" if d == 1 else "backward"
    return Verdict(False, Witness(
        {"x": names[x], "y": names[y], "z": names[z]},
        f"operator adjointness fails ({which})"))


def operator_divisibility(cp: ComplementedPoset,
                          tables: OperatorTables | None = None) -> Verdict:
    """M(R(x,y),x) = L(x,y) for all pairs."""
    t = tables or operator_tables(cp)
    w = kernels.operator_divisibility_witness(cp, t.r)
    if w is None:
        return Verdict.ok()
    x, y = w
    names = cp.poset.names
    return Verdict(False, Witness(
        {"x": names[x], "y": names[y]}, "operator divisibility fails"))


def verify_operator_left_residuated(cp: ComplementedPoset) -> Verdict:
    """Conditions (i) M(x,1) = M(1,x) = L(x), (ii) operator adjointness,
    (iii) R(x,0) = L(x'), then divisibility, each scanned exhaustively."""
    t = operator_tables(cp)
    p = cp.poset
    n, names = p.n, p.names
    down = p.leq.T
    top, bot = p.top, p.bottom
    for x in range(n):
        if (t.m[x, top] != down[x]).any() or (t.m[top, x] != down[x]).any():
            return Verdict(False, Witness({"x": names[x]}, "M(x,1) = L(x) fails"))
    adj = operator_adjointness(cp, t)
    if not adj.holds:
        return adj
    for x in range(n):
        if (t.r[x, bot] != down[cp.comp[x]]).any():
            return Verdict(False, Witness({"x": names[x]}, "R(x,0) = L(x') fails"))
    return operator_divisibility(cp, t)


def residuum_order_test(cp: ComplementedPoset,
                        tables: OperatorTables | None = None) -> Verdict:
    """x <= y iff R(x,y) = P, for all pairs."""
    t = tables or operator_tables(cp)
    w = kernels.residuum_order_witness(cp, t.r)
    if w is None:
        return Verdict.ok()
    x, y = w
    names = cp.poset.names
    return Verdict(False, Witness(
        {"x": names[x], "y": names[y]}, "R(x,y) = P does not match x <= y"))


def lattice_operator_agreement(cp: ComplementedPoset) -> Verdict:
    """On a complemented lattice the two constructions agree:
    M(x,y) = L(x*y) and R(x,y) = L(x->y) for all pairs."""
    lt = lattice_tables(cp)
    ot = operator_tables(cp)
    p = cp.poset
    down = p.leq.T
    names = p.names
    bad = (ot.m != down[lt.odot]).any(axis=2)
    if bad.any():
        x, y = np.argwhere(bad)[0]
        return Verdict(False, Witness(
            {"x": names[x], "y": names[y]}, "M(x,y) != L(x*y)"))
    bad = (ot.r != down[lt.arrow]).any(axis=2)
    if bad.any():
        x, y = np.argwhere(bad)[0]
        return Verdict(False, Witness(
            {"x": names[x], "y": names[y]}, "R(x,y) != L(x->y)"))
    return Verdict.ok()


def render_lattice_tables(t: LatticeTables) -> str:
    """Deterministic text layout: rows by x, columns by y."""
    names = t.cp.poset.names
    out = []
    for title, tab in (("odot", t.odot), ("arrow", t.arrow)):
        out.append(f"table {title}")
        out.append("x\\y " + " ".join(names))
        for x, row in enumerate(tab):
            out.append(names[x] + " " + " ".join(names[v] for v in row))
    return "\n".join(out) + "\n"


def render_operator_tables(t: OperatorTables) -> str:
    """Subsets rendered as sorted label lists in braces."""
    names = t.cp.poset.names
    out = []
    for title, tab in (("M", t.m), ("R", t.r)):
        out.append(f"table {title}")
        out.append("x\\y " + " ".join(names))
        for x in range(len(names)):
            cells = []
            for y in range(len(names)):
                members = np.flatnonzero(tab[x, y])
                cells.append("{" + ",".join(names[i] for i in members) + "}")
            out.append(names[x] + " " + " ".join(cells))
    return "\n".join(out) + "\n"
