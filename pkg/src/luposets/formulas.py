"""Parser and evaluator for LU-identities and quasi-identities.

Grammar (whitespace insignificant)::

    formula  :=  'forall' var+ [ 'where' cond (',' cond)* ] ':' term rel term
    rel      :=  '=' | '≈' | '<='          (= set equality, <= set inclusion)
    cond     :=  term '<=' term            (at least one side a variable)
    term     :=  atom (('v' atom)* | ('^' atom)*)
    atom     :=  primary { ' }
    primary  :=  '0' | '1' | var | '(' term ')'
              |  ('L'|'U'|'LU'|'UL') '(' term {',' term} ')'
              |  ('M'|'R') '(' term ',' term ')'

Every term denotes a subset: a variable denotes its singleton, cones absorb
mixed element/set arguments by union, prime maps elementwise, and M/R expand
to L(U(x,y'),y) and LU(L(x,y),x'). ``v``/``^`` are lattice sugar restricted
to singleton operands. In conditions, ``x <= T`` means x is a lower bound of
T and ``T <= z`` means z is an upper bound of T (so both generalize plain
element order).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product

from .cones import lcone_mask, ucone_mask
from .errors import FormulaEvalError, FormulaSyntaxError
from .poset import ComplementedPoset, Poset
from .verdicts import Verdict, Witness

_RESERVED = {"forall", "where", "v", "L", "U", "LU", "UL", "M", "R"}


# -- AST ----------------------------------------------------------------------

@dataclass(frozen=True)
class Var:
    name: str


@dataclass(frozen=True)
class Const:
    which: int  # 0 or 1


@dataclass(frozen=True)
class Prime:
    child: object


@dataclass(frozen=True)
class Cone:
    op: str  # 'L' or 'U'
    args: tuple


@dataclass(frozen=True)
class Join:
    args: tuple


@dataclass(frozen=True)
class Meet:
    args: tuple


@dataclass(frozen=True)
class Mop:
    which: str  # 'M' or 'R'
    left: object
    right: object


@dataclass(frozen=True)
class Cond:
    """Order constraint lower <= upper; one side is a bare variable."""
    lower: object
    upper: object


@dataclass(frozen=True)
class Formula:
    vars: tuple[str, ...]
    conditions: tuple[Cond, ...]
    relation: str  # 'EQ' or 'SUBSETEQ'
    lhs: object
    rhs: object


# -- tokenizer / parser --------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(?P<name>[A-Za-z_][A-Za-z_0-9]*)"
                    r"|(?P<num>[01])"
                    r"|(?P<sym><=|[(),'^=:≈≤⊆]))")

_SYM_ALIAS = {"≈": "=", "≤": "<=", "⊆": "<="}


def _tokenize(src: str):
    pos = 0
    out = []
    while pos < len(src):
        m = _TOKEN.match(src, pos)
        if m is None:
            if src[pos:].strip():
                bad = len(src) - len(src[pos:].lstrip())
                raise FormulaSyntaxError(f"unexpected character {src[bad]!r}", bad)
            break
        if m.group("name"):
            out.append(("name", m.group("name"), m.start("name")))
        elif m.group("num"):
            out.append(("num", m.group("num"), m.start("num")))
        else:
            sym = m.group("sym")
            out.append(("sym", _SYM_ALIAS.get(sym, sym), m.start("sym")))
        pos = m.end()
    out.append(("end", "", len(src)))
    return out


class _Parser:
    def __init__(self, src: str):
        self.src = src
        self.toks = _tokenize(src)
        self.i = 0
        self.vars: tuple[str, ...] = ()

    def peek(self):
        return self.toks[self.i]

    def next(self):
        t = self.toks[self.i]
        self.i += 1
        return t

    def expect(self, value):
        kind, val, pos = self.next()
        if val != value:
            raise FormulaSyntaxError(f"expected {value!r}, found {val or 'end of input'!r}", pos)

    def formula(self) -> Formula:
        kind, val, pos = self.next()
        if val != "forall":
            raise FormulaSyntaxError("formula must start with 'forall'", pos)
        names = []
        while self.peek()[0] == "name" and self.peek()[1] not in ("where",):
            kind, val, pos = self.next()
            if val in _RESERVED:
                raise FormulaSyntaxError(f"{val!r} is reserved and cannot be a variable", pos)
            if val in names:
                raise FormulaSyntaxError(f"duplicate variable {val!r}", pos)
            names.append(val)
        if not names:
            raise FormulaSyntaxError("'forall' needs at least one variable", self.peek()[2])
        self.vars = tuple(names)
        conditions = []
        if self.peek()[1] == "where":
            self.next()
            conditions.append(self.condition())
            while self.peek()[1] == ",":
                self.next()
                conditions.append(self.condition())
        self.expect(":")
        lhs = self.term()
        kind, val, pos = self.next()
        if val == "=":
            rel = "EQ"
        elif val == "<=":
            rel = "SUBSETEQ"
        else:
            raise FormulaSyntaxError("expected '=' or '<=' between the two sides", pos)
        rhs = self.term()
        kind, val, pos = self.peek()
        if kind != "end":
            raise FormulaSyntaxError(f"trailing input {val!r}", pos)
        return Formula(self.vars, tuple(conditions), rel, lhs, rhs)

    def condition(self) -> Cond:
        pos0 = self.peek()[2]
        lower = self.term()
        self.expect("<=")
        upper = self.term()
        if not isinstance(lower, Var) and not isinstance(upper, Var):
            raise FormulaSyntaxError(
                "one side of a condition must be a variable", pos0)
        return Cond(lower, upper)

    def term(self):
        first = self.atom()
        op = self.peek()[1]
        if op not in ("v", "^"):
            return first
        args = [first]
        while self.peek()[1] == op:
            self.next()
            args.append(self.atom())
        nxt = self.peek()
        if nxt[1] in ("v", "^"):
            raise FormulaSyntaxError("parenthesize mixed 'v' and '^'", nxt[2])
        return Join(tuple(args)) if op == "v" else Meet(tuple(args))

    def atom(self):
        node = self.primary()
        while self.peek()[1] == "'":
            self.next()
            node = Prime(node)
        return node

    def primary(self):
        kind, val, pos = self.next()
        if kind == "num":
            return Const(int(val))
        if val == "(":
            inner = self.term()
            self.expect(")")
            return inner
        if kind == "name":
            if val in ("L", "U", "LU", "UL"):
                args = self.arglist(val, minimum=1)
                if val == "L":
                    return Cone("L", args)
                if val == "U":
                    return Cone("U", args)
                if val == "LU":
                    return Cone("L", (Cone("U", args),))
                return Cone("U", (Cone("L", args),))
            if val in ("M", "R"):
                args = self.arglist(val, minimum=2, maximum=2)
                return Mop(val, args[0], args[1])
            if val in _RESERVED:
                raise FormulaSyntaxError(f"{val!r} cannot appear here", pos)
            if val not in self.vars:
                raise FormulaSyntaxError(f"unbound variable {val!r}", pos)
            return Var(val)
        raise FormulaSyntaxError(f"expected a term, found {val or 'end of input'!r}", pos)

    def arglist(self, head, minimum, maximum=None):
        self.expect("(")
        args = [self.term()]
        while self.peek()[1] == ",":
            self.next()
            args.append(self.term())
        self.expect(")")
        if len(args) < minimum or (maximum is not None and len(args) > maximum):
            want = str(minimum) if maximum == minimum else f"at least {minimum}"
            raise FormulaSyntaxError(
                f"{head} takes {want} argument(s), got {len(args)}", self.peek()[2])
        return tuple(args)


def parse(src: str) -> Formula:
    """Parse formula source text; errors carry the offending column."""
    return _Parser(src).formula()


# -- printing -------------------------------------------------------------------

def _fmt(node, parent=None) -> str:
    if isinstance(node, Var):
        return node.name
    if isinstance(node, Const):
        return str(node.which)
    if isinstance(node, Prime):
        inner = _fmt(node.child, "prime")
        return inner + "'"
    if isinstance(node, Cone):
        if len(node.args) == 1 and isinstance(node.args[0], Cone) \
                and node.args[0].op != node.op:
            head = node.op + node.args[0].op
            args = node.args[0].args
        else:
            head, args = node.op, node.args
        return head + "(" + ",".join(_fmt(a) for a in args) + ")"
    if isinstance(node, (Join, Meet)):
        sym = " v " if isinstance(node, Join) else " ^ "
        body = sym.join(_fmt(a, "infix") for a in node.args)
        return f"({body})" if parent in ("infix", "prime") else body
    if isinstance(node, Mop):
        return f"{node.which}({_fmt(node.left)},{_fmt(node.right)})"
    raise TypeError(f"not a term: {node!r}")


def format_formula(f: Formula) -> str:
    """Canonical concrete syntax; ``parse(format_formula(f))`` == ``f``."""
    head = "forall " + " ".join(f.vars)
    if f.conditions:
        conds = ", ".join(f"{_fmt(c.lower)} <= {_fmt(c.upper)}" for c in f.conditions)
        head += " where " + conds
    rel = "=" if f.relation == "EQ" else "<="
    return f"{head} : {_fmt(f.lhs)} {rel} {_fmt(f.rhs)}"


# -- evaluation -----------------------------------------------------------------

def _needs(node, found: set):
    if isinstance(node, Prime):
        found.add("comp")
        _needs(node.child, found)
    elif isinstance(node, Mop):
        found.add("comp")
        _needs(node.left, found)
        _needs(node.right, found)
    elif isinstance(node, Cone):
        for a in node.args:
            _needs(a, found)
    elif isinstance(node, (Join, Meet)):
        found.add("lattice")
        for a in node.args:
            _needs(a, found)
    elif isinstance(node, Const):
        found.add("bounds")


def evaluate(f: Formula, structure) -> Verdict:
    """Check ``f`` under every assignment satisfying its conditions; the
    witness is the lexicographically first violating assignment."""
    if isinstance(structure, ComplementedPoset):
        p, comp = structure.poset, structure.comp
    elif isinstance(structure, Poset):
        p, comp = structure, None
    else:
        raise TypeError("expected a Poset or ComplementedPoset")

    found: set = set()
    for node in (f.lhs, f.rhs, *[c.lower for c in f.conditions],
                 *[c.upper for c in f.conditions]):
        _needs(node, found)
    if "comp" in found and comp is None:
        raise FormulaEvalError("formula uses ' (or M/R) but the poset has no complementation")
    if "bounds" in found and not p.bounded:
        raise FormulaEvalError("formula uses 0/1 but the poset is unbounded")
    lub = glb = None
    if "lattice" in found:
        lat = p.lattice_verdict()
        if not lat.holds:
            raise FormulaEvalError(
                f"formula uses v/^ but the poset is not a lattice ({lat.witness.render()})")
        lub, glb = p.lub_table(), p.glb_table()

    down = p.down_masks()
    up = p.up_masks()

    def comp_image(mask: int) -> int:
        out = 0
        while mask:
            b = mask & -mask
            out |= 1 << comp[b.bit_length() - 1]
            mask ^= b
        return out

    def denote(node, env) -> int:
        if isinstance(node, Var):
            return 1 << env[node.name]
        if isinstance(node, Const):
            return 1 << (p.bottom if node.which == 0 else p.top)
        if isinstance(node, Prime):
            return comp_image(denote(node.child, env))
        if isinstance(node, Cone):
            u = 0
            for a in node.args:
                u |= denote(a, env)
            return lcone_mask(p, u) if node.op == "L" else ucone_mask(p, u)
        if isinstance(node, (Join, Meet)):
            tab = lub if isinstance(node, Join) else glb
            acc = None
            for a in node.args:
                m = denote(a, env)
                if m.bit_count() != 1:
                    raise FormulaEvalError(
                        "v/^ operands must denote single elements")
                e = m.bit_length() - 1
                acc = e if acc is None else int(tab[acc, e])
            return 1 << acc
        if isinstance(node, Mop):
            a = denote(node.left, env)
            b = denote(node.right, env)
            if node.which == "M":
                return lcone_mask(p, ucone_mask(p, a | comp_image(b)) | b)
            return lcone_mask(p, ucone_mask(p, lcone_mask(p, a | b) | comp_image(a)))
        raise TypeError(f"not a term: {node!r}")

    def cond_holds(c: Cond, env) -> bool:
        if isinstance(c.lower, Var):
            x = env[c.lower.name]
            return bool(lcone_mask(p, denote(c.upper, env)) >> x & 1)
        z = env[c.upper.name]
        return bool(ucone_mask(p, denote(c.lower, env)) >> z & 1)

    k = len(f.vars)
    for assign in product(range(p.n), repeat=k):
        env = dict(zip(f.vars, assign))
        if any(not cond_holds(c, env) for c in f.conditions):
            continue
        lhs = denote(f.lhs, env)
        rhs = denote(f.rhs, env)
        ok = lhs == rhs if f.relation == "EQ" else lhs & ~rhs == 0
        if not ok:
            return Verdict(False, Witness(
                {v: p.names[i] for v, i in env.items()}, "identity fails"))
    return Verdict.ok()


# -- registry --------------------------------------------------------------------

_REGISTRY_SRC = {
    "modular":
        "forall x y z where x <= z : L(U(x,y),z) = LU(x,L(y,z))",
    "distributive-1":
        "forall x y z : L(U(x,y),z) = LU(L(x,z),L(y,z))",
    "distributive-2":
        "forall x y z : LU(L(x,y),z) = L(U(x,z),U(y,z))",
    "strongly-modular-1":
        "forall x y z : L(U(x,y),U(x,z)) = LU(x,L(y,U(x,z)))",
    "strongly-modular-2":
        "forall x y z : L(U(L(x,z),y),z) = LU(L(x,z),L(y,z))",
    "orthomodular-law":
        "forall x y : x v ((x v y) ^ x') = x v y",
    "divisible-operator":
        "forall x y : M(R(x,y),x) = L(x,y)",
    "adjointness-forward":
        "forall x y z where M(x,y) <= z : L(x) <= R(y,z)",
    "adjointness-backward":
        "forall x y z where x <= U(L(y,z),y') : M(x,y) <= L(z)",
    "complement-upper":
        "forall x : U(x,x') = U(1)",
    "complement-lower":
        "forall x : L(x,x') = L(0)",
    "involution":
        "forall x : x'' = x",
}

_registry_cache: dict[str, Formula] | None = None


def builtin_registry() -> dict[str, Formula]:
    """Named formulas for the displayed identities; set-quantified
    conditions (strict modularity) exceed the first-order grammar and are
    deliberately absent."""
    global _registry_cache
    if _registry_cache is None:
        _registry_cache = {k: parse(v) for k, v in _REGISTRY_SRC.items()}
    return dict(_registry_cache)
