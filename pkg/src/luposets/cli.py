"""Command-line surface.

Exit codes: 0 = property holds / output written; 1 = property fails
(witness on stdout); 2 = usage or validation error (diagnostics on
stderr). All output is byte-deterministic across runs and ``--jobs``
values.
"""

from __future__ import annotations

import argparse
import sys

from . import catalog, completion, formulas, props, residuation, search
from .errors import LuposetsError
from .io import parse_poset, serialize_poset
from .poset import ComplementedPoset, is_lattice, unary_properties
from .verdicts import Verdict

CLI_BUILTINS = ("fig1", "fig2", "p6", "fig1xfig2", "fig1xp6", "boolean8", "n5")


def _plain(structure):
    return structure.poset if isinstance(structure, ComplementedPoset) else structure


def _need_cp(structure) -> ComplementedPoset:
    if not isinstance(structure, ComplementedPoset):
        raise LuposetsError("this property needs a complement section in the file")
    return structure


CHECKS = {
    "lattice": lambda s: is_lattice(_plain(s)),
    "modular": lambda s: props.is_modular_poset(_plain(s)),
    "distributive": lambda s: props.is_distributive_poset(_plain(s)),
    "strongly-modular": lambda s: props.is_strongly_modular(_plain(s)),
    "strictly-modular": lambda s: props.is_strictly_modular(_plain(s)),
    "modular-lattice": lambda s: props.is_modular_lattice(_plain(s)),
    "involution": lambda s: unary_properties(_need_cp(s))["involution"],
    "antitone": lambda s: unary_properties(_need_cp(s))["antitone"],
    "orthoposet": lambda s: props.is_orthoposet(_need_cp(s)),
    "boolean-poset": lambda s: props.is_boolean_poset(_need_cp(s)),
    "ortholattice": lambda s: props.is_ortholattice(_need_cp(s)),
    "orthomodular-lattice": lambda s: props.is_orthomodular_lattice(_need_cp(s)),
    "orthomodular-law": lambda s: props.orthomodular_law(_need_cp(s)),
    "left-residuated": lambda s: residuation.verify_left_residuated_lattice(_need_cp(s)),
    "operator-residuated": lambda s: residuation.verify_operator_left_residuated(_need_cp(s)),
    "residuum-order": lambda s: residuation.residuum_order_test(_need_cp(s)),
    "operator-agreement": lambda s: residuation.lattice_operator_agreement(_need_cp(s)),
}


def _read(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return parse_poset(fh.read())
    except OSError as e:
        raise LuposetsError(f"{path}: {e.strerror}") from e


def _write(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)


def _verdict_exit(v: Verdict) -> int:
    if v.holds:
        print("holds")
        return 0
    print(f"fails: {v.witness.render()}")
    return 1


def _cmd_check(args) -> int:
    structure = _read(args.file)
    return _verdict_exit(CHECKS[args.property](structure))


def _cmd_residuate(args) -> int:
    structure = _read(args.file)
    cp = _need_cp(structure)
    if args.operator:
        text = residuation.render_operator_tables(residuation.operator_tables(cp))
    else:
        text = residuation.render_lattice_tables(residuation.lattice_tables(cp))
    _write(text, args.output)
    return 0


def _cmd_complete(args) -> int:
    structure = _read(args.file)
    p = _plain(structure)
    c = completion.dm_completion(p)
    if args.d0:
        c = completion.d0_sublattice(c)
    if args.star:
        c = completion.star_extension(c, _need_cp(structure))
        out = serialize_poset(c.as_complemented_poset())
    else:
        out = serialize_poset(c.as_poset())
    names = c.as_poset().names
    embedding = "".join(f"# embed {p.names[x]} -> {names[c.embedding[x]]}\n"
                        for x in range(p.n))
    _write(out + embedding, args.output)
    return 0


def _cmd_eval(args) -> int:
    structure = _read(args.file)
    if args.builtin is not None:
        registry = formulas.builtin_registry()
        if args.builtin not in registry:
            raise LuposetsError(
                f"unknown builtin formula {args.builtin!r}; "
                f"choose from {', '.join(sorted(registry))}")
        formula = registry[args.builtin]
    else:
        formula = formulas.parse(args.formula)
    return _verdict_exit(formulas.evaluate(formula, structure))


def _cmd_product(args) -> int:
    from .poset import direct_product
    a = _read(args.file1)
    b = _read(args.file2)
    _write(serialize_poset(direct_product(a, b)), args.output)
    return 0


def _cmd_search(args) -> int:
    spec = []
    for req in args.require:
        name, _, value = req.partition("=")
        expected = True
        if value:
            if value not in ("true", "false"):
                raise LuposetsError(f"expected {name}=true or {name}=false")
            expected = value == "true"
        spec.append((name, expected))
    witness = search.find_witness(spec, args.size, complemented=args.complemented)
    if witness is None:
        print(f"no witness up to size {args.size}", file=sys.stderr)
        return 1
    _write(serialize_poset(witness), args.output)
    return 0


def _cmd_builtin(args) -> int:
    _write(serialize_poset(catalog.builtin(args.name)), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="luposets",
        description="Verify order-theoretic properties and residuation "
                    "constructions on finite posets.")
    ap.add_argument("--jobs", type=int, default=1, metavar="K",
                    help="worker threads for the compiled backend "
                         "(results are independent of K)")
    sub = ap.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="decide a property, with witness on failure")
    c.add_argument("file")
    c.add_argument("--property", required=True, choices=sorted(CHECKS))
    c.set_defaults(fn=_cmd_check)

    c = sub.add_parser("residuate", help="emit the residuation tables")
    c.add_argument("file")
    c.add_argument("--operator", action="store_true",
                   help="emit the M/R subset tables instead of odot/arrow")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_residuate)

    c = sub.add_parser("complete", help="emit the Dedekind-MacNeille completion")
    c.add_argument("file")
    c.add_argument("--d0", action="store_true",
                   help="restrict to the sublattice generated by the base")
    c.add_argument("--star", action="store_true",
                   help="extend the complementation to the completion")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_complete)

    c = sub.add_parser("eval", help="evaluate an LU-identity over the poset")
    c.add_argument("file")
    g = c.add_mutually_exclusive_group(required=True)
    g.add_argument("--formula")
    g.add_argument("--builtin")
    c.set_defaults(fn=_cmd_eval)

    c = sub.add_parser("product", help="direct product of two posets")
    c.add_argument("file1")
    c.add_argument("file2")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_product)

    c = sub.add_parser("search", help="hunt for a poset matching constraints")
    c.add_argument("--size", type=int, required=True, metavar="N")
    c.add_argument("--require", action="append", default=[], metavar="PROP[=BOOL]")
    c.add_argument("--complemented", action="store_true",
                   help="search (poset, complementation) pairs")
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_search)

    c = sub.add_parser("builtin", help="emit a built-in structure")
    c.add_argument("name", choices=CLI_BUILTINS)
    c.add_argument("-o", "--output")
    c.set_defaults(fn=_cmd_builtin)
    return ap


def _apply_jobs(jobs: int) -> None:
    if jobs < 1:
        raise LuposetsError("--jobs must be at least 1")
    if jobs == 1:
        return
    from . import kernels
    if kernels.backend_name() == "numba":
        import numba
        numba.set_num_threads(min(jobs, numba.config.NUMBA_NUM_THREADS))


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        _apply_jobs(args.jobs)
        return args.fn(args)
    except LuposetsError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except KeyError as e:
        print(f"error: {e.args[0]}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
