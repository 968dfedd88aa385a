"""Built-in posets: the two worked figures, the six-element distributive
non-lattice, and standard small structures used throughout the tests."""

from __future__ import annotations

from .poset import (
    ComplementedPoset,
    Poset,
    attach_complement,
    direct_product,
    from_covers,
)

_PRIMED = ["a", "b", "c", "d", "e"]


def _self_primed_complement(labels):
    comp = {"0": "1", "1": "0"}
    for s in labels:
        comp[s] = s + "'"
        comp[s + "'"] = s
    return comp


def fig1() -> ComplementedPoset:
    """Ten-element bounded modular lattice whose involution is a
    complementation but not antitone (b <= c' yet c !<= b')."""
    p = from_covers(
        "0 a b c d c' d' b' a' 1".split(),
        [("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
         ("a", "c'"), ("a", "d'"), ("a", "b'"),
         ("b", "c'"), ("b", "a'"),
         ("c", "a'"), ("c", "d'"),
         ("d", "a'"), ("d", "b'"),
         ("c'", "1"), ("d'", "1"), ("b'", "1"), ("a'", "1")])
    return attach_complement(p, _self_primed_complement("abcd"))


def fig2() -> ComplementedPoset:
    """Twelve-element Boolean poset (distributive orthoposet, not a
    lattice): the size-two levels of the subset order on a four-element
    set with only two of the six two-element subsets kept."""
    p = from_covers(
        "0 a b c d e e' d' c' b' a' 1".split(),
        [("0", "a"), ("0", "b"), ("0", "c"), ("0", "d"),
         ("a", "e"), ("b", "e"), ("c", "e'"), ("d", "e'"),
         ("e", "d'"), ("e", "c'"), ("e'", "a'"), ("e'", "b'"),
         ("a", "b'"), ("b", "a'"), ("c", "d'"), ("d", "c'"),
         ("d'", "1"), ("c'", "1"), ("b'", "1"), ("a'", "1")])
    return attach_complement(p, _self_primed_complement("abcde"))


def p6() -> Poset:
    """Six-element strictly modular, distributive, bounded non-lattice.
    No complementation exists for it."""
    return from_covers(
        "0 a b c d 1".split(),
        [("0", "a"), ("0", "b"), ("a", "c"), ("a", "d"),
         ("b", "c"), ("b", "d"), ("c", "1"), ("d", "1")])


def n5() -> ComplementedPoset:
    """Pentagon: the minimal non-modular lattice, with the first valid
    complementation in label order attached."""
    p = from_covers(
        "0 a b c 1".split(),
        [("0", "a"), ("a", "c"), ("c", "1"), ("0", "b"), ("b", "1")])
    return attach_complement(p, {"0": "1", "a": "b", "b": "a", "c": "b", "1": "0"})


def m3() -> ComplementedPoset:
    """Diamond: three atoms under a common top; modular, not distributive."""
    p = from_covers(
        "0 a b c 1".split(),
        [("0", "a"), ("0", "b"), ("0", "c"), ("a", "1"), ("b", "1"), ("c", "1")])
    return attach_complement(p, {"0": "1", "a": "b", "b": "a", "c": "a", "1": "0"})


def boolean8() -> ComplementedPoset:
    """The eight-element Boolean cube on atoms a, b, c."""
    p = from_covers(
        "0 a b c ab ac bc 1".split(),
        [("0", "a"), ("0", "b"), ("0", "c"),
         ("a", "ab"), ("a", "ac"), ("b", "ab"), ("b", "bc"),
         ("c", "ac"), ("c", "bc"), ("ab", "1"), ("ac", "1"), ("bc", "1")])
    return attach_complement(
        p, {"0": "1", "a": "bc", "b": "ac", "c": "ab",
            "ab": "c", "ac": "b", "bc": "a", "1": "0"})


def chain(k: int) -> Poset:
    """A k-element chain c0 < c1 < ... ."""
    names = [f"c{i}" for i in range(k)]
    return from_covers(names, [(names[i], names[i + 1]) for i in range(k - 1)])


def two_chain() -> ComplementedPoset:
    """The two-element Boolean algebra."""
    p = from_covers(["0", "1"], [("0", "1")])
    return attach_complement(p, {"0": "1", "1": "0"})


def singleton() -> Poset:
    return from_covers(["*"], [])


def antichain_bounded(k: int) -> Poset:
    """Bottom and top around a k-element antichain."""
    mids = [f"m{i}" for i in range(k)]
    covers = [("0", m) for m in mids] + [(m, "1") for m in mids]
    return from_covers(["0"] + mids + ["1"], covers)


def fig1xfig2() -> ComplementedPoset:
    """120-element strongly modular complemented poset that is neither a
    lattice nor a Boolean poset."""
    return direct_product(fig1(), fig2())


def fig1xp6() -> Poset:
    """60-element strictly modular bounded poset, neither a lattice nor
    distributive; no complementation (p6 has none)."""
    return direct_product(fig1().poset, p6())


BUILTIN_NAMES = ("fig1", "fig2", "p6", "n5", "m3", "boolean8",
                 "two_chain", "fig1xfig2", "fig1xp6")


def builtin(name: str):
    """Look up a built-in structure by its CLI name."""
    factories = {
        "fig1": fig1, "fig2": fig2, "p6": p6, "n5": n5, "m3": m3,
        "boolean8": boolean8, "two_chain": two_chain,
        "fig1xfig2": fig1xfig2, "fig1xp6": fig1xp6,
    }
    if name not in factories:
        raise KeyError(f"unknown builtin {name!r} (choose from {', '.join(BUILTIN_NAMES)})")
    return factories[name]()
