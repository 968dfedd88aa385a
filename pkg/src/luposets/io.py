"""The poset text format.

One canonical form, newline-separated sections::

    elements: 0 a b c d 1
    covers: 0<a 0<b a<c ...
    complement: 0:1 a:a' ...

Labels are whitespace-free tokens without ``<`` or ``:``. The ``covers``
section lists Hasse edges; ``complement`` is optional. Blank lines and
``#`` comment lines are ignored; unknown sections are rejected.
"""

from __future__ import annotations

import numpy as np

from .errors import FormatError
from .poset import ComplementedPoset, Poset, attach_complement, from_covers

_SECTIONS = ("elements", "covers", "complement")


def parse_poset(text: str):
    """Parse the text format; returns a Poset, or a ComplementedPoset when
    a complement section is present."""
    sections: dict[str, tuple[str, int]] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if ":" not in line:
            raise FormatError(f"expected 'section: ...', got {line!r}", lineno)
        head, _, body = line.partition(":")
        head = head.strip()
        if head not in _SECTIONS:
            raise FormatError(f"unknown section {head!r}", lineno)
        if head in sections:
            raise FormatError(f"duplicate section {head!r}", lineno)
        sections[head] = (body.strip(), lineno)
    if "elements" not in sections:
        raise FormatError("missing 'elements' section")
    if "covers" not in sections:
        raise FormatError("missing 'covers' section")

    names = sections["elements"][0].split()
    if not names:
        raise FormatError("empty 'elements' section", sections["elements"][1])

    covers = []
    body, lineno = sections["covers"]
    for tok in body.split():
        lo, sep, hi = tok.partition("<")
        if not sep or not lo or not hi or "<" in hi:
            raise FormatError(f"malformed cover pair {tok!r}", lineno)
        covers.append((lo, hi))
    try:
        p = from_covers(names, covers)
    except Exception as e:
        raise FormatError(str(e), lineno) from e

    if "complement" not in sections:
        return p
    body, lineno = sections["complement"]
    comp: dict[str, str] = {}
    for tok in body.split():
        a, sep, b = tok.partition(":")
        if not sep or not a or not b or ":" in b:
            raise FormatError(f"malformed complement pair {tok!r}", lineno)
        if a in comp:
            raise FormatError(f"duplicate complement entry for {a!r}", lineno)
        comp[a] = b
    try:
        return attach_complement(p, comp)
    except Exception as e:
        raise FormatError(str(e), lineno) from e


def cover_pairs(p: Poset) -> list[tuple[str, str]]:
    """Hasse edges of the order, by (lower index, upper index)."""
    lt = p.leq & ~np.eye(p.n, dtype=bool)
    cover = lt & ~(lt @ lt)
    return [(p.names[i], p.names[j]) for i, j in np.argwhere(cover)]


def serialize_poset(structure) -> str:
    """Emit the canonical text form (round-trips through parse_poset)."""
    cp = structure if isinstance(structure, ComplementedPoset) else None
    p = cp.poset if cp else structure
    lines = [
        "elements: " + " ".join(p.names),
        "covers: " + " ".join(f"{a}<{b}" for a, b in cover_pairs(p)),
    ]
    if cp is not None:
        lines.append("complement: " + " ".join(
            f"{a}:{p.names[c]}" for a, c in zip(p.names, cp.comp)))
    return "\n".join(lines) + "\n"
