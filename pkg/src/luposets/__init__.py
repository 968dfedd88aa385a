"""Finite bounded posets with complementation: cone operators, residuation
constructions, Dedekind-MacNeille completion, an LU-identity evaluator, and
exhaustive small-poset search."""

from .cones import Subset, lower_cone, lu_closure, ul_closure, upper_cone
from .errors import LuposetsError
from .poset import (
    ComplementedPoset,
    Poset,
    attach_complement,
    direct_product,
    dual,
    from_covers,
    is_lattice,
    unary_properties,
)
from .verdicts import Verdict, Witness

__version__ = "0.1.0"

__all__ = [
    "ComplementedPoset", "LuposetsError", "Poset", "Subset", "Verdict",
    "Witness", "attach_complement", "direct_product", "dual", "from_covers",
    "is_lattice", "lower_cone", "lu_closure", "ul_closure", "unary_properties",
    "upper_cone", "__version__",
]
