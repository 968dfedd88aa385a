"""Exception hierarchy shared by all modules."""


class LuposetsError(Exception):
    """Base class for every error raised by this package."""


class PosetConstructionError(LuposetsError):
    """Invalid poset input: duplicate labels, cycles, unknown labels."""


class ComplementationError(LuposetsError):
    """A candidate complementation violates one of the two LU-laws."""

    def __init__(self, message, element=None, law=None):
        super().__init__(message)
        self.element = element
        self.law = law


class MixedPosetError(LuposetsError):
    """Two subsets over different ambient posets were combined."""


class NotALatticeError(LuposetsError):
    """Operation requires a lattice but some pair lacks a lub or glb."""


class MissingComplementError(LuposetsError):
    """Operation requires a complementation the structure does not carry."""


class NotAnOrthoposetError(LuposetsError):
    """Operation requires an antitone involutive complementation."""


class FormatError(LuposetsError):
    """Malformed poset text input."""

    def __init__(self, message, line=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class FormulaSyntaxError(LuposetsError):
    """Malformed formula source text."""

    def __init__(self, message, pos=None):
        if pos is not None:
            message = f"column {pos + 1}: {message}"
        super().__init__(message)
        self.pos = pos


class FormulaEvalError(LuposetsError):
    """A formula cannot be evaluated on the given structure."""


class SearchLimitError(LuposetsError):
    """Requested enumeration size exceeds the configured limit."""
