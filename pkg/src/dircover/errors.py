"""Exception hierarchy shared across the package."""


class DirCoverError(Exception):
    """Base class for all errors raised by dircover."""


class ParseError(DirCoverError):
    """Malformed textual input: rationals, point/line files, bundle documents."""


class DegenerateInputError(DirCoverError):
    """Input violates a non-degeneracy precondition (duplicates, empty sets, too few items)."""


class OrderMismatchError(DirCoverError):
    """Arithmetic attempted between cyclotomic elements of different order."""
