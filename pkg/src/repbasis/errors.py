"""Exception hierarchy shared across the library."""


class RepbasisError(Exception):
    """Base class for every error raised by this library."""


class NoRootError(RepbasisError):
    """No 0/1-coefficient h-th root exists for the given polynomial."""


class TruncationError(RepbasisError):
    """A count table was cut off before the full support of its function."""


class InvalidGadget(RepbasisError):
    """Gadget parameters violate the hypothesis c > 2h|u|."""


class DegenerateError(RepbasisError):
    """Fewer than two distinct values where a gap was requested."""


class SparsityError(RepbasisError):
    """No admissible spread parameter exists within the search budget."""


class InternalError(RepbasisError):
    """A construction invariant that is guaranteed by proof failed.

    Seeing this exception means the implementation has a bug; it is never
    an expected runtime outcome.
    """


class CongruenceError(RepbasisError):
    """Head sets fail the required shifted-congruence condition."""


class HeadCountError(RepbasisError):
    """Partition head does not contain the required number of members."""


class BudgetError(RepbasisError):
    """Requested enumeration exceeds the configured work budget."""
