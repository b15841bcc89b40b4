"""Exception hierarchy shared by the whole package.

The CLI maps these onto its exit-code contract, so the split matters:
usage problems are handled by argparse (exit 2), DomainError means a
precondition on the mathematical objects was violated (exit 4),
BudgetError means a size cap was exceeded (exit 3), and the two fixture
errors cover the OEIS cross-check client (exits 5 and 6).
"""


class FishburnError(Exception):
    """Base class for all package errors."""


class DomainError(FishburnError):
    """An operation was called outside its mathematical domain."""


class ValidationError(DomainError):
    """A value does not satisfy the invariants of its object family."""


class BudgetError(FishburnError):
    """A requested size exceeds the configured enumeration budget."""


class InternalError(FishburnError):
    """A consistency condition that should be unreachable was violated."""


class FixtureMissingError(FishburnError):
    """A bundled OEIS fixture was requested but is not available."""


class FetchError(FishburnError):
    """Downloading an OEIS fixture failed."""
