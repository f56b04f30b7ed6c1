"""Exception types shared across the package."""


class NotABijection(ValueError):
    """Input word is not a rearrangement of 1..n."""


class BudgetExceeded(ValueError):
    """Requested size exceeds the configured enumeration ceiling."""


class LabelOutOfRange(ValueError):
    """Label x is not in 1..n for the given permutation."""


class NotInDomain(ValueError):
    """Permutation is outside the domain of the requested map."""


class NotExpandable(ValueError):
    """Polynomial is not symmetric about center/2, so no gamma expansion exists."""


class OutOfRange(ValueError):
    """Index arguments violate 0 <= k <= n."""


class MismatchAgainstDirect(AssertionError):
    """Structured route disagrees with direct enumeration (theorem falsified)."""
