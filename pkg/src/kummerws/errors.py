"""Exception types shared across the library."""


class KummerError(Exception):
    """Base class for all library errors."""


class IndexNotDistinguished(KummerError):
    """A place index beyond the distinguished range was used where a
    distinguished place is required."""


class ResidueOutOfRange(KummerError):
    """A residue index i was outside {1, ..., m-1}."""


class BadPreset(KummerError):
    """Preset parameters violate the family's constraints."""


class InconsistentProfile(KummerError):
    """The ramification data does not describe a curve (non-integral or
    negative genus)."""


class BudgetExceeded(KummerError):
    """A brute-force scan would examine more candidate points than the
    configured budget allows."""
