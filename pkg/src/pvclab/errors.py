"""Exceptions shared across the package."""


class CapExceeded(RuntimeError):
    """An input is larger than the configured desk-scale cap, or an
    exhaustive search ran out of palette without finding an answer."""


class BudgetExceeded(RuntimeError):
    """A backtracking search hit its node budget before reaching a verdict.

    Raised instead of returning a boolean so that callers never mistake an
    aborted search for a definite answer."""


class Graph6Error(ValueError):
    """Malformed graph6 input."""
