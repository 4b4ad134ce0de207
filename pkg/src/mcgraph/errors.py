"""Exception types shared across the package."""


class InapplicableError(ValueError):
    """A formula or certificate was asked about inputs outside its hypotheses.

    Raised instead of silently computing a number that the underlying
    statement does not cover (e.g. the lexicographic connectivity formula
    with a complete first factor).
    """


class BudgetExceededError(RuntimeError):
    """An exact search ran out of its configured node budget."""
