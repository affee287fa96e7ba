"""Exceptions and default enumeration budgets."""

DEFAULT_GROUP_BUDGET = 10**4
DEFAULT_TUPLE_BUDGET = 10**6
DEFAULT_DEGREE_BUDGET = 12


class EnumerationLimitError(RuntimeError):
    """Raised when an exhaustive computation would exceed its budget."""

    def __init__(self, what, size, budget):
        super().__init__(f"{what}: {size} exceeds budget {budget}")
        self.what = what
        self.size = size
        self.budget = budget


def check_budget(what, size, budget):
    if budget is not None and size > budget:
        raise EnumerationLimitError(what, size, budget)
