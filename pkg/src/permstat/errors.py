class BudgetExceeded(RuntimeError):
    """A computation would exceed an explicit work or size budget."""

    def __init__(self, what: str, needed, budget):
        super().__init__(f"{what}: needs {needed}, budget is {budget}")
        self.what = what
        self.needed = needed
        self.budget = budget


class InvariantViolation(AssertionError):
    """Two independent computations that must agree did not."""
