class DenominatorCeilingError(ValueError):
    def __init__(self, ceiling: int, last_error: Exception):
        self.ceiling = ceiling
        self.last_error = last_error
        super().__init__(f"no denominator bound up to {ceiling} keeps the combinatorics (last failure: {last_error})")
