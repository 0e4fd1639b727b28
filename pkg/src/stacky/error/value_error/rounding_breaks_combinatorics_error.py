class RoundingBreaksCombinatoricsError(ValueError):
    def __init__(self, denom_bound: int, cause: Exception):
        self.denom_bound = denom_bound
        self.cause = cause
        super().__init__(f"denominator bound {denom_bound} is insufficient ({cause}); retry with a larger bound")
