class InvalidFieldError(ValueError):
    def __init__(self, min_poly, reason: str):
        self.min_poly = tuple(min_poly)
        super().__init__(f"minimal polynomial {list(min_poly)} rejected: {reason}")
