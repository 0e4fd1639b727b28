class EmptyInteriorError(ValueError):
    def __init__(self, accepted: int, requested: int, attempts: int):
        super().__init__(f"only {accepted} of {requested} samples landed inside the polytope after {attempts} draws")
