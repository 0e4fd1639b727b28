class DependentBasisError(ValueError):
    def __init__(self, size: int, rank: int):
        self.size = size
        self.rank = rank
        super().__init__(f"{size} basis vectors given, but they only span a space of dimension {rank}")
