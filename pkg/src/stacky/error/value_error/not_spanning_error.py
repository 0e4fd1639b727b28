class NotSpanningError(ValueError):
    def __init__(self, rank: int, n: int):
        self.rank = rank
        super().__init__(f"generators span a subspace of dimension {rank}, but the ambient dimension is {n}")
