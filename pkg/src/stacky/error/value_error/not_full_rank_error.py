class NotFullRankError(ValueError):
    def __init__(self, rank: int, n: int, denom_bound: int):
        self.rank = rank
        self.denom_bound = denom_bound
        super().__init__(f"rounded generators (bound {denom_bound}) span rank {rank} < {n}")
