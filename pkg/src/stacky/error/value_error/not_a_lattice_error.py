class NotALatticeError(ValueError):
    def __init__(self, reason: str):
        super().__init__(f"labels need the image of the quasilattice to be Z^n: {reason}")
