from .degenerate_polytope_error import DegeneratePolytopeError

class ZeroNormalError(DegeneratePolytopeError):
    kind = "ZeroNormal"

    def __init__(self, facet: int):
        super().__init__(f"facet f{facet + 1} has the zero vector as its normal", (facet,))
