from .degenerate_polytope_error import DegeneratePolytopeError

class EmptyPolytopeError(DegeneratePolytopeError):
    kind = "Empty"

    def __init__(self, facets: int):
        super().__init__(f"no point satisfies all {facets} inequalities")
