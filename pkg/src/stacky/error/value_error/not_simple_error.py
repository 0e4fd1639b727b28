from .degenerate_polytope_error import DegeneratePolytopeError

class NotSimpleError(DegeneratePolytopeError):
    kind = "NotSimple"

    def __init__(self, point, active_set):
        super().__init__(f"vertex {point} lies on {len(active_set)} facets {sorted(active_set)}", active_set)
