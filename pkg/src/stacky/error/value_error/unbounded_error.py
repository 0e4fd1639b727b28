from .degenerate_polytope_error import DegeneratePolytopeError

class UnboundedError(DegeneratePolytopeError):
    kind = "Unbounded"

    def __init__(self, direction):
        self.direction = direction
        super().__init__(f"recession direction {direction} satisfies every inequality")
