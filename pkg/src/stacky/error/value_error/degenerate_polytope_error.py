from typing import Optional, Sequence


class DegeneratePolytopeError(ValueError):
    """
    Base class for H-representations that do not describe a bounded,
        full-dimensional, irredundant simple polytope.

    Fields:
        kind (str): short name of the defect, used in reports.
        active_set (Optional[tuple]): facet indices involved, when one face is to blame.
    """
    kind = "Degenerate"

    def __init__(self, message: str, active_set: Optional[Sequence[int]] = None):
        self.active_set = tuple(active_set) if active_set is not None else None
        super().__init__(message)
