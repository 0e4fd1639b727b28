from . import field, matrix

__all__ = ["field", "matrix"]
