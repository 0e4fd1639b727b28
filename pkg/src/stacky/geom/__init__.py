from . import shape

__all__ = ["shape"]
