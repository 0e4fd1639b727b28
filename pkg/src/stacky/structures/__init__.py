from . import bound

__all__ = ["bound"]
