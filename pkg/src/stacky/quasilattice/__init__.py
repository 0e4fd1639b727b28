from . import quasilattice

__all__ = ["quasilattice"]
