from . import face, h_polytope

__all__ = ["face", "h_polytope"]
