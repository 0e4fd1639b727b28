from . import rational

__all__ = ["rational"]
