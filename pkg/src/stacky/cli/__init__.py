from . import document, main, plot, report

__all__ = ["document", "main", "plot", "report"]
