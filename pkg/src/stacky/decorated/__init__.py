from . import classification, decorated_polytope, validation_report

__all__ = ["classification", "decorated_polytope", "validation_report"]
