from . import arithmetic_error, value_error

__all__ = ["arithmetic_error", "value_error"]
