__all__ = ["division_by_zero_error"]
