from . import group, int_matrix, normal_form

__all__ = ["group", "int_matrix", "normal_form"]
