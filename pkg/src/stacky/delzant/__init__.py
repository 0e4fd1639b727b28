from . import delzant_data, sampler, vertex_check

__all__ = ["delzant_data", "sampler", "vertex_check"]
