from . import abelian, cli, color, data, decorated, deformation, delzant, error, geom, isomorphism, polytope, quasilattice, scalar, structures, utils

__all__ = ["abelian", "cli", "color", "data", "decorated", "deformation", "delzant", "error", "geom",
           "isomorphism", "polytope", "quasilattice", "scalar", "structures", "utils"]
