from . import iso_witness, search

__all__ = ["iso_witness", "search"]
