from . import certificate, family, rationalize

__all__ = ["certificate", "family", "rationalize"]
