"""Exact computations with alcoves, polysimplicial chains and elliptic characters."""

from .errors import AlcoveError
from .rootdata import BasedRootDatum, preset, validate

__all__ = ["AlcoveError", "BasedRootDatum", "preset", "validate"]
__version__ = "0.1.0"
