"""Linear systems of plane curves through general fat points."""
from .lattice import LinearSystem, format_literal, parse_literal, system

__version__ = "0.1.0"

__all__ = ["LinearSystem", "format_literal", "parse_literal", "system", "__version__"]
