"""Quantum SU(2) coordinate algebra: normal forms, structure maps and named elements."""

from .algebra import Aq, NCElement, TensorElement
from .elements import INF, build_b, eval_poly, minor, rho, shifted

__all__ = ["Aq", "NCElement", "TensorElement", "INF", "build_b", "eval_poly", "minor", "rho", "shifted"]
