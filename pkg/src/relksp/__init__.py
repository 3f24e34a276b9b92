"""Exact computations with relative symplectic groups and their excision lifts."""
from .errors import RelKspError
from .rings import (
    ZZ, QQ, Integers, Rationals, IntegersMod, Polynomial, Localized,
    QuotientEuclidean, Excision, Double, Ideal, Elem,
)

__all__ = [
    "RelKspError", "ZZ", "QQ", "Integers", "Rationals", "IntegersMod", "Polynomial", "Localized",
    "QuotientEuclidean", "Excision", "Double", "Ideal", "Elem",
]

__version__ = "0.1.0"
