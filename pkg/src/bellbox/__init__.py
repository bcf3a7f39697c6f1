"""Mirror measurements on one- and two-qubit registers and the sequent
calculus of the judgements an internal observer draws from them."""

from bellbox.errors import (
    BellboxError,
    IntermediateRegime,
    NormalizationError,
    ParseError,
    UnsupportedRegime,
)

__version__ = "0.1.0"

__all__ = [
    "BellboxError",
    "IntermediateRegime",
    "NormalizationError",
    "ParseError",
    "UnsupportedRegime",
]
