class BellboxError(Exception):
    """Base class for domain errors (CLI exit code 1)."""


class NormalizationError(BellboxError):
    def __init__(self, norm_sq: float):
        super().__init__(f"state is not normalized: sum |amp|^2 = {norm_sq!r}")
        self.norm_sq = norm_sq


class IntermediateRegime(BellboxError):
    """State is neither separable nor maximally entangled.

    No judgement rules exist for an intermediate correlation degree, so the
    degree is reported instead of a guessed formula.
    """

    def __init__(self, degree: float):
        super().__init__(f"intermediate correlation regime, degree {degree:.12g}")
        self.degree = degree


class UnsupportedRegime(BellboxError):
    """State has a regime with no judgement shape (e.g. support off the basis pairs)."""


class ParseError(ValueError):
    """Malformed literal, formula, sequent or derivation text (CLI exit code 2)."""

    def __init__(self, message: str, pos: int | None = None, text: str | None = None):
        self.pos = pos
        self.text = text
        where = f" at position {pos}" if pos is not None else ""
        super().__init__(f"{message}{where}")
