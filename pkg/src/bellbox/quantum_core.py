"""Fixed-dimension state and mirror arithmetic.

Amplitudes are plain Python ``complex`` values.  Matrices are only built on
request (``.matrix()``) as numpy arrays; the operations themselves work on
the diagonal entries directly.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from bellbox.errors import NormalizationError, ParseError

TOL_UNIT = 1e-9
TOL_NORM = 1e-9
SEP_THRESH = 1e-6
MAX_THRESH = 1e-6

BASIS_1Q = ("0", "1")
BASIS_2Q = ("00", "01", "10", "11")

_SQRT1_2 = 1 / math.sqrt(2)


def unit_phase(angle: float) -> complex:
    """e^{i angle}"""
    return cmath.exp(1j * angle)


def _check_unit(name: str, value: complex) -> None:
    if not math.isfinite(abs(value)) or abs(abs(value) - 1) >= TOL_UNIT:
        raise ValueError(f"{name} must have unit modulus, got |{name}| = {abs(value)!r}")


def _check_norm(amps: Sequence[complex]) -> None:
    norm_sq = sum(abs(a) ** 2 for a in amps)
    if not math.isfinite(norm_sq) or abs(norm_sq - 1) >= TOL_NORM:
        raise NormalizationError(norm_sq)


@dataclass(frozen=True)
class Mirror1Q:
    """e^{i phi} diag(alpha, alpha*)"""

    phase: complex = 1
    alpha: complex = 1

    def __post_init__(self):
        object.__setattr__(self, "phase", complex(self.phase))
        object.__setattr__(self, "alpha", complex(self.alpha))
        _check_unit("phase", self.phase)
        _check_unit("alpha", self.alpha)

    @classmethod
    def from_angles(cls, phi: float = 0.0, alpha: float = 0.0) -> Mirror1Q:
        return cls(unit_phase(phi), unit_phase(alpha))

    @property
    def diagonal(self) -> tuple[complex, complex]:
        return (self.phase * self.alpha, self.phase * self.alpha.conjugate())

    def matrix(self) -> np.ndarray:
        return np.diag(np.array(self.diagonal, dtype=complex))


@dataclass(frozen=True)
class Mirror2Q:
    """e^{i phi} diag(gamma, delta, delta*, gamma*)"""

    phase: complex = 1
    gamma: complex = 1
    delta: complex = 1

    def __post_init__(self):
        for name in ("phase", "gamma", "delta"):
            object.__setattr__(self, name, complex(getattr(self, name)))
            _check_unit(name, getattr(self, name))

    @classmethod
    def from_angles(cls, phi: float = 0.0, gamma: float = 0.0, delta: float = 0.0) -> Mirror2Q:
        return cls(unit_phase(phi), unit_phase(gamma), unit_phase(delta))

    @property
    def diagonal(self) -> tuple[complex, complex, complex, complex]:
        p, g, d = self.phase, self.gamma, self.delta
        return (p * g, p * d, p * d.conjugate(), p * g.conjugate())

    def matrix(self) -> np.ndarray:
        return np.diag(np.array(self.diagonal, dtype=complex))


@dataclass(frozen=True)
class Register1Q:
    amp0: complex
    amp1: complex

    def __post_init__(self):
        object.__setattr__(self, "amp0", complex(self.amp0))
        object.__setattr__(self, "amp1", complex(self.amp1))
        _check_norm(self.amplitudes)

    @property
    def amplitudes(self) -> tuple[complex, complex]:
        return (self.amp0, self.amp1)

    def probabilities(self) -> tuple[float, float]:
        return tuple(abs(a) ** 2 for a in self.amplitudes)

    def vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)


@dataclass(frozen=True)
class Register2Q:
    amp00: complex
    amp01: complex
    amp10: complex
    amp11: complex

    def __post_init__(self):
        for name in ("amp00", "amp01", "amp10", "amp11"):
            object.__setattr__(self, name, complex(getattr(self, name)))
        _check_norm(self.amplitudes)

    @classmethod
    def from_amplitudes(cls, amps: Sequence[complex]) -> Register2Q:
        if len(amps) != 4:
            raise ValueError(f"expected 4 amplitudes, got {len(amps)}")
        return cls(*amps)

    @property
    def amplitudes(self) -> tuple[complex, complex, complex, complex]:
        return (self.amp00, self.amp01, self.amp10, self.amp11)

    def probabilities(self) -> tuple[float, float, float, float]:
        return tuple(abs(a) ** 2 for a in self.amplitudes)

    def vector(self) -> np.ndarray:
        return np.array(self.amplitudes, dtype=complex)

    def scaled(self, factor: complex) -> Register2Q:
        return Register2Q(*(factor * a for a in self.amplitudes))


class Regime(enum.Enum):
    SEPARABLE = "separable"
    MAXIMALLY_ENTANGLED = "bell"
    INTERMEDIATE = "intermediate"


@dataclass(frozen=True)
class CorrelationClass:
    tag: Regime
    degree: float

    def __str__(self):
        if self.tag is Regime.INTERMEDIATE:
            return f"intermediate({self.degree:.12g})"
        return self.tag.value


def normalize(amps: Sequence[complex]) -> tuple[complex, ...]:
    """Explicit input preparation; nothing else in the package rescales states."""
    norm = math.sqrt(sum(abs(a) ** 2 for a in amps))
    if norm == 0 or not math.isfinite(norm):
        raise NormalizationError(norm**2)
    return tuple(complex(a) / norm for a in amps)


def apply_mirror_1q(m: Mirror1Q, q: Register1Q) -> Register1Q:
    d0, d1 = m.diagonal
    return Register1Q(d0 * q.amp0, d1 * q.amp1)


def tensor_mirrors(m1: Mirror1Q, m2: Mirror1Q) -> Mirror2Q:
    # M1 (x) M2 = e^{i(phi1+phi2)} diag(ab, ab*, a*b, a*b*)
    beta = m2.alpha
    return Mirror2Q(
        phase=m1.phase * m2.phase,
        gamma=m1.alpha * beta,
        delta=m1.alpha * beta.conjugate(),
    )


def apply_mirror_2q(m: Mirror2Q, s: Register2Q) -> Register2Q:
    return Register2Q(*(d * a for d, a in zip(m.diagonal, s.amplitudes)))


def tensor_states(q1: Register1Q, q2: Register1Q) -> Register2Q:
    return Register2Q(*(a * b for a in q1.amplitudes for b in q2.amplitudes))


def projector_1q(outcome: int | str) -> np.ndarray:
    idx = _outcome_index(outcome, BASIS_1Q)
    p = np.zeros((2, 2), dtype=complex)
    p[idx, idx] = 1
    return p


def projector_2q(outcome: int | str) -> np.ndarray:
    idx = _outcome_index(outcome, BASIS_2Q)
    p = np.zeros((4, 4), dtype=complex)
    p[idx, idx] = 1
    return p


def _outcome_index(outcome: int | str, basis: tuple[str, ...]) -> int:
    if isinstance(outcome, str):
        if outcome not in basis:
            raise ValueError(f"unknown outcome {outcome!r}, expected one of {basis}")
        return basis.index(outcome)
    if not 0 <= outcome < len(basis):
        raise ValueError(f"outcome index {outcome} out of range")
    return outcome


def decompose_mirror_1q(m: Mirror1Q) -> list[tuple[complex, np.ndarray]]:
    """M = e^{i phi} alpha P0 + e^{i phi} alpha* P1"""
    return [(c, projector_1q(i)) for i, c in enumerate(m.diagonal)]


def decompose_mirror_2q(m: Mirror2Q) -> list[tuple[complex, np.ndarray]]:
    """M = e^{i phi}(gamma P00 + delta P01 + delta* P10 + gamma* P11)"""
    return [(c, projector_2q(i)) for i, c in enumerate(m.diagonal)]


def reassemble(terms: Sequence[tuple[complex, np.ndarray]]) -> np.ndarray:
    return sum(c * p for c, p in terms)


def concurrence(s: Register2Q) -> float:
    a, b, c, d = s.amplitudes
    return min(1.0, 2 * abs(a * d - b * c))


def classify(s: Register2Q) -> CorrelationClass:
    degree = concurrence(s)
    if degree < SEP_THRESH:
        tag = Regime.SEPARABLE
    elif degree > 1 - MAX_THRESH:
        tag = Regime.MAXIMALLY_ENTANGLED
    else:
        tag = Regime.INTERMEDIATE
    return CorrelationClass(tag, degree)


_BELL = {
    "psi+": (_SQRT1_2, 0, 0, _SQRT1_2),
    "psi-": (_SQRT1_2, 0, 0, -_SQRT1_2),
    "phi+": (0, _SQRT1_2, _SQRT1_2, 0),
    "phi-": (0, _SQRT1_2, -_SQRT1_2, 0),
}
BELL_NAMES = tuple(_BELL)


def make_bell(name: str) -> Register2Q:
    key = name.replace("−", "-").replace("±", "")
    try:
        return Register2Q(*_BELL[key])
    except KeyError:
        raise ParseError(f"unknown Bell state {name!r}, expected one of {', '.join(BELL_NAMES)}") from None


def equal_up_to_global_phase(u: Sequence[complex], v: Sequence[complex], tol: float = 1e-9) -> bool:
    if len(u) != len(v):
        return False
    overlap = sum(x.conjugate() * y for x, y in zip(u, v))
    nu = math.sqrt(sum(abs(x) ** 2 for x in u))
    nv = math.sqrt(sum(abs(y) ** 2 for y in v))
    return abs(abs(overlap) - nu * nv) < tol and abs(nu - nv) < tol
