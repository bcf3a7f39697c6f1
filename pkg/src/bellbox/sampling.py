"""Random mirrors and states for property checks and experiment scripts."""

from __future__ import annotations

import math

import numpy as np

from bellbox.quantum_core import (
    BELL_NAMES,
    Mirror1Q,
    Mirror2Q,
    Register1Q,
    Register2Q,
    apply_mirror_2q,
    make_bell,
    normalize,
)


def _angle(rng: np.random.Generator) -> float:
    return float(rng.uniform(-math.pi, math.pi))


def random_mirror_1q(rng: np.random.Generator) -> Mirror1Q:
    return Mirror1Q.from_angles(_angle(rng), _angle(rng))


def random_mirror_2q(rng: np.random.Generator) -> Mirror2Q:
    return Mirror2Q.from_angles(_angle(rng), _angle(rng), _angle(rng))


def random_amplitudes(rng: np.random.Generator, dim: int) -> tuple[complex, ...]:
    z = rng.normal(size=dim) + 1j * rng.normal(size=dim)
    return normalize([complex(x) for x in z])


def random_register_1q(rng: np.random.Generator) -> Register1Q:
    return Register1Q(*random_amplitudes(rng, 2))


def random_register_2q(rng: np.random.Generator) -> Register2Q:
    return Register2Q(*random_amplitudes(rng, 4))


def random_unitary_2x2(rng: np.random.Generator) -> np.ndarray:
    """Haar-random U(2) via QR of a complex Gaussian matrix."""
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    d = np.diag(r)
    return q * (d / np.abs(d))


def apply_local(u1: np.ndarray, u2: np.ndarray, s: Register2Q) -> Register2Q:
    v = np.kron(u1, u2) @ s.vector()
    return Register2Q(*normalize([complex(x) for x in v]))


def random_product_state(rng: np.random.Generator, min_amp: float = 1e-3) -> Register2Q:
    """(U1 (x) U2) applied to a random basis state, redrawn until every
    amplitude exceeds ``min_amp`` in modulus."""
    while True:
        basis = [0j] * 4
        basis[int(rng.integers(4))] = 1
        s = apply_local(random_unitary_2x2(rng), random_unitary_2x2(rng), Register2Q(*basis))
        if min(abs(a) for a in s.amplitudes) > min_amp:
            return s


def random_partially_entangled(rng: np.random.Generator, low: float = 0.01, high: float = 0.99) -> Register2Q:
    """A state with concurrence drawn uniformly from the open interval (low, high).

    cos t |00> + sin t |11> has concurrence sin 2t; local unitaries keep it.
    """
    c = float(rng.uniform(low, high))
    while c <= low or c >= high:
        c = float(rng.uniform(low, high))
    t = 0.5 * math.asin(c)
    s = Register2Q(math.cos(t), 0, 0, math.sin(t))
    return apply_local(random_unitary_2x2(rng), random_unitary_2x2(rng), s)


def random_mirrored_bell(rng: np.random.Generator, name: str | None = None) -> Register2Q:
    name = name or BELL_NAMES[int(rng.integers(4))]
    return apply_mirror_2q(random_mirror_2q(rng), make_bell(name))
