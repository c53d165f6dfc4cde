"""Deterministic random samplers shared by the verification suite and tests.

Exact algebraic laws are exercised on the integer grid {-5..5} (sums and
products of small integers are exact in double precision), tolerance-based
laws on components drawn from the complex unit disk.
"""

from __future__ import annotations

import numpy as np

from .matrix import BqMatrix
from .scalar import Biquaternion

INT_LO, INT_HI = -5, 5


def integer_components(rng: np.random.Generator, shape) -> np.ndarray:
    re = rng.integers(INT_LO, INT_HI + 1, shape)
    im = rng.integers(INT_LO, INT_HI + 1, shape)
    return re + 1j * im


def unit_components(rng: np.random.Generator, shape) -> np.ndarray:
    r = np.sqrt(rng.uniform(0, 1, shape))
    theta = rng.uniform(0, 2 * np.pi, shape)
    return r * np.exp(1j * theta)


def integer_biquaternion(rng: np.random.Generator) -> Biquaternion:
    return Biquaternion(*integer_components(rng, 4))


def unit_biquaternion(rng: np.random.Generator) -> Biquaternion:
    return Biquaternion(*unit_components(rng, 4))


def integer_matrix(rng: np.random.Generator, m: int, n: int) -> BqMatrix:
    return BqMatrix(integer_components(rng, (4, m, n)))


def unit_matrix(rng: np.random.Generator, m: int, n: int) -> BqMatrix:
    return BqMatrix(unit_components(rng, (4, m, n)))


def invertible_integer_matrix(rng: np.random.Generator, n: int) -> BqMatrix:
    """Integer-grid matrix that is invertible over the algebra (resampled
    until the block representation has full rank)."""
    while True:
        a = integer_matrix(rng, n, n)
        if a.rank().twice_rank == 2 * n:
            return a


def invertible_integer_scalar(rng: np.random.Generator) -> Biquaternion:
    while True:
        a = integer_biquaternion(rng)
        if abs(a.weak_norm()) > 0.5:
            return a


def rank_deficient_matrix(rng: np.random.Generator, m: int, n: int) -> BqMatrix:
    """Product of thin factors, guaranteeing deficient rank for m, n >= 2."""
    k = max(1, min(m, n) - 1)
    return integer_matrix(rng, m, k) @ integer_matrix(rng, k, n)
