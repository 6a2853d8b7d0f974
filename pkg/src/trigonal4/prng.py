"""Deterministic 64-bit PRNG (splitmix64) and the derived exact samplers.

splitmix64 advances a 64-bit counter by 0x9E3779B97F4A7C15 and hashes it
with two xor-multiply rounds (constants 0xBF58476D1CE4E5B9 and
0x94D049BB133111EB, shifts 30/27/31).  The algorithm is fixed here so that
seeded runs are reproducible across machines and implementations; all
derived samplers consume draws in a documented order.
"""

from __future__ import annotations

from fractions import Fraction

from .curve import CurveParams, validate_params
from .deformation import TangentVector
from .errors import InvalidParameters
from .scalars import Scalar

_MASK = (1 << 64) - 1


class SplitMix64:
    """The splitmix64 sequence from a 64-bit seed."""

    def __init__(self, seed: int):
        self.state = seed & _MASK

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw in [0, bound) by modular reduction (bound << 2**64,
        so the bias is negligible and reproducibility is what matters)."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def integer(self, lo: int, hi: int) -> int:
        """Uniform draw in [lo, hi]."""
        return lo + self.below(hi - lo + 1)


def sample_fraction(rng: SplitMix64, bound: int = 9, max_denominator: int = 4) -> Fraction:
    """numerator in [-bound, bound], denominator in [1, max_denominator]."""
    num = rng.integer(-bound, bound)
    den = rng.integer(1, max_denominator)
    return Fraction(num, den)


def sample_scalar(rng: SplitMix64, bound: int = 9, max_denominator: int = 4, with_zeta: bool = True) -> Scalar:
    rational = sample_fraction(rng, bound, max_denominator)
    zeta = sample_fraction(rng, bound, max_denominator) if with_zeta else Fraction(0)
    return Scalar(rational, zeta)


def sample_params(rng: SplitMix64, with_zeta: bool = True) -> CurveParams:
    """Rejection-sample a valid base point (coordinates drawn in a fixed
    order, each candidate drawn completely before validation)."""
    while True:
        candidates = tuple(sample_scalar(rng, 9, 3, with_zeta) for _ in range(3))
        try:
            return validate_params(*candidates)
        except InvalidParameters:
            continue


def sample_tangent(rng: SplitMix64, with_zeta: bool = True) -> TangentVector:
    while True:
        xi = TangentVector(tuple(sample_scalar(rng, 9, 3, with_zeta) for _ in range(3)))
        if not xi.is_zero():
            return xi
