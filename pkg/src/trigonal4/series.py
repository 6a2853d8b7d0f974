"""Truncated Laurent series over Q(w) for local expansions on the curve.

A series knows its coefficients below ``truncation`` and nothing beyond it,
and every operation propagates truncation conservatively, so any coefficient
read out of a series is exact.  The only root extraction needed anywhere is
the cube root of a unit series with constant term 1, solved term by term.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DegenerateInput, StructuralError
from .polynomials import RationalFunction, UniPoly
from .scalars import Scalar

DEFAULT_ORDER = 12


@dataclass(frozen=True)
class LocalSeries:
    """Finitely many known terms c_n * s**n for n < truncation."""

    coefficients: dict
    truncation: int

    def __post_init__(self):
        cleaned = {n: c for n, c in self.coefficients.items() if c and n < self.truncation}
        object.__setattr__(self, "coefficients", cleaned)

    # -- constructors -----------------------------------------------------

    @staticmethod
    def constant(value, truncation: int) -> "LocalSeries":
        return LocalSeries({0: Scalar.of(value)}, truncation)

    @staticmethod
    def monomial(exponent: int, value, truncation: int) -> "LocalSeries":
        return LocalSeries({exponent: Scalar.of(value)}, truncation)

    # -- inspection ---------------------------------------------------------

    def valuation(self) -> int | None:
        """Smallest known exponent with nonzero coefficient; None when the
        series vanishes through its truncation."""
        if not self.coefficients:
            return None
        return min(self.coefficients)

    def coefficient(self, exponent: int) -> Scalar:
        if exponent >= self.truncation:
            raise StructuralError(
                f"coefficient at exponent {exponent} requested beyond truncation {self.truncation}"
            )
        return self.coefficients.get(exponent, Scalar.zero())

    def known_exponents(self):
        return sorted(self.coefficients)

    # -- arithmetic ------------------------------------------------------------

    def __add__(self, other: "LocalSeries") -> "LocalSeries":
        trunc = min(self.truncation, other.truncation)
        merged = dict(self.coefficients)
        for n, c in other.coefficients.items():
            merged[n] = merged.get(n, Scalar.zero()) + c
        return LocalSeries(merged, trunc)

    def __neg__(self) -> "LocalSeries":
        return LocalSeries({n: -c for n, c in self.coefficients.items()}, self.truncation)

    def __sub__(self, other: "LocalSeries") -> "LocalSeries":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Scalar)):
            return self.scale(other)
        va = self.valuation()
        vb = other.valuation()
        # An all-zero factor is only known to have valuation >= truncation.
        ea = self.truncation if va is None else va
        eb = other.truncation if vb is None else vb
        trunc = min(self.truncation + eb, other.truncation + ea)
        out: dict = {}
        for na, ca in self.coefficients.items():
            for nb, cb in other.coefficients.items():
                n = na + nb
                if n >= trunc:
                    continue
                out[n] = out.get(n, Scalar.zero()) + ca * cb
        return LocalSeries(out, trunc)

    __rmul__ = __mul__

    def scale(self, value) -> "LocalSeries":
        value = Scalar.of(value)
        return LocalSeries({n: c * value for n, c in self.coefficients.items()}, self.truncation)

    def shift(self, k: int) -> "LocalSeries":
        """Multiply by s**k."""
        return LocalSeries({n + k: c for n, c in self.coefficients.items()}, self.truncation + k)

    def truncate(self, truncation: int) -> "LocalSeries":
        return LocalSeries(self.coefficients, min(self.truncation, truncation))

    def inverse(self) -> "LocalSeries":
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("inverse of a series that is zero through truncation")
        lead = self.coefficients[v]
        rel = self.truncation - v
        unit = self.shift(-v).scale(lead.inverse()).truncate(rel)
        tail = unit - LocalSeries.constant(Scalar.one(), rel)
        result = LocalSeries.constant(Scalar.one(), rel)
        power = LocalSeries.constant(Scalar.one(), rel)
        sign = Scalar.one()
        tv = tail.valuation()
        if tv is not None:
            for _ in range(rel // tv + 1):
                power = (power * tail).truncate(rel)
                sign = -sign
                if power.valuation() is None:
                    break
                result = result + power.scale(sign)
        return result.scale(lead.inverse()).shift(-v)

    def __truediv__(self, other: "LocalSeries") -> "LocalSeries":
        return self * other.inverse()

    def __pow__(self, exponent: int) -> "LocalSeries":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = LocalSeries.constant(Scalar.one(), self.truncation)
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def derivative(self) -> "LocalSeries":
        return LocalSeries(
            {n - 1: c * n for n, c in self.coefficients.items() if n != 0},
            self.truncation - 1,
        )

    def cube_root_unit(self) -> "LocalSeries":
        """Cube root of a series with constant term 1; the root with constant
        term 1 is returned."""
        v = self.valuation()
        if v is None or v < 0 or self.coefficient(0) != Scalar.one():
            raise DegenerateInput("cube root implemented only for unit series with constant term 1")
        trunc = self.truncation
        root: dict = {0: Scalar.one()}
        for n in range(1, trunc):
            # [s**n](r**3) = 3*r_n + sum over i+j+k = n with i, j, k < n.
            acc = Scalar.zero()
            for i, ci in root.items():
                for j, cj in root.items():
                    k = n - i - j
                    if k < 0 or k >= n:
                        continue
                    acc = acc + ci * cj * root.get(k, Scalar.zero())
            cn = (self.coefficients.get(n, Scalar.zero()) - acc) / 3
            if cn:
                root[n] = cn
        return LocalSeries(root, trunc)

    def __str__(self):
        if not self.coefficients:
            return f"O(s^{self.truncation})"
        parts = [f"({self.coefficients[n]})*s^{n}" for n in self.known_exponents()]
        return " + ".join(parts) + f" + O(s^{self.truncation})"


def series_of_poly(poly: UniPoly, param: LocalSeries) -> LocalSeries:
    """Evaluate a polynomial on a series by Horner's rule."""
    v = param.valuation()
    v = 0 if v is None else min(v, 0)
    # Constants enter with enough headroom that negative-valuation parameters
    # (expansions at infinity) do not starve the truncation prematurely.
    headroom = param.truncation - (poly.degree if poly else 0) * v
    acc = LocalSeries({}, headroom)
    for c in reversed(poly.coefficients):
        acc = acc * param + LocalSeries.constant(Scalar.of(c), headroom)
    return acc


def series_of_rational(f: RationalFunction, param: LocalSeries) -> LocalSeries:
    num = series_of_poly(f.numerator, param)
    den = series_of_poly(f.denominator, param)
    return num * den.inverse()
