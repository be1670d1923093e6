"""Truncated formal power series over exact rational coefficients.

A series carries an explicit truncation order N and exactly N + 1
coefficients c_0..c_N; every operation stays at that order and never
rounds.  Series with unit constant term support log and fractional
powers, delta series (zero constant term) support exp, composition
and reversion.
"""

from __future__ import annotations

import math
from fractions import Fraction


def as_fraction(value) -> Fraction:
    """Coerce int, str or Fraction to Fraction; floats are refused."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, (int, str)):
        return Fraction(value)
    raise TypeError(f"cannot use {value!r} as an exact coefficient")


class TruncatedSeries:
    """Coefficients c_0..c_N of a power series truncated at t^N.

    Instances are treated as immutable: coefficients live in a tuple and
    all operations return new series.  Missing trailing coefficients in
    the constructor are padded with zeros.
    """

    __slots__ = ("order", "coeffs")

    def __init__(self, order: int, coeffs=()):
        if order < 0:
            raise ValueError("order must be nonnegative")
        cs = [as_fraction(c) for c in coeffs]
        if len(cs) > order + 1:
            raise ValueError(
                f"got {len(cs)} coefficients for truncation order {order}"
            )
        cs.extend([Fraction(0)] * (order + 1 - len(cs)))
        self.order = order
        self.coeffs = tuple(cs)

    @classmethod
    def constant(cls, value, order: int) -> "TruncatedSeries":
        return cls(order, [value])

    @classmethod
    def identity(cls, order: int) -> "TruncatedSeries":
        """The series t."""
        return cls(order, [0, 1])

    def __repr__(self) -> str:
        return f"TruncatedSeries({self.order}, {[str(c) for c in self.coeffs]})"

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, TruncatedSeries)
            and self.order == other.order
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def _same_order(self, other: "TruncatedSeries") -> None:
        if self.order != other.order:
            raise ValueError(
                f"series order mismatch: {self.order} != {other.order}"
            )

    def __add__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_order(other)
            return TruncatedSeries(
                self.order,
                [a + b for a, b in zip(self.coeffs, other.coeffs)],
            )
        c = as_fraction(other)
        return TruncatedSeries(self.order, (self.coeffs[0] + c,) + self.coeffs[1:])

    __radd__ = __add__

    def __neg__(self):
        return TruncatedSeries(self.order, [-c for c in self.coeffs])

    def __sub__(self, other):
        if isinstance(other, TruncatedSeries):
            return self + (-other)
        return self + (-as_fraction(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, TruncatedSeries):
            self._same_order(other)
            n = self.order
            out = [Fraction(0)] * (n + 1)
            for i, a in enumerate(self.coeffs):
                if a == 0:
                    continue
                for j in range(n - i + 1):
                    b = other.coeffs[j]
                    if b:
                        out[i + j] += a * b
            return TruncatedSeries(n, out)
        c = as_fraction(other)
        return TruncatedSeries(self.order, [c * x for x in self.coeffs])

    __rmul__ = __mul__

    def reciprocal(self) -> "TruncatedSeries":
        """Multiplicative inverse; requires a nonzero constant term."""
        if self.coeffs[0] == 0:
            raise ValueError("series with zero constant term has no reciprocal")
        n = self.order
        inv0 = 1 / self.coeffs[0]
        out = [inv0] + [Fraction(0)] * n
        for m in range(1, n + 1):
            s = sum(self.coeffs[k] * out[m - k] for k in range(1, m + 1))
            out[m] = -inv0 * s
        return TruncatedSeries(n, out)

    def compose(self, inner: "TruncatedSeries") -> "TruncatedSeries":
        """Substitute a delta series for t, truncating at the common order.

        Evaluated by Horner's rule; the inner series must have zero
        constant term so that truncation is exact.
        """
        self._same_order(inner)
        if inner.coeffs[0] != 0:
            raise ValueError("composition requires a delta series (zero constant term)")
        acc = TruncatedSeries.constant(self.coeffs[self.order], self.order)
        for k in range(self.order - 1, -1, -1):
            acc = acc * inner + self.coeffs[k]
        return acc

    def revert(self) -> "TruncatedSeries":
        """Compositional inverse of a delta series with nonzero linear term.

        Solves d(w(t)) = t coefficient by coefficient: the t^m equation is
        triangular in w_m once w_1..w_{m-1} are known.
        """
        if self.coeffs[0] != 0:
            raise ValueError("reversion requires a delta series")
        if self.order < 1 or self.coeffs[1] == 0:
            raise ValueError("no compositional inverse: linear coefficient is zero")
        n = self.order
        w = [Fraction(0)] * (n + 1)
        w[1] = 1 / self.coeffs[1]
        for m in range(2, n + 1):
            residue = self.compose(TruncatedSeries(n, w)).coeffs[m]
            w[m] = -residue / self.coeffs[1]
        return TruncatedSeries(n, w)

    def log(self) -> "TruncatedSeries":
        """Formal logarithm of a series with constant term 1."""
        if self.coeffs[0] != 1:
            raise ValueError("log requires constant term 1")
        n = self.order
        out = [Fraction(0)] * (n + 1)
        # from f' = f * c': m f_m = sum_{k<=m} k c_k f_{m-k}
        for m in range(1, n + 1):
            s = sum(k * out[k] * self.coeffs[m - k] for k in range(1, m))
            out[m] = (m * self.coeffs[m] - s) / m
        return TruncatedSeries(n, out)

    def exp(self) -> "TruncatedSeries":
        """Formal exponential of a delta series."""
        if self.coeffs[0] != 0:
            raise ValueError("exp requires a delta series")
        n = self.order
        out = [Fraction(1)] + [Fraction(0)] * n
        for m in range(1, n + 1):
            s = sum(k * self.coeffs[k] * out[m - k] for k in range(1, m + 1))
            out[m] = Fraction(s, m)
        return TruncatedSeries(n, out)

    def power(self, exponent) -> "TruncatedSeries":
        """f**e: binary powering for integer e, exp(e log f) otherwise.

        Fractional exponents require constant term 1.
        """
        if isinstance(exponent, int):
            if exponent < 0:
                return self.reciprocal().power(-exponent)
            acc = TruncatedSeries.constant(1, self.order)
            base, e = self, exponent
            while e:
                if e & 1:
                    acc = acc * base
                e >>= 1
                if e:
                    base = base * base
            return acc
        e = as_fraction(exponent)
        if e.denominator == 1:
            return self.power(int(e))
        if self.coeffs[0] != 1:
            raise ValueError("fractional power requires constant term 1")
        return (self.log() * e).exp()

    __pow__ = power

    def egf_to_ogf(self) -> "TruncatedSeries":
        """Reread coefficients: c_n -> n! c_n."""
        return TruncatedSeries(
            self.order,
            [math.factorial(k) * c for k, c in enumerate(self.coeffs)],
        )

    def ogf_to_egf(self) -> "TruncatedSeries":
        """Reread coefficients: c_n -> c_n / n!."""
        return TruncatedSeries(
            self.order,
            [c / math.factorial(k) for k, c in enumerate(self.coeffs)],
        )

    def to_json(self) -> dict:
        return {"order": self.order, "coeffs": [str(c) for c in self.coeffs]}

    @classmethod
    def from_json(cls, data: dict) -> "TruncatedSeries":
        try:
            order = data["order"]
            raw = data["coeffs"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"series JSON needs 'order' and 'coeffs': {exc}") from exc
        if not isinstance(order, int):
            raise ValueError("series order must be an integer")
        coeffs = [as_fraction(c) for c in raw]
        if len(coeffs) != order + 1:
            raise ValueError(
                f"coefficient count {len(coeffs)} does not match order {order}"
            )
        return cls(order, coeffs)
