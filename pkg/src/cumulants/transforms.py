"""Moment/cumulant transforms: classical, boolean, free, and the unified family.

All four moment-to-cumulant maps are instances of one partition sum

    c_n = sum over shapes lambda of n:  d_lambda * (-g_n)_(len(lambda)-1) * a_lambda

where d_lambda counts set partitions of shape lambda, (x)_k is the falling
factorial and a_lambda is the product of moments over the parts.  The
multiplier sequence g selects the family: g == 1 gives classical cumulants,
g == 2 on factorially rescaled ("barred") sequences gives boolean cumulants,
g_n == n on barred sequences gives free cumulants.

Each closed form ships with an independent generating-function oracle:
log/exp of the exponential generating function for the classical pair,
reciprocal of the ordinary generating function for the boolean pair, a
fixed-point iteration for the free pair, and two evaluation routes for the
general family.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    IntegerPartition,
    d_lambda,
    falling_factorial,
    integer_partitions,
)
from .series import TruncatedSeries, as_fraction


@dataclass(frozen=True)
class MomentSequence:
    """Exact values a_1..a_N of a sequence, with a_0 = 1 left implicit."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    @classmethod
    def from_values(cls, values) -> "MomentSequence":
        return cls(tuple(values))

    @property
    def order(self) -> int:
        return len(self.values)

    def moment(self, k: int) -> Fraction:
        """a_k, with a_0 = 1."""
        if k == 0:
            return Fraction(1)
        return self.values[k - 1]

    def bar(self) -> "MomentSequence":
        """Factorial rescaling a_n -> n! a_n (read the EGF as an OGF)."""
        return MomentSequence(
            tuple(math.factorial(n) * v for n, v in enumerate(self.values, start=1))
        )

    def unbar(self) -> "MomentSequence":
        return MomentSequence(
            tuple(v / math.factorial(n) for n, v in enumerate(self.values, start=1))
        )

    def scaled(self, j) -> "MomentSequence":
        """Moments of the rescaled sequence: entry n becomes j**n * a_n."""
        j = as_fraction(j)
        return MomentSequence(
            tuple(j**n * v for n, v in enumerate(self.values, start=1))
        )

    def truncated(self, k: int) -> "MomentSequence":
        if not 0 <= k <= self.order:
            raise ValueError(f"cannot truncate order {self.order} to {k}")
        return MomentSequence(self.values[:k])

    def to_egf(self) -> TruncatedSeries:
        return TruncatedSeries(
            self.order,
            [Fraction(1)]
            + [v / math.factorial(n) for n, v in enumerate(self.values, start=1)],
        )

    def to_ogf(self) -> TruncatedSeries:
        return TruncatedSeries(self.order, (Fraction(1),) + self.values)

    @classmethod
    def from_egf(cls, series: TruncatedSeries) -> "MomentSequence":
        if series.coeffs[0] != 1:
            raise ValueError("moment generating function must start at 1")
        return cls(
            tuple(
                math.factorial(n) * c for n, c in enumerate(series.coeffs[1:], start=1)
            )
        )

    @classmethod
    def from_ogf(cls, series: TruncatedSeries) -> "MomentSequence":
        if series.coeffs[0] != 1:
            raise ValueError("moment generating function must start at 1")
        return cls(series.coeffs[1:])

    def to_json(self) -> dict:
        return {"order": self.order, "values": [str(v) for v in self.values]}

    @classmethod
    def from_json(cls, data: dict) -> "MomentSequence":
        try:
            order = data["order"]
            raw = data["values"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"sequence JSON needs 'order' and 'values': {exc}") from exc
        if not isinstance(order, int):
            raise ValueError("sequence order must be an integer")
        values = [as_fraction(v) for v in raw]
        if len(values) != order:
            raise ValueError(f"value count {len(values)} does not match order {order}")
        return cls(tuple(values))


@dataclass(frozen=True)
class MultiplierSequence:
    """Per-degree multipliers g_1..g_N for the unified cumulant family."""

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    @classmethod
    def from_values(cls, values) -> "MultiplierSequence":
        return cls(tuple(values))

    @classmethod
    def constant(cls, g, order: int) -> "MultiplierSequence":
        return cls(tuple([as_fraction(g)] * order))

    @classmethod
    def index(cls, order: int) -> "MultiplierSequence":
        """g_n = n, the free-cumulant multiplier."""
        return cls(tuple(Fraction(k) for k in range(1, order + 1)))

    @property
    def order(self) -> int:
        return len(self.values)

    def g(self, n: int) -> Fraction:
        return self.values[n - 1]


def _bell_numbers(count: int) -> list[int]:
    bells = [1]  # starts at index 0
    for n in range(count):
        bells.append(sum(math.comb(n, k) * bells[k] for k in range(n + 1)))
    return bells[1:]


def _catalan(n: int) -> int:
    return math.comb(2 * n, n) // (n + 1)


_NAMED = {
    "u": lambda n: [1] * n,
    "chi": lambda n: [1] + [0] * (n - 1),
    "epsilon": lambda n: [0] * n,
    "ubar": lambda n: [math.factorial(k) for k in range(1, n + 1)],
    "uD": lambda n: list(range(1, n + 1)),
    "bell": _bell_numbers,
    "catalan": lambda n: [_catalan(k) for k in range(1, n + 1)],
}


def named_sequence(name: str, order: int) -> MomentSequence:
    """Built-in sequences: u, chi, epsilon, ubar, uD, bell, catalan."""
    if order < 0:
        raise ValueError("order must be nonnegative")
    try:
        gen = _NAMED[name]
    except KeyError:
        raise ValueError(
            f"unknown sequence name {name!r}; choose from {sorted(_NAMED)}"
        ) from None
    return MomentSequence.from_values(gen(order))


def _check_orders(a, b) -> None:
    if a.order != b.order:
        raise ValueError(f"sequence order mismatch: {a.order} != {b.order}")


def _moment_product(seq: MomentSequence, shape: IntegerPartition) -> Fraction:
    out = Fraction(1)
    for part in shape.parts:
        out *= seq.moment(part)
    return out


def _elementwise_sum(a: MomentSequence, b: MomentSequence) -> MomentSequence:
    _check_orders(a, b)
    return MomentSequence(tuple(x + y for x, y in zip(a.values, b.values)))


# ---------------------------------------------------------------------------
# classical pair


def classical_from_moments(moments: MomentSequence) -> MomentSequence:
    """c_n = sum_lambda d_lambda (-1)^(l-1) (l-1)! a_lambda."""
    out = []
    for n in range(1, moments.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            length = shape.length
            weight = d_lambda(shape) * (-1) ** (length - 1) * math.factorial(length - 1)
            total += weight * _moment_product(moments, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def moments_from_classical(cumulants: MomentSequence) -> MomentSequence:
    """a_n = sum_lambda d_lambda c_lambda (complete Bell polynomial)."""
    out = []
    for n in range(1, cumulants.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            total += d_lambda(shape) * _moment_product(cumulants, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def classical_from_moments_series(moments: MomentSequence) -> MomentSequence:
    """Oracle: cumulants are the EGF coefficients of log of the moment EGF."""
    logs = moments.to_egf().log()
    return MomentSequence(
        tuple(math.factorial(n) * logs.coeffs[n] for n in range(1, moments.order + 1))
    )


# ---------------------------------------------------------------------------
# boolean pair


def boolean_from_moments(moments: MomentSequence) -> MomentSequence:
    """h_n = sum_lambda (l! / m(lambda)!) (-1)^(l-1) a_lambda."""
    out = []
    for n in range(1, moments.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            length = shape.length
            weight = Fraction(
                math.factorial(length) * (-1) ** (length - 1), shape.mult_factorial
            )
            total += weight * _moment_product(moments, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def moments_from_boolean(cumulants: MomentSequence) -> MomentSequence:
    # M = 1 + H M, i.e. m_n = sum_k h_k m_{n-k}
    h = cumulants.values
    m = [Fraction(1)]
    for n in range(1, len(h) + 1):
        m.append(sum(h[k - 1] * m[n - k] for k in range(1, n + 1)))
    return MomentSequence(tuple(m[1:]))


def boolean_from_moments_series(moments: MomentSequence) -> MomentSequence:
    """Oracle: H = 1 - 1/M on ordinary generating functions."""
    recip = moments.to_ogf().reciprocal()
    return MomentSequence(
        tuple(-recip.coeffs[n] for n in range(1, moments.order + 1))
    )


# ---------------------------------------------------------------------------
# free pair


def free_from_moments(moments: MomentSequence) -> MomentSequence:
    """r_n = sum_lambda (-n)_(l-1) a_lambda / m(lambda)!."""
    out = []
    for n in range(1, moments.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            weight = Fraction(
                falling_factorial(-n, shape.length - 1), shape.mult_factorial
            )
            total += weight * _moment_product(moments, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def moments_from_free(cumulants: MomentSequence) -> MomentSequence:
    """a_n = sum_lambda (n)_(l-1) r_lambda / m(lambda)!."""
    out = []
    for n in range(1, cumulants.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            weight = Fraction(
                falling_factorial(n, shape.length - 1), shape.mult_factorial
            )
            total += weight * _moment_product(cumulants, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def moments_from_free_series(cumulants: MomentSequence) -> MomentSequence:
    """Oracle: the moment OGF is the fixed point of M(t) = R(t M(t))."""
    n = cumulants.order
    big_r = cumulants.to_ogf()
    t = TruncatedSeries.identity(n)
    m = TruncatedSeries.constant(1, n)
    for _ in range(n):
        m = big_r.compose(t * m)
    return MomentSequence(m.coeffs[1:])


# ---------------------------------------------------------------------------
# unified family


def generalized_cumulants(
    moments: MomentSequence, multipliers: MultiplierSequence
) -> MomentSequence:
    """c_n = sum_lambda d_lambda (-g_n)_(l-1) a_lambda."""
    _check_orders(moments, multipliers)
    out = []
    for n in range(1, moments.order + 1):
        g_n = multipliers.g(n)
        total = Fraction(0)
        for shape in integer_partitions(n):
            weight = d_lambda(shape) * falling_factorial(-g_n, shape.length - 1)
            total += weight * _moment_product(moments, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def moments_from_generalized(
    cumulants: MomentSequence, multipliers: MultiplierSequence
) -> MomentSequence:
    """Inverse of generalized_cumulants by the triangular recursion.

    The shape (n) contributes a_n with coefficient 1, every other shape
    involves lower moments only, so each a_n is solvable in turn.
    """
    _check_orders(cumulants, multipliers)
    acc: list[Fraction] = []

    def mom(k: int) -> Fraction:
        return Fraction(1) if k == 0 else acc[k - 1]

    for n in range(1, cumulants.order + 1):
        g_n = multipliers.g(n)
        rest = Fraction(0)
        for shape in integer_partitions(n):
            if shape.length == 1:
                continue
            weight = d_lambda(shape) * falling_factorial(-g_n, shape.length - 1)
            prod = Fraction(1)
            for part in shape.parts:
                prod *= mom(part)
            rest += weight * prod
        acc.append(cumulants.moment(n) - rest)
    return MomentSequence(tuple(acc))


def abel_oracle(
    moments: MomentSequence, multipliers: MultiplierSequence, n: int
) -> Fraction:
    """Generating-function route for the n-th generalized cumulant.

    Pairs a fresh uncorrelated letter delta with the power sequence of the
    inverse dot product: nu_m = m! [t^m] f(t)^(-g_n) where f is the moment
    EGF, then expands delta (delta - g_n . a)^(n-1) binomially, so

        c_n = sum_j C(n-1, j) a_{j+1} nu_{n-1-j}.
    """
    if not 1 <= n <= moments.order:
        raise ValueError(f"n must lie in 1..{moments.order}")
    g_n = multipliers.g(n)
    powered = moments.to_egf().power(-g_n)
    nu = [math.factorial(k) * powered.coeffs[k] for k in range(n)]
    total = Fraction(0)
    for j in range(n):
        total += math.comb(n - 1, j) * moments.moment(j + 1) * nu[n - 1 - j]
    return total


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def abel_copy_oracle(moments: MomentSequence, k: int, n: int) -> Fraction:
    """Copy-expansion route for a nonnegative integer multiplier g_n = k.

    The subtracted letter is the additive inverse of k copies, i.e. k
    uncorrelated copies of the inverse sequence.  Inverse moments come from
    the defining convolution identity sum_j C(m, j) a_j inv_{m-j} = 0, and
    the k-fold sum is expanded over integer compositions, so no partition
    formula and no series powering is reused.
    """
    if not isinstance(k, int) or k < 0:
        raise ValueError("copy oracle needs a nonnegative integer multiplier")
    if not 1 <= n <= moments.order:
        raise ValueError(f"n must lie in 1..{moments.order}")
    inv = [Fraction(1)]
    for m in range(1, n):
        inv.append(
            -sum(math.comb(m, j) * moments.moment(j) * inv[m - j] for j in range(1, m + 1))
        )

    def copy_sum_moment(m: int) -> Fraction:
        if m == 0:
            return Fraction(1)
        if k == 0:
            return Fraction(0)
        total = Fraction(0)
        for comp in _compositions(m, k):
            coeff = math.factorial(m)
            term = Fraction(1)
            for part in comp:
                coeff //= math.factorial(part)
                term *= inv[part]
            total += coeff * term
        return total

    total = Fraction(0)
    for j in range(n):
        total += math.comb(n - 1, j) * moments.moment(j + 1) * copy_sum_moment(n - 1 - j)
    return total


@dataclass(frozen=True)
class CumulantMatrix:
    """Rows n = 1..nmax, columns k = 1..kmax of constant-multiplier cumulants."""

    entries: tuple[tuple[Fraction, ...], ...]

    @property
    def rows(self) -> int:
        return len(self.entries)

    @property
    def cols(self) -> int:
        return len(self.entries[0]) if self.entries else 0

    def entry(self, n: int, k: int) -> Fraction:
        return self.entries[n - 1][k - 1]

    def column(self, k: int) -> MomentSequence:
        return MomentSequence(tuple(row[k - 1] for row in self.entries))

    def to_json(self) -> dict:
        return {
            "rows": self.rows,
            "cols": self.cols,
            "entries": [[str(v) for v in row] for row in self.entries],
        }


def cumulant_matrix(moments: MomentSequence, nmax: int, kmax: int) -> CumulantMatrix:
    """Table c_{n,k} of k-th constant-multiplier cumulants of the input."""
    if not 1 <= nmax <= moments.order:
        raise ValueError(f"nmax must lie in 1..{moments.order}")
    if kmax < 1:
        raise ValueError("kmax must be positive")
    head = moments.truncated(nmax)
    columns = [
        generalized_cumulants(head, MultiplierSequence.constant(k, nmax)).values
        for k in range(1, kmax + 1)
    ]
    rows = tuple(
        tuple(columns[k][n] for k in range(kmax)) for n in range(nmax)
    )
    return CumulantMatrix(rows)


# ---------------------------------------------------------------------------
# convolutions


def classical_convolve(a: MomentSequence, b: MomentSequence) -> MomentSequence:
    """Moments of the sum of uncorrelated sequences: add classical cumulants."""
    _check_orders(a, b)
    return moments_from_classical(
        _elementwise_sum(classical_from_moments(a), classical_from_moments(b))
    )


def boolean_convolve(a: MomentSequence, b: MomentSequence) -> MomentSequence:
    _check_orders(a, b)
    return moments_from_boolean(
        _elementwise_sum(boolean_from_moments(a), boolean_from_moments(b))
    )


def free_convolve(a: MomentSequence, b: MomentSequence) -> MomentSequence:
    _check_orders(a, b)
    return moments_from_free(
        _elementwise_sum(free_from_moments(a), free_from_moments(b))
    )


def gamma_convolve(
    a: MomentSequence, b: MomentSequence, multipliers: MultiplierSequence
) -> MomentSequence:
    """Convolution for the unified family: add generalized cumulants, invert."""
    _check_orders(a, b)
    return moments_from_generalized(
        _elementwise_sum(
            generalized_cumulants(a, multipliers), generalized_cumulants(b, multipliers)
        ),
        multipliers,
    )


def boolean_free_transport(moments: MomentSequence) -> MomentSequence:
    """Coefficients l_1..l_N of the reciprocal of the free-cumulant OGF.

    Free convolution of moment sequences becomes boolean convolution of
    their transported sequences, which is what makes the free central limit
    behave boolean-ly after this change of coordinates.
    """
    r = free_from_moments(moments)
    return MomentSequence(r.to_ogf().reciprocal().coeffs[1:])


# ---------------------------------------------------------------------------
# compositions and dot operations


def umbral_composition(
    outer: MomentSequence, inner: MomentSequence, flavor: str
) -> MomentSequence:
    """Composition h_n = sum_lambda w_lambda g_{l(lambda)} a_lambda.

    flavor 'egf' weights shapes by d_lambda and matches substitution of
    exponential generating functions; flavor 'ogf' weights by l!/m(lambda)!
    and matches substitution of ordinary generating functions.
    """
    _check_orders(outer, inner)
    kind = flavor.lower()
    if kind not in ("egf", "ogf"):
        raise ValueError(f"flavor must be 'egf' or 'ogf', got {flavor!r}")
    out = []
    for n in range(1, inner.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            if kind == "egf":
                weight = Fraction(d_lambda(shape))
            else:
                weight = Fraction(math.factorial(shape.length), shape.mult_factorial)
            total += weight * outer.moment(shape.length) * _moment_product(inner, shape)
        out.append(total)
    return MomentSequence(tuple(out))


def _stirling_first(nmax: int) -> list[list[int]]:
    # signed Stirling numbers of the first kind: (x)_n = sum_k s(n,k) x^k
    s = [[0] * (nmax + 1) for _ in range(nmax + 1)]
    s[0][0] = 1
    for n in range(nmax):
        for k in range(nmax + 1):
            val = s[n][k - 1] if k >= 1 else 0
            s[n + 1][k] = val - n * s[n][k]
    return s


def factorial_moments(moments: MomentSequence) -> MomentSequence:
    """a_(n) = sum_k s(n, k) a_k with signed Stirling numbers of the first kind."""
    n_max = moments.order
    s = _stirling_first(n_max)
    out = []
    for n in range(1, n_max + 1):
        out.append(sum(s[n][k] * moments.moment(k) for k in range(1, n + 1)))
    return MomentSequence(tuple(out))


def dot_operation(
    multiplier_moments: MomentSequence, moments: MomentSequence
) -> MomentSequence:
    """Moments of the dot product: sum_lambda d_lambda g_(l) a_lambda.

    g_(l) are the factorial moments of the first argument.  On generating
    functions this is f_g applied to log of the moment EGF.
    """
    _check_orders(multiplier_moments, moments)
    fact = factorial_moments(multiplier_moments)
    out = []
    for n in range(1, moments.order + 1):
        total = Fraction(0)
        for shape in integer_partitions(n):
            total += (
                d_lambda(shape)
                * fact.moment(shape.length)
                * _moment_product(moments, shape)
            )
        out.append(total)
    return MomentSequence(tuple(out))
