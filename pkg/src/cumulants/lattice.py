"""Literal incidence-algebra computations on the three partition lattices.

Everything here is enumeration-backed: convolutions are explicit sums over
lattice elements, Moebius functions come from the defining recursion rather
than any closed form, and the theorem checkers compare those sums against
the generating-function and transform routes computed elsewhere.  That
independence is the point; keep it when modifying.
"""

from __future__ import annotations

import functools
import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .partitions import (
    Lattice,
    SetPartition,
    interval_partitions,
    interval_type,
    kreweras_complement,
    leq_refinement,
    noncrossing_partitions,
    set_partitions,
    single_block,
    singletons,
)
from .series import TruncatedSeries, as_fraction
from .transforms import (
    MomentSequence,
    free_from_moments,
    moments_from_free,
    named_sequence,
)

CONVOLVE_LIMITS = {Lattice.ALL: 7, Lattice.NC: 7, Lattice.INTERVAL: 12}
THEOREM_LIMIT = 6


@dataclass(frozen=True)
class MultiplicativeFunction:
    """Multiplicative function determined by its diagonal values f_1..f_N.

    On an interval of type (k_1, ..., k_n) the function evaluates to the
    product of f_i**k_i, so the values at full intervals [0_n, 1_n]
    determine it everywhere.
    """

    values: tuple[Fraction, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(as_fraction(v) for v in self.values))

    @classmethod
    def from_values(cls, values) -> "MultiplicativeFunction":
        return cls(tuple(values))

    @classmethod
    def from_sequence(cls, seq: MomentSequence) -> "MultiplicativeFunction":
        return cls(seq.values)

    @classmethod
    def zeta(cls, order: int) -> "MultiplicativeFunction":
        return cls(tuple(Fraction(1) for _ in range(order)))

    @classmethod
    def delta(cls, order: int) -> "MultiplicativeFunction":
        """Convolution identity: 1 at n = 1, else 0."""
        return cls(tuple(Fraction(1 if n == 1 else 0) for n in range(1, order + 1)))

    @classmethod
    def mobius(cls, order: int) -> "MultiplicativeFunction":
        """Closed-form Moebius values (-1)^(n-1) (n-1)! of the full lattice."""
        return cls(
            tuple(
                Fraction((-1) ** (n - 1) * math.factorial(n - 1))
                for n in range(1, order + 1)
            )
        )

    @property
    def order(self) -> int:
        return len(self.values)

    def f(self, k: int) -> Fraction:
        return self.values[k - 1]

    def on_partition(self, partition: SetPartition) -> Fraction:
        """f_tau = product of f over the block sizes of tau."""
        out = Fraction(1)
        for block in partition.blocks:
            out *= self.f(len(block))
        return out


def eval_interval(
    func: MultiplicativeFunction, sigma: SetPartition, pi: SetPartition
) -> Fraction:
    """f(sigma, pi) = prod_i f_i^(k_i) over the interval type of [sigma, pi]."""
    ktype = interval_type(sigma, pi)
    out = Fraction(1)
    for i, k_i in enumerate(ktype.k, start=1):
        if k_i:
            out *= func.f(i) ** k_i
    return out


@functools.lru_cache(maxsize=None)
def _elements(n: int, lattice: Lattice) -> tuple[SetPartition, ...]:
    if lattice is Lattice.ALL:
        return tuple(set_partitions(n))
    if lattice is Lattice.NC:
        return tuple(noncrossing_partitions(n))
    if lattice is Lattice.INTERVAL:
        return tuple(interval_partitions(n))
    raise ValueError(f"unknown lattice: {lattice!r}")


def _check_bounds(n: int, lattice: Lattice) -> None:
    limit = CONVOLVE_LIMITS[lattice]
    if not 1 <= n <= limit:
        raise ValueError(f"{lattice.value} lattice computations support 1 <= n <= {limit}")


def convolve_lattice(
    f: MultiplicativeFunction, g: MultiplicativeFunction, n: int, lattice: Lattice
) -> Fraction:
    """(f * g)(0_n, 1_n) as a literal sum over the lattice.

    On the full and interval lattices the upper interval [tau, 1_n] is a
    smaller lattice of the same kind, so g enters through g_{l(tau)}; on
    the noncrossing lattice it enters through the Kreweras complement.
    """
    _check_bounds(n, lattice)
    if f.order < n or g.order < n:
        raise ValueError(f"functions must provide values up to n = {n}")
    total = Fraction(0)
    if lattice is Lattice.NC:
        for tau in _elements(n, lattice):
            total += f.on_partition(tau) * g.on_partition(kreweras_complement(tau))
    else:
        for tau in _elements(n, lattice):
            total += f.on_partition(tau) * g.f(tau.length)
    return total


@functools.lru_cache(maxsize=None)
def mobius_by_recursion(n: int, lattice: Lattice) -> Fraction:
    """mu(0_n, 1_n) from the defining recursion, no closed form used.

    Processes elements in decreasing block count (a linear extension of
    refinement) and enforces sum_{tau <= pi} mu(0_n, tau) = [pi == 0_n].
    """
    _check_bounds(n, lattice)
    elements = sorted(_elements(n, lattice), key=lambda p: -p.length)
    bottom = singletons(n)
    mu: dict[SetPartition, Fraction] = {}
    for pi in elements:
        if pi == bottom:
            mu[pi] = Fraction(1)
            continue
        mu[pi] = -sum(
            mu[tau] for tau in elements if tau != pi and leq_refinement(tau, pi)
        )
    return mu[single_block(n)]


def mobius_function(order: int, lattice: Lattice) -> MultiplicativeFunction:
    """Multiplicative Moebius function with recursion-computed diagonal values."""
    return MultiplicativeFunction.from_values(
        [mobius_by_recursion(k, lattice) for k in range(1, order + 1)]
    )


def _random_values(rng: random.Random, count: int) -> list[Fraction]:
    return [Fraction(rng.randint(-6, 6), rng.randint(1, 4)) for _ in range(count)]


def verify_theorem(n: int, which: str, seed: int = 0) -> dict:
    """Executable checks of the composition/convolution correspondences.

    T1: EGF composition against full-lattice convolution.
    T2: free moment/cumulant transforms against noncrossing convolution
        with the recursion-built Moebius function, plus the Catalan case.
    T3: OGF composition against interval-lattice convolution.
    COMMUTATIVITY: the noncrossing convolution is symmetric.

    Returns a JSON-ready report with a counterexample on failure.
    """
    name = which.upper()
    if name not in ("T1", "T2", "T3", "COMMUTATIVITY"):
        raise ValueError(f"unknown theorem {which!r}")
    if not 1 <= n <= THEOREM_LIMIT:
        raise ValueError(f"theorem checks support 1 <= n <= {THEOREM_LIMIT}")
    rng = random.Random(seed)
    report: dict = {"theorem": name, "n": n, "pass": True, "checked": 0}

    def fail(**detail):
        report["pass"] = False
        report["counterexample"] = {k: str(v) for k, v in detail.items()}

    f_seq = MomentSequence.from_values(_random_values(rng, n))
    g_seq = MomentSequence.from_values(_random_values(rng, n))
    f_mf = MultiplicativeFunction.from_sequence(f_seq)
    g_mf = MultiplicativeFunction.from_sequence(g_seq)

    if name in ("T1", "T3"):
        lattice = Lattice.ALL if name == "T1" else Lattice.INTERVAL
        if name == "T1":
            outer, inner = f_seq.to_egf(), g_seq.to_egf()
        else:
            outer, inner = f_seq.to_ogf(), g_seq.to_ogf()
        composed = outer.compose(inner - 1)
        for m in range(1, n + 1):
            scale = math.factorial(m) if name == "T1" else 1
            lhs = scale * composed.coeffs[m]
            rhs = convolve_lattice(g_mf, f_mf, m, lattice)
            report["checked"] += 1
            if lhs != rhs:
                fail(m=m, composition=lhs, convolution=rhs)
                return report
    elif name == "T2":
        mu_nc = mobius_function(n, Lattice.NC)
        zeta = MultiplicativeFunction.zeta(n)
        moments = MomentSequence.from_values(_random_values(rng, n))
        cumulants = free_from_moments(moments)
        back = moments_from_free(cumulants)
        m_mf = MultiplicativeFunction.from_sequence(moments)
        r_mf = MultiplicativeFunction.from_sequence(cumulants)
        for m in range(1, n + 1):
            lhs = cumulants.values[m - 1]
            rhs = convolve_lattice(m_mf, mu_nc, m, Lattice.NC)
            report["checked"] += 1
            if lhs != rhs:
                fail(m=m, transform=lhs, convolution=rhs)
                return report
            lhs = back.values[m - 1]
            rhs = convolve_lattice(r_mf, zeta, m, Lattice.NC)
            report["checked"] += 1
            if lhs != rhs:
                fail(m=m, transform=lhs, convolution=rhs)
                return report
        catalan = named_sequence("catalan", n)
        ones = named_sequence("u", n)
        report["checked"] += 1
        if free_from_moments(catalan) != ones:
            fail(m=n, note="catalan free cumulants are not all ones")
            return report
    else:  # COMMUTATIVITY
        for m in range(1, n + 1):
            lhs = convolve_lattice(f_mf, g_mf, m, Lattice.NC)
            rhs = convolve_lattice(g_mf, f_mf, m, Lattice.NC)
            report["checked"] += 1
            if lhs != rhs:
                fail(m=m, forward=lhs, reversed=rhs)
                return report
    return report
