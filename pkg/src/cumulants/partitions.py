"""Integer partitions, set partitions, and the three partition lattices.

Set partitions are kept canonical (blocks sorted internally and by least
element) so they hash and compare structurally.  Enumeration orders are
fixed: restricted growth strings for set partitions, reverse
lexicographic for integer partitions, and first-block-size order for the
compositions backing interval partitions.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

SET_PARTITION_LIMIT = 12
INTERVAL_PARTITION_LIMIT = 16


class Lattice(Enum):
    ALL = "all"
    NC = "nc"
    INTERVAL = "interval"


def falling_factorial(x, k: int):
    """(x)_k = x (x - 1) ... (x - k + 1), with (x)_0 = 1; exact for int or Fraction."""
    result = 1
    for i in range(k):
        result = result * (x - i)
    return result


@dataclass(frozen=True)
class IntegerPartition:
    """Nonincreasing positive parts; the shape of a set partition."""

    parts: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parts", tuple(self.parts))
        if any(not isinstance(p, int) or p < 1 for p in self.parts):
            raise ValueError("parts must be positive integers")
        if any(self.parts[i] < self.parts[i + 1] for i in range(len(self.parts) - 1)):
            raise ValueError("parts must be nonincreasing")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def length(self) -> int:
        return len(self.parts)

    def multiplicities(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for p in self.parts:
            out[p] = out.get(p, 0) + 1
        return out

    @property
    def parts_factorial(self) -> int:
        out = 1
        for p in self.parts:
            out *= math.factorial(p)
        return out

    @property
    def mult_factorial(self) -> int:
        out = 1
        for m in self.multiplicities().values():
            out *= math.factorial(m)
        return out


@functools.lru_cache(maxsize=None)
def _integer_partitions(n: int) -> tuple[IntegerPartition, ...]:
    def rec(remaining, cap):
        if remaining == 0:
            yield ()
            return
        for first in range(min(remaining, cap), 0, -1):
            for rest in rec(remaining - first, first):
                yield (first,) + rest

    return tuple(IntegerPartition(p) for p in rec(n, n))


def integer_partitions(n: int) -> list[IntegerPartition]:
    """All partitions of n, reverse lexicographic: (n) first, (1,...,1) last."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return list(_integer_partitions(n))


def d_lambda(shape: IntegerPartition) -> int:
    """Number of set partitions of [n] whose block sizes give this shape."""
    return math.factorial(shape.n) // (shape.parts_factorial * shape.mult_factorial)


@dataclass(frozen=True)
class SetPartition:
    """Partition of {1..n} into disjoint blocks, stored canonically."""

    n: int
    blocks: tuple[tuple[int, ...], ...]

    @classmethod
    def from_blocks(cls, n: int, blocks) -> "SetPartition":
        cleaned = []
        for block in blocks:
            b = tuple(sorted(block))
            if not b:
                raise ValueError("blocks must be nonempty")
            cleaned.append(b)
        cleaned.sort(key=lambda b: b[0])
        seen = sorted(x for b in cleaned for x in b)
        if seen != list(range(1, n + 1)):
            raise ValueError(f"blocks do not partition 1..{n}")
        return cls(n, tuple(cleaned))

    @property
    def length(self) -> int:
        return len(self.blocks)

    def shape(self) -> IntegerPartition:
        return IntegerPartition(tuple(sorted((len(b) for b in self.blocks), reverse=True)))

    @functools.cached_property
    def block_index(self) -> dict[int, int]:
        """Element -> position of its block; cached, do not mutate."""
        out: dict[int, int] = {}
        for i, block in enumerate(self.blocks):
            for x in block:
                out[x] = i
        return out


def singletons(n: int) -> SetPartition:
    """The minimum of the refinement order: all blocks of size one."""
    return SetPartition.from_blocks(n, [[i] for i in range(1, n + 1)])


def single_block(n: int) -> SetPartition:
    """The maximum of the refinement order: one block."""
    return SetPartition.from_blocks(n, [list(range(1, n + 1))])


@functools.lru_cache(maxsize=None)
def _set_partitions(n: int) -> tuple[SetPartition, ...]:
    results = []
    rgs = [0] * n

    def rec(i, maxval):
        if i == n:
            blocks: list[list[int]] = [[] for _ in range(maxval + 1)]
            for idx, v in enumerate(rgs):
                blocks[v].append(idx + 1)
            results.append(SetPartition.from_blocks(n, blocks))
            return
        for v in range(maxval + 2):
            rgs[i] = v
            rec(i + 1, max(maxval, v))

    rec(1, 0)
    return tuple(results)


def set_partitions(n: int) -> list[SetPartition]:
    """All set partitions of [n] in restricted-growth-string order."""
    if not 1 <= n <= SET_PARTITION_LIMIT:
        raise ValueError(f"set partition enumeration supports 1 <= n <= {SET_PARTITION_LIMIT}")
    return list(_set_partitions(n))


def is_noncrossing(partition: SetPartition) -> bool:
    """True unless two blocks interleave in an a < b < a' < b' pattern."""
    blocks = partition.blocks
    for i in range(len(blocks)):
        for j in range(i + 1, len(blocks)):
            merged = sorted(
                [(x, 0) for x in blocks[i]] + [(x, 1) for x in blocks[j]]
            )
            switches = sum(
                1 for k in range(1, len(merged)) if merged[k][1] != merged[k - 1][1]
            )
            if switches >= 3:
                return False
    return True


def noncrossing_partitions(n: int) -> list[SetPartition]:
    if not 1 <= n <= SET_PARTITION_LIMIT:
        raise ValueError(f"noncrossing enumeration supports 1 <= n <= {SET_PARTITION_LIMIT}")
    return [p for p in _set_partitions(n) if is_noncrossing(p)]


def is_interval(partition: SetPartition) -> bool:
    """True when every block is a run of consecutive integers."""
    return all(b[-1] - b[0] + 1 == len(b) for b in partition.blocks)


@functools.lru_cache(maxsize=None)
def _interval_partitions(n: int) -> tuple[SetPartition, ...]:
    out = []

    def rec(start, acc):
        if start > n:
            out.append(SetPartition.from_blocks(n, list(acc)))
            return
        for size in range(1, n - start + 2):
            rec(start + size, acc + [list(range(start, start + size))])

    rec(1, [])
    return tuple(out)


def interval_partitions(n: int) -> list[SetPartition]:
    if not 1 <= n <= INTERVAL_PARTITION_LIMIT:
        raise ValueError(
            f"interval partition enumeration supports 1 <= n <= {INTERVAL_PARTITION_LIMIT}"
        )
    return list(_interval_partitions(n))


def leq_refinement(sigma: SetPartition, pi: SetPartition) -> bool:
    """Whether every block of sigma sits inside one block of pi."""
    if sigma.n != pi.n:
        raise ValueError("partitions live on different ground sets")
    owner = pi.block_index
    for block in sigma.blocks:
        first = owner[block[0]]
        if any(owner[x] != first for x in block[1:]):
            return False
    return True


@dataclass(frozen=True)
class IntervalType:
    """k_i = number of pi-blocks that are unions of exactly i sigma-blocks."""

    k: tuple[int, ...]


def interval_type(sigma: SetPartition, pi: SetPartition) -> IntervalType:
    if sigma.n != pi.n:
        raise ValueError("partitions live on different ground sets")
    owner = pi.block_index
    counts = [0] * pi.length
    for block in sigma.blocks:
        first = owner[block[0]]
        if any(owner[x] != first for x in block[1:]):
            raise ValueError("interval type needs sigma <= pi in refinement order")
        counts[first] += 1
    k = [0] * pi.n
    for c in counts:
        k[c - 1] += 1
    return IntervalType(tuple(k))


@functools.lru_cache(maxsize=None)
def kreweras_complement(partition: SetPartition) -> SetPartition:
    """Complement on the interleaved ground set 1, 1', 2, 2', ..., n, n'.

    Among all partitions of the primed copy, those whose union with the
    input stays noncrossing form a downward-closed family; the unique
    coarsest member is the complement.  Found by brute-force search, so
    the input size is capped by the set partition enumeration limit.
    """
    if not is_noncrossing(partition):
        raise ValueError("Kreweras complement is defined for noncrossing partitions only")
    n = partition.n
    primal = [tuple(2 * x - 1 for x in b) for b in partition.blocks]
    valid = []
    for cand in _set_partitions(n):
        barred = [tuple(2 * x for x in b) for b in cand.blocks]
        union = SetPartition.from_blocks(2 * n, primal + barred)
        if is_noncrossing(union):
            valid.append(cand)
    best = min(valid, key=lambda p: p.length)
    assert all(leq_refinement(other, best) for other in valid), "complement not unique"
    return best


def count_by_shape(shape: IntegerPartition, lattice: Lattice) -> Fraction:
    """Number of lattice elements with the given block-size shape."""
    n, length = shape.n, shape.length
    if lattice is Lattice.ALL:
        return Fraction(d_lambda(shape))
    if lattice is Lattice.NC:
        return Fraction(falling_factorial(n, length - 1), shape.mult_factorial)
    if lattice is Lattice.INTERVAL:
        return Fraction(math.factorial(length), shape.mult_factorial)
    raise ValueError(f"unknown lattice: {lattice!r}")
