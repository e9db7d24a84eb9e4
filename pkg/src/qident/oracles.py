"""Brute-force partition-counting oracles.

These enumerate restricted partitions directly (largest part first, with
memoization on the remaining amount / largest allowed part / parts budget)
and exist to cross-check the generating-function kernel: the q-binomial
[n,k] against partitions in a k x (n-k) box, and the Rogers-Ramanujan
series against gap-2 partition counts.  Nothing here touches polynomial
arithmetic, so agreement between the two routes is meaningful evidence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .qpoly import IntPoly, QSeries


@dataclass(frozen=True)
class PartitionConstraint:
    """Restrictions on the partitions being counted.

    max_parts / max_part bound the number of parts and the part size
    (None = unbounded); residues restricts part values to given residue
    classes modulo ``modulus``; min_gap forces successive parts (in
    decreasing order) to differ by at least that much; min_part bounds the
    smallest part from below.
    """

    max_parts: int | None = None
    max_part: int | None = None
    residues: frozenset[int] | None = None
    modulus: int | None = None
    min_gap: int | None = None
    min_part: int = 1

    def __post_init__(self) -> None:
        if (self.residues is None) != (self.modulus is None):
            raise ValueError("residues and modulus must be given together")
        if self.modulus is not None:
            if self.modulus < 2:
                raise ValueError("modulus must be at least 2")
            object.__setattr__(self, "residues", frozenset(self.residues or ()))
            if not all(0 <= r < self.modulus for r in self.residues or ()):
                raise ValueError("residues must lie in [0, modulus)")
        for name in ("max_parts", "max_part", "min_gap"):
            value = getattr(self, name)
            if value is not None and value < 0:
                raise ValueError(f"{name} must be nonnegative")
        if self.min_part < 0:
            raise ValueError("min_part must be nonnegative")

    @classmethod
    def box(cls, max_parts: int, max_part: int) -> PartitionConstraint:
        """At most max_parts parts, each at most max_part."""
        return cls(max_parts=max_parts, max_part=max_part)

    @classmethod
    def gap(cls, min_gap: int, min_part: int = 1) -> PartitionConstraint:
        """Successive parts differ by at least min_gap; parts >= min_part."""
        return cls(min_gap=min_gap, min_part=min_part)

    @classmethod
    def residue_classes(cls, residues: frozenset[int] | set[int], modulus: int) -> PartitionConstraint:
        """Parts restricted to the given residue classes mod modulus."""
        return cls(residues=frozenset(residues), modulus=modulus)


class _Counter:
    """Recursive enumerator sharing one memo across queries."""

    def __init__(self, constraint: PartitionConstraint) -> None:
        self.c = constraint
        self.memo: dict[tuple[int, int, int | None], int] = {}

    def count(self, m: int) -> int:
        if m < 0:
            raise ValueError("cannot partition a negative amount")
        cap = m if self.c.max_part is None else min(self.c.max_part, m)
        return self._rec(m, cap, self.c.max_parts)

    def _rec(self, remaining: int, largest: int, parts_left: int | None) -> int:
        if remaining == 0:
            return 1
        if parts_left == 0 or largest <= 0:
            return 0
        key = (remaining, largest, parts_left)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        c = self.c
        total = 0
        nxt = None if parts_left is None else parts_left - 1
        for p in range(min(largest, remaining), max(c.min_part, 1) - 1, -1):
            if c.residues is not None and p % c.modulus not in c.residues:
                continue
            total += self._rec(remaining - p, p - c.min_gap if c.min_gap else p, nxt)
        self.memo[key] = total
        return total


def count_partitions(m: int, constraint: PartitionConstraint) -> int:
    """Number of partitions of m satisfying the constraint (m = 0 counts 1).

    >>> count_partitions(2, PartitionConstraint.box(2, 2))
    2
    >>> count_partitions(6, PartitionConstraint.residue_classes({1, 4}, 5))
    3
    """
    return _Counter(constraint).count(m)


def partition_counts(constraint: PartitionConstraint, up_to: int) -> list[int]:
    """Counts for every m in 0..up_to, sharing one memo across the sweep."""
    if up_to < 0:
        raise ValueError("up_to must be nonnegative")
    counter = _Counter(constraint)
    return [counter.count(m) for m in range(up_to + 1)]


def gaussian_from_box(n: int, k: int) -> IntPoly:
    """Generating polynomial of partitions in a k x (n-k) box.

    Counted part by part, never via polynomial arithmetic; equals the
    Gaussian binomial [n,k] coefficient-for-coefficient.
    """
    if not 0 <= k <= n:
        raise ValueError("box oracle needs 0 <= k <= n")
    constraint = PartitionConstraint.box(k, n - k)
    return IntPoly(partition_counts(constraint, k * (n - k)))


def rr_oracle_series(order: int, variant: str = "first") -> QSeries:
    """Rogers-Ramanujan counts by enumeration, as a truncated series.

    first: partitions whose successive parts differ by at least 2;
    second: the same with all parts at least 2.
    """
    if variant == "first":
        constraint = PartitionConstraint.gap(2, 1)
    elif variant == "second":
        constraint = PartitionConstraint.gap(2, 2)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return QSeries(partition_counts(constraint, order))
