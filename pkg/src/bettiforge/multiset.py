"""Exact finite multisets of integers.

All degree bookkeeping in this package (generator degrees, syzygy twists,
socle degrees) is carried by finite multisets of integers.  Values may be
negative: bordered pfaffian presentations force twist slots below zero.
The representation is a run-length encoding sorted by value, so equality
is structural and JSON round-trips are canonical.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


@dataclass(frozen=True)
class IntMultiset:
    """A multiset of integers stored as sorted ``(value, multiplicity)`` runs."""

    entries: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = None
        for value, mult in self.entries:
            if mult < 1:
                raise ValueError(f"multiplicity of {value} must be positive, got {mult}")
            if prev is not None and value <= prev:
                raise ValueError("entries must be strictly increasing by value")
            prev = value

    # ------------------------------------------------------------------
    # construction
    # ------------------------------------------------------------------

    @classmethod
    def from_values(cls, values: Iterable[int]) -> "IntMultiset":
        counts: dict[int, int] = {}
        for v in values:
            v = int(v)
            counts[v] = counts.get(v, 0) + 1
        return cls(tuple((v, counts[v]) for v in sorted(counts)))

    @classmethod
    def empty(cls) -> "IntMultiset":
        return cls(())

    # ------------------------------------------------------------------
    # queries
    # ------------------------------------------------------------------

    def multiplicity(self, value: int) -> int:
        for v, m in self.entries:
            if v == value:
                return m
            if v > value:
                break
        return 0

    def support(self) -> tuple[int, ...]:
        return tuple(v for v, _ in self.entries)

    def card(self) -> int:
        """Total element count |M|."""
        return sum(m for _, m in self.entries)

    def norm(self) -> int:
        """Weighted sum of values with multiplicity."""
        return sum(v * m for v, m in self.entries)

    def values(self) -> list[int]:
        """Expanded sorted list with repetitions, e.g. [3, 6, 6, 6]."""
        out: list[int] = []
        for v, m in self.entries:
            out.extend([v] * m)
        return out

    def min(self) -> int:
        if not self.entries:
            raise ValueError("empty multiset has no minimum")
        return self.entries[0][0]

    def max(self) -> int:
        if not self.entries:
            raise ValueError("empty multiset has no maximum")
        return self.entries[-1][0]

    def __len__(self) -> int:
        return self.card()

    def __iter__(self) -> Iterator[int]:
        return iter(self.values())

    def __contains__(self, value: int) -> bool:
        return self.multiplicity(value) > 0

    def __bool__(self) -> bool:
        return bool(self.entries)

    # ------------------------------------------------------------------
    # multiset algebra
    # ------------------------------------------------------------------

    def intersect(self, other: "IntMultiset") -> "IntMultiset":
        """Value-wise minimum of multiplicities."""
        out = []
        for v, m in self.entries:
            k = min(m, other.multiplicity(v))
            if k > 0:
                out.append((v, k))
        return IntMultiset(tuple(out))

    def union(self, other: "IntMultiset") -> "IntMultiset":
        """Value-wise maximum of multiplicities."""
        counts = dict(self.entries)
        for v, m in other.entries:
            counts[v] = max(counts.get(v, 0), m)
        return IntMultiset(tuple((v, counts[v]) for v in sorted(counts)))

    def sum(self, other: "IntMultiset") -> "IntMultiset":
        """Disjoint union: multiplicities add."""
        counts = dict(self.entries)
        for v, m in other.entries:
            counts[v] = counts.get(v, 0) + m
        return IntMultiset(tuple((v, counts[v]) for v in sorted(counts)))

    def diff(self, other: "IntMultiset") -> "IntMultiset":
        """Truncated difference: keeps value v with multiplicity max(0, m_self - m_other)."""
        out = []
        for v, m in self.entries:
            k = m - other.multiplicity(v)
            if k > 0:
                out.append((v, k))
        return IntMultiset(tuple(out))

    def is_submultiset(self, other: "IntMultiset") -> bool:
        return all(m <= other.multiplicity(v) for v, m in self.entries)

    def affine(self, n: int, sign: int) -> "IntMultiset":
        """Map every value y to n + sign*y, preserving multiplicities.

        ``sign`` must be +1 or -1.
        """
        if sign not in (1, -1):
            raise ValueError("sign must be +1 or -1")
        if sign == 1:
            return IntMultiset(tuple((n + v, m) for v, m in self.entries))
        return IntMultiset(tuple((n - v, m) for v, m in reversed(self.entries)))

    __and__ = intersect
    __or__ = union
    __add__ = sum
    __sub__ = diff
    __le__ = is_submultiset

    # ------------------------------------------------------------------
    # encoding
    # ------------------------------------------------------------------

    def to_list(self) -> list[int]:
        return self.values()

    def __str__(self) -> str:
        return "{{" + ",".join(str(v) for v in self.values()) + "}}"
