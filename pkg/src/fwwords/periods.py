"""Validated sets of word periods."""

from __future__ import annotations

import math
from collections.abc import Iterable, Iterator
from operator import index

from .errors import EmptyPeriodSetError, InvalidPeriodError


class PeriodSet:
    """Immutable sorted set of periods with its minimum and gcd precomputed.

    Duplicates collapse silently (set semantics); every value must be a
    positive integer.
    """

    __slots__ = ("periods", "min_period", "gcd")

    def __init__(self, values: Iterable[int]) -> None:
        periods = sorted({index(v) for v in values})
        if not periods:
            raise EmptyPeriodSetError("a period set needs at least one period")
        if periods[0] < 1:
            raise InvalidPeriodError(f"periods must be positive, got {periods[0]}")
        self.periods: tuple[int, ...] = tuple(periods)
        self.min_period: int = periods[0]
        self.gcd: int = math.gcd(*periods)

    def __iter__(self) -> Iterator[int]:
        return iter(self.periods)

    def __len__(self) -> int:
        return len(self.periods)

    def __contains__(self, p: object) -> bool:
        return p in self.periods

    def __eq__(self, other: object) -> bool:
        if isinstance(other, PeriodSet):
            return self.periods == other.periods
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.periods)

    def __repr__(self) -> str:
        return f"PeriodSet({list(self.periods)!r})"

    def __str__(self) -> str:
        return "{%s}" % ",".join(str(p) for p in self.periods)
