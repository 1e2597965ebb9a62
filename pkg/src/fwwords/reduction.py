"""Fast engine: Euclid-style period reduction.

One reduction step maps P to {p - m : p in P, p != m} | {m} with m = min(P).
It preserves the gcd, and the maximal-alphabet word for (P, n) is the
m-periodic extension of the one for (reduced P, n - m), patched with fresh
letters where the shorter word does not reach. Descending until the length
or the gcd makes the answer immediate, then re-extending, reproduces the
union-find oracle's word letter for letter at a cost driven by the
reduction chain instead of by n.

Consecutive steps that share the same minimum are collapsed into single
arithmetic jumps, which is what makes letter queries and extremal lengths
for periods around 10**12 effectively instant. Each jumped routine keeps a
deliberately literal twin (`letter_at_unbatched`, `extremal_length_unbatched`,
iterated `reduce_periods`) that serves as its test oracle.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from .errors import OutOfRangeError
from .periods import PeriodSet
from .words import Word, extend_periodically


class Termination(enum.Enum):
    """Why a reduction chain stopped."""

    LENGTH_AT_MOST_MIN = "LengthAtMostMin"
    GCD_EQUALS_MIN = "GcdEqualsMin"


@dataclass(frozen=True)
class ReductionChain:
    """Every (period set, length) pair visited, outermost first."""

    steps: tuple[tuple[PeriodSet, int], ...]
    termination: Termination


def reduce_periods(periods: PeriodSet) -> PeriodSet:
    """One reduction step: subtract the minimum from every other period, keep the minimum."""
    m = periods.min_period
    return PeriodSet({p - m for p in periods if p != m} | {m})


def _window(periods: tuple[int, ...]) -> int:
    # How many reduction steps one arithmetic jump may cover: the minimum must
    # stay the minimum and no other element may collide with it before the
    # jump's final set, which caps the count at (second - m) // m. Always >= 1.
    if len(periods) == 1:
        return 1
    m = periods[0]
    return max(1, (periods[1] - m) // m)


def _jump(periods: tuple[int, ...], k: int) -> tuple[int, ...]:
    # k reduction steps at once; literal-equivalent for any k <= _window(periods).
    m = periods[0]
    shift = k * m
    return tuple(sorted({p - shift for p in periods[1:]} | {m}))


def batched_reduce(periods: PeriodSet, budget: int | None = None) -> tuple[PeriodSet, int]:
    """Apply up to `budget` reduction steps in one arithmetic pass.

    Returns the resulting set and the number of steps taken (always >= 1,
    at most the budget; None means unlimited). The step count is capped so
    that the jump equals that many literal `reduce_periods` applications.
    """
    if budget is not None and budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    k = _window(periods.periods)
    if budget is not None:
        k = min(k, budget)
    return PeriodSet(_jump(periods.periods, k)), k


def reduction_chain(periods: PeriodSet, n: int) -> ReductionChain:
    """Iterate the reduction literally, recording every (set, length) visited.

    Stops at the first length <= min (LengthAtMostMin) or min == gcd
    (GcdEqualsMin); when both hold, the length condition wins. Lengths drop
    by at least one per step, so the chain is finite.
    """
    if n < 0:
        raise OutOfRangeError(f"length must be >= 0, got {n}")
    steps = [(periods, n)]
    cur, length = periods, n
    while True:
        if length <= cur.min_period:
            return ReductionChain(tuple(steps), Termination.LENGTH_AT_MOST_MIN)
        if cur.min_period == cur.gcd:
            return ReductionChain(tuple(steps), Termination.GCD_EQUALS_MIN)
        length -= cur.min_period
        cur = reduce_periods(cur)
        steps.append((cur, length))


def generating_prefix(periods: PeriodSet, n: int) -> Word:
    """The length-min(min_period, n) prefix that generates fw_fast(periods, n).

    The full word is its periodic extension to length n; this is the whole
    computation apart from that final copy, and the only part that stays
    affordable when n itself is too large to materialize.
    """
    if n < 0:
        raise OutOfRangeError(f"length must be >= 0, got {n}")
    gcd = periods.gcd
    cur = periods.periods
    length = n
    jumps: list[tuple[int, int]] = []
    while True:
        m = cur[0]
        if length <= m or m == gcd:
            break
        k = min(_window(cur), (length - 1) // m)
        jumps.append((m, k))
        cur = _jump(cur, k)
        length -= k * m
    if length <= cur[0]:
        # all classes are singletons at this length
        gen: Word = tuple(range(length))
    else:
        # min == gcd: classes are the residues mod min
        gen = tuple(range(cur[0]))
    for m, k in reversed(jumps):
        bottom = length
        if m <= bottom:
            gen = extend_periodically(gen, m)
        else:
            gen = extend_periodically(gen, bottom) + tuple(range(bottom, m))
        # the other k-1 levels of this jump share the minimum m and sit over
        # lengths >= bottom + m > m, so their generator is unchanged
        length += k * m
    return gen


def fw_fast(periods: PeriodSet, n: int) -> Word:
    """The same word as fw_oracle(periods, n), built through the reduction chain.

    Descends with arithmetic jumps, keeps one length-min generating prefix
    per jump, and extends to the full length once at the top. Letters match
    the oracle exactly, not merely up to renaming.
    """
    return extend_periodically(generating_prefix(periods, n), n)


def letter_at(periods: PeriodSet, n: int, i: int) -> int:
    """fw_fast(periods, n)[i] without building any word.

    Follows the same jumps as `generating_prefix` at O(1) cost per jump, so
    single letters of astronomically long words resolve immediately. At a
    level of length n' and minimum m: positions past n' - m (mod m) keep
    the letter i mod m, everything else defers to the reduced level.
    """
    if not 0 <= i < n:
        raise OutOfRangeError(f"position {i} out of range for length {n}")
    gcd = periods.gcd
    cur = periods.periods
    while True:
        m = cur[0]
        if n <= m:
            return i
        if m == gcd:
            return i % m
        i %= m
        if i >= n - m:
            return i
        # descend while the level keeps deferring: needs n - t*m > i + m
        k = min(_window(cur), (n - i - 1) // m)
        cur = _jump(cur, k)
        n -= k * m


def letter_at_unbatched(periods: PeriodSet, n: int, i: int) -> int:
    """One-level-at-a-time twin of letter_at; O(n / min) levels, test use only."""
    if not 0 <= i < n:
        raise OutOfRangeError(f"position {i} out of range for length {n}")
    cur = periods
    while True:
        m = cur.min_period
        if n <= m:
            return i
        r = i % m
        if r >= n - m:
            return r
        cur, n, i = reduce_periods(cur), n - m, r


def extremal_length(periods: PeriodSet) -> int | None:
    """Length of the longest word having these periods but not their gcd as a period.

    None when gcd == min: every word with the periods then has their gcd as
    a period too, at every length. Otherwise the value follows the
    recurrence value(P) = min(P) + max(value(reduced P), min(P) - 1), folded
    over arithmetic jumps, seeded with min - 1 once the reduction reaches a
    set whose min equals its gcd (a formal seed, validated against oracle
    scans in the test suite, not itself an achieved length).
    """
    if periods.gcd == periods.min_period:
        return None
    gcd = periods.gcd
    cur = periods.periods
    jumps: list[tuple[int, int]] = []
    while cur[0] != gcd:
        k = _window(cur)
        jumps.append((cur[0], k))
        cur = _jump(cur, k)
    value = cur[0] - 1
    for m, k in reversed(jumps):
        # k levels at the same minimum telescope: m + max(m-1, .) applied k
        # times equals k*m + max(m-1, .) because intermediate values exceed m-1
        value = k * m + max(m - 1, value)
    return value


def extremal_length_unbatched(periods: PeriodSet) -> int | None:
    """Step-by-step twin of extremal_length; test use only."""
    if periods.gcd == periods.min_period:
        return None
    mins: list[int] = []
    cur = periods
    while cur.min_period != cur.gcd:
        mins.append(cur.min_period)
        cur = reduce_periods(cur)
    value = cur.min_period - 1
    for m in reversed(mins):
        value = m + max(m - 1, value)
    return value
