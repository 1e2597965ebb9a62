from itertools import combinations

import pytest

from fwwords import (
    OutOfRangeError,
    PeriodSet,
    Termination,
    batched_reduce,
    extremal_length,
    extremal_length_unbatched,
    fw_fast,
    fw_oracle,
    generating_prefix,
    is_palindrome,
    is_trivial,
    letter_at,
    letter_at_unbatched,
    pref,
    reduce_periods,
    reduction_chain,
)


def small_period_sets(max_period, max_size=3):
    for size in range(1, max_size + 1):
        for combo in combinations(range(1, max_period + 1), size):
            yield PeriodSet(combo)


def test_reduce_periods():
    assert reduce_periods(PeriodSet([5, 7])) == PeriodSet([2, 5])
    assert reduce_periods(PeriodSet([2, 5])) == PeriodSet([2, 3])
    assert reduce_periods(PeriodSet([4])) == PeriodSet([4])
    # collisions with the minimum collapse by set semantics
    assert reduce_periods(PeriodSet([3, 6])) == PeriodSet([3])


def test_reduce_preserves_gcd():
    for ps in small_period_sets(20, max_size=2):
        assert reduce_periods(ps).gcd == ps.gcd


def test_reduction_chain_worked_example():
    chain = reduction_chain(PeriodSet([5, 7]), 8)
    assert chain.steps == (
        (PeriodSet([5, 7]), 8),
        (PeriodSet([2, 5]), 3),
        (PeriodSet([2, 3]), 1),
    )
    assert chain.termination is Termination.LENGTH_AT_MOST_MIN


def test_reduction_chain_stops_immediately():
    chain = reduction_chain(PeriodSet([2, 4]), 100)
    assert chain.steps == ((PeriodSet([2, 4]), 100),)
    assert chain.termination is Termination.GCD_EQUALS_MIN

    chain = reduction_chain(PeriodSet([5, 7]), 4)
    assert chain.steps == ((PeriodSet([5, 7]), 4),)
    assert chain.termination is Termination.LENGTH_AT_MOST_MIN


def test_reduction_chain_tie_prefers_length():
    # both stop conditions hold at once: n <= min and min == gcd
    chain = reduction_chain(PeriodSet([2, 4]), 2)
    assert chain.termination is Termination.LENGTH_AT_MOST_MIN


def test_reduction_chain_invariants():
    for ps in small_period_sets(9):
        for n in (0, 5, 23, 40):
            chain = reduction_chain(ps, n)
            sets, lengths = zip(*chain.steps)
            assert lengths[0] == n and sets[0] == ps
            for (q0, n0), (q1, n1) in zip(chain.steps, chain.steps[1:]):
                assert n1 == n0 - q0.min_period
                assert q1 == reduce_periods(q0)
                assert q1.gcd == q0.gcd


def test_fw_fast_known_words():
    assert fw_fast(PeriodSet([5, 7]), 8) == (0, 1, 0, 3, 4, 0, 1, 0)
    assert fw_fast(PeriodSet([5, 7]), 3) == (0, 1, 2)
    assert fw_fast(PeriodSet([2, 4]), 5) == (0, 1, 0, 1, 0)
    assert fw_fast(PeriodSet([5, 7]), 0) == ()


def test_fw_fast_matches_oracle():
    for ps in small_period_sets(8):
        for n in range(26):
            assert fw_fast(ps, n) == fw_oracle(ps, n), (ps, n)


def test_fw_fast_is_min_periodic():
    for ps in [PeriodSet([5, 7]), PeriodSet([4, 6]), PeriodSet([3, 7, 11])]:
        w = fw_fast(ps, 30)
        m = ps.min_period
        for i in range(30):
            assert w[i] == w[i % m]


def test_generating_prefix():
    for ps in [PeriodSet([5, 7]), PeriodSet([2, 9]), PeriodSet([6, 9])]:
        for n in (0, 1, 3, 8, 25):
            gen = generating_prefix(ps, n)
            assert len(gen) == min(ps.min_period, n)
            word = fw_fast(ps, n)
            assert word[: len(gen)] == gen
    # affordable even when the word itself could never be materialized
    assert generating_prefix(PeriodSet([3, 10**9 + 7]), 10**12) == (0, 0, 0)


def test_prefix_property_via_fast_engine():
    for ps in small_period_sets(7):
        m = ps.min_period
        for k in range(20):
            assert fw_fast(reduce_periods(ps), k) == pref(fw_fast(ps, k + m), k)


def test_letter_at_known_positions():
    ps = PeriodSet([5, 7])
    assert letter_at(ps, 8, 4) == 4
    assert letter_at(ps, 8, 7) == 0
    assert letter_at(ps, 8, 0) == 0
    assert [letter_at(ps, 8, i) for i in range(8)] == [0, 1, 0, 3, 4, 0, 1, 0]


@pytest.mark.parametrize("n,i", [(8, 8), (8, -1), (0, 0)])
def test_letter_at_out_of_range(n, i):
    with pytest.raises(OutOfRangeError):
        letter_at(PeriodSet([5, 7]), n, i)
    with pytest.raises(OutOfRangeError):
        letter_at_unbatched(PeriodSet([5, 7]), n, i)


def test_letter_at_agrees_with_words_and_literal_recursion():
    for ps in small_period_sets(8):
        for n in range(22):
            w = fw_fast(ps, n)
            for i in range(n):
                assert letter_at(ps, n, i) == w[i]
                assert letter_at_unbatched(ps, n, i) == w[i]


def test_letter_at_astronomical_inputs():
    # far beyond the extremal length the word is trivial, i.e. constant 0
    # (its gcd is 1); the jumped query must see that instantly
    ps = PeriodSet([3, 10**9 + 7])
    assert 10**12 > extremal_length(ps)
    assert letter_at(ps, 10**12, 10**11 + 1) == 0
    assert letter_at(ps, 10**12, 10**12 - 1) == 0


def test_extremal_known_values():
    assert extremal_length(PeriodSet([5, 7])) == 10
    assert extremal_length(PeriodSet([2, 3])) == 3
    assert extremal_length(PeriodSet([3, 4])) == 5
    assert extremal_length(PeriodSet([4, 6])) == 7
    assert extremal_length(PeriodSet([2, 4])) is None
    assert extremal_length(PeriodSet([6])) is None
    assert extremal_length(PeriodSet([7, 11, 12])) == 14


def test_extremal_matches_oracle_scan():
    # the honest definition: the largest n whose maximal word is non-trivial
    for ps in [PeriodSet([5, 7]), PeriodSet([2, 3]), PeriodSet([6, 9]), PeriodSet([5, 7, 11])]:
        best = extremal_length(ps)
        scan = max(
            (n for n in range(1, best + 2 * ps.min_period + 1) if not is_trivial(fw_oracle(ps, n), ps)),
            default=None,
        )
        assert scan == best


def test_extremal_batched_equals_unbatched():
    for ps in small_period_sets(14):
        assert extremal_length(ps) == extremal_length_unbatched(ps)


def test_extremal_word_for_coprime_pair_is_palindromic():
    ps = PeriodSet([5, 7])
    w = fw_fast(ps, 10)
    assert w == fw_oracle(ps, 10) == (0, 1, 0, 1, 0, 0, 1, 0, 1, 0)
    assert is_palindrome(w)


def test_batched_reduce_jumps():
    assert batched_reduce(PeriodSet([3, 100])) == (PeriodSet([3, 4]), 32)
    assert batched_reduce(PeriodSet([5, 7])) == (PeriodSet([2, 5]), 1)
    assert batched_reduce(PeriodSet([5]), 3) == (PeriodSet([5]), 1)
    assert batched_reduce(PeriodSet([3, 100]), 10) == (PeriodSet([3, 70]), 10)


def test_batched_reduce_equals_literal_iteration():
    cur = PeriodSet([3, 100])
    for _ in range(32):
        cur = reduce_periods(cur)
    assert batched_reduce(PeriodSet([3, 100]))[0] == cur == PeriodSet([3, 4])


def test_batched_reduce_rejects_bad_budget():
    with pytest.raises(ValueError):
        batched_reduce(PeriodSet([5, 7]), 0)


def test_batched_reduce_replay_small():
    for ps in small_period_sets(25, max_size=2):
        literal = [ps]
        cur = ps
        while cur.min_period != cur.gcd:
            cur = reduce_periods(cur)
            literal.append(cur)
        cur, taken = ps, 0
        while cur.min_period != cur.gcd:
            cur, k = batched_reduce(cur)
            taken += k
            assert cur == literal[taken]
        assert taken == len(literal) - 1
