import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from delsub import (
    SCAN_CEILING,
    CodeParams,
    CodeStats,
    Word,
    bucket_counts,
    choose_params,
    codeword_values,
    enumerate_code,
    is_codeword,
    params_from_bucket,
    params_of,
    redundancy,
    wt_f1_f2,
)

W = Word.from_text


@st.composite
def words(draw, min_n=2, max_n=16):
    n = draw(st.integers(min_n, max_n))
    return Word(n, draw(st.integers(0, (1 << n) - 1)))


# --- params and membership -------------------------------------------------


def test_params_validation():
    with pytest.raises(ValueError):
        CodeParams(1, 0, 0, 0)
    with pytest.raises(ValueError):
        CodeParams(8, 4, 0, 0)
    with pytest.raises(ValueError):
        CodeParams(8, 0, 16, 0)
    with pytest.raises(ValueError):
        CodeParams(8, 0, 0, 128)


@given(st.integers(2, 24), st.data())
def test_bucket_index_round_trip(n, data):
    idx = data.draw(st.integers(0, 16 * n**3 - 1))
    assert params_from_bucket(n, idx).bucket_index == idx


def test_constant_words_are_never_codewords():
    for n in (4, 9):
        for p in (params_of(Word.zeros(n)), params_of(Word.ones(n))):
            assert not is_codeword(Word.zeros(n), p)
            assert not is_codeword(Word.ones(n), p)


def test_known_codeword():
    assert is_codeword(W("1010"), CodeParams(4, 2, 4, 7))
    assert not is_codeword(W("1010"), CodeParams(4, 2, 4, 6))


def test_is_codeword_rejects_length_mismatch():
    with pytest.raises(ValueError):
        is_codeword(W("10100"), CodeParams(4, 2, 4, 7))


@given(words())
def test_params_of_contains_its_word(w):
    expected = w.value not in (0, (1 << w.n) - 1)
    assert is_codeword(w, params_of(w)) == expected


# --- scans -------------------------------------------------------------------


def test_partition_sums_to_all_nonconstant_words():
    for n in range(2, 21):
        assert bucket_counts(n).sum() == (1 << n) - 2


def test_scan_engines_agree_exhaustively():
    for n in range(2, 15):
        assert np.array_equal(bucket_counts(n), bucket_counts(n, engine="gray"))


def test_scan_rejects_out_of_range_n():
    with pytest.raises(ValueError):
        bucket_counts(SCAN_CEILING + 1)
    with pytest.raises(ValueError):
        choose_params(1)
    with pytest.raises(ValueError):
        bucket_counts(8, engine="fft")


@given(words(max_n=24), st.data())
def test_single_flip_deltas(w, data):
    """Flipping position i moves (wt, f1, f2) by exactly (1, i, i(i+1)/2)."""
    i = data.draw(st.integers(1, w.n))
    before = wt_f1_f2(w.value, w.n)
    after = wt_f1_f2(w.value ^ (1 << (w.n - i)), w.n)
    sign = -1 if w.bit(i) else 1
    assert after[0] - before[0] == sign
    assert after[1] - before[1] == sign * i
    assert after[2] - before[2] == sign * i * (i + 1) // 2


def test_choose_params_pigeonhole_bound():
    for n in range(2, 17):
        _, stats = choose_params(n)
        assert stats.size >= math.ceil(((1 << n) - 2) / (16 * n**3))
        # redundancy form of the same bound, with the exact correction term
        slack = math.log2((1 << n) / ((1 << n) - 2))
        assert redundancy(stats) <= 3 * math.log2(n) + 4 + slack


def test_choose_params_tie_break_is_first_maximum():
    for n in (6, 10):
        counts = bucket_counts(n)
        best = int(np.argmax(counts))
        p, stats = choose_params(n)
        assert p.bucket_index == best
        assert stats.size == counts[best]
        # every earlier bucket is strictly smaller: smallest-triple tie-break
        assert (counts[:best] < counts[best]).all()


def test_choose_params_worker_and_engine_invariance():
    reference = choose_params(12)
    for workers in (2, 3, 5):
        assert choose_params(12, workers=workers) == reference
    assert choose_params(12, engine="gray") == reference


# --- enumeration ------------------------------------------------------------


def test_enumerate_matches_membership_filter():
    p, _ = choose_params(10)
    got = list(enumerate_code(p))
    expected = [Word(10, v) for v in range(1 << 10) if is_codeword(Word(10, v), p)]
    assert got == expected
    assert got == sorted(got)


def test_enumerate_arbitrary_class():
    p = CodeParams(9, 1, 3, 17)
    got = list(enumerate_code(p))
    assert got == [Word(9, v) for v in range(1 << 9) if is_codeword(Word(9, v), p)]


def test_enumerate_skips_constant_words():
    for n in (6, 9):
        for w in (Word.zeros(n), Word.ones(n)):
            assert w not in set(enumerate_code(params_of(w)))


def test_codeword_values_worker_invariance():
    p, _ = choose_params(12)
    reference = codeword_values(p)
    for workers in (2, 3):
        assert np.array_equal(codeword_values(p, workers=workers), reference)


def test_class_sizes_match_bucket_counts():
    n = 6
    counts = bucket_counts(n)
    for idx in range(16 * n**3):
        assert len(codeword_values(params_from_bucket(n, idx))) == counts[idx]


# --- stats -------------------------------------------------------------------


def test_redundancy_values():
    assert redundancy(CodeStats(7, 1)) == 7
    near_full = CodeStats(10, (1 << 10) - 2)
    assert redundancy(near_full) == pytest.approx(10 - math.log2((1 << 10) - 2))
    assert near_full.redundancy == redundancy(near_full)


def test_redundancy_of_empty_class():
    empty = CodeStats(8, 0)
    assert empty.redundancy is None
    with pytest.raises(ValueError):
        redundancy(empty)
