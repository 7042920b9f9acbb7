import io

import numpy as np
import pytest

from pawnnim.grundy import (GrundyTable, InsufficientTableError,
                            PeriodicTable, detect_period, dump_values,
                            epsilon, epsilon_periodic, epsilon_plain,
                            load_dump, loony_plain, mex, nim_sum,
                            verify_period_window)
from pawnnim.words import PeriodicPattern, Word, enumerate_words, reverse, \
    word_from_pattern


@pytest.fixture(scope="module")
def table():
    return GrundyTable()


def test_mex():
    assert mex([]) == 0
    assert mex([1]) == 0
    assert mex([0, 1]) == 2
    assert mex([0, 2, 3]) == 1
    assert mex([-1, 0, 1]) == 2  # loony markers are ignored


def test_nim_sum():
    assert nim_sum(1, 1) == 0
    assert nim_sum(1, 2) == 3
    assert nim_sum(0, 7) == 7
    with pytest.raises(ValueError):
        nim_sum(-1, 0)


def test_epsilon_known_values(table):
    known = {"": 0, "0": 1, "1": 1, "00": 0, "10": 0, "000": 0,
             "0000": 1, "00000": 1, "0000000": 1, "1000": 2,
             "101001000": 4}
    for text, expected in known.items():
        assert epsilon(Word(text), table) == expected, text


def test_epsilon_minimal_power_witnesses(table):
    # published minimal-length components of value 8 and 16
    assert epsilon(Word("10100100010100001000"), table) == 8
    assert epsilon(
        Word("1010010001000000010100010000000101000100101"), table) == 16


def test_epsilon_rejects_invalid(table):
    with pytest.raises(ValueError):
        epsilon(Word("110"), table)


def test_epsilon_accepts_str(table):
    assert epsilon("1000", table) == 2


def test_epsilon_plain_closed_form():
    assert epsilon_plain(3) == 0
    assert epsilon_plain(5) == 1
    assert epsilon_plain(23) == 0
    assert [epsilon_plain(m) for m in range(10)] == [
        0, 1, 0, 0, 1, 1, 0, 1, 1, 0]
    with pytest.raises(ValueError):
        epsilon_plain(-1)


def test_epsilon_matches_plain_closed_form(table):
    for m in range(0, 160):
        assert epsilon(Word("0" * m), table) == epsilon_plain(m), m


def test_loony_plain():
    assert loony_plain(1)
    assert not loony_plain(3)
    assert loony_plain(6)
    assert [m for m in range(1, 12) if loony_plain(m)] == [1, 4, 6, 9, 11]


def test_epsilon_reversal_invariance(table):
    for m in range(1, 11):
        for w in enumerate_words(m):
            assert epsilon(w, table) == epsilon(reverse(w), table), str(w)


def test_epsilon_bounded_by_length(table):
    for m in range(1, 11):
        for w in enumerate_words(m):
            assert 0 <= epsilon(w, table) <= m


def test_memo_idempotent(table):
    w = Word("100101")
    first = epsilon(w, table)
    snapshot = dict(table.eps)
    assert epsilon(w, table) == first
    assert table.eps == snapshot
    # recomputing any entry from scratch agrees with the stored value
    fresh = GrundyTable()
    assert epsilon(w, fresh) == first


# -- periodic families -------------------------------------------------------

def test_epsilon_periodic_plain_matches_closed_form():
    vals = epsilon_periodic(PeriodicPattern(1, frozenset()), 60)
    assert [int(v) for v in vals] == [epsilon_plain(m) for m in range(61)]


def test_epsilon_periodic_agrees_with_direct(table):
    patterns = [PeriodicPattern(6, frozenset({4})),
                PeriodicPattern(14, frozenset({0, 5})),
                PeriodicPattern(4, frozenset({1})),
                PeriodicPattern(5, frozenset({2}), file_origin=3)]
    for pattern in patterns:
        vals = epsilon_periodic(pattern, 60)
        for length in range(61):
            w = word_from_pattern(pattern, length)
            assert vals[length] == epsilon(w, table), (pattern, length)


def test_periodic_table_extend_matches_fresh():
    pattern = PeriodicPattern(6, frozenset({4}))
    grown = PeriodicTable(pattern, 30)
    grown.extend(90)
    fresh = PeriodicTable(pattern, 90)
    assert np.array_equal(grown.E, fresh.E)
    assert np.array_equal(grown.CF, fresh.CF)
    assert np.array_equal(grown.CR, fresh.CR)


def test_detect_period_plain():
    pattern = PeriodicPattern(1, frozenset())
    t = PeriodicTable(pattern, 30)
    report = detect_period(t.values(), pattern, t)
    assert (report.preperiod, report.period) == (0, 10)
    assert report.verified
    assert report.window == (10, 23)


def test_detect_period_constant_and_absent():
    pattern = PeriodicPattern(1, frozenset())
    constant = detect_period(np.zeros(12, dtype=int), pattern)
    assert constant.period == 1 and constant.preperiod == 0
    assert not constant.verified  # no table given
    assert detect_period(np.arange(12), pattern) is None


def test_verify_period_window_plain():
    pattern = PeriodicPattern(1, frozenset())
    t = PeriodicTable(pattern, 23)
    assert verify_period_window(t, pattern, 0, 10)
    assert not verify_period_window(t, pattern, 0, 5)
    with pytest.raises(InsufficientTableError):
        verify_period_window(PeriodicTable(pattern, 20), pattern, 0, 10)


def test_periodic_table_save_load(tmp_path):
    pattern = PeriodicPattern(6, frozenset({4}))
    t = PeriodicTable(pattern, 40)
    path = tmp_path / "p6.npz"
    t.save(path)
    back = PeriodicTable.load(path)
    assert back.pattern == pattern
    assert back.n == 40
    assert np.array_equal(back.E, t.E)
    back.extend(80)
    assert np.array_equal(back.E, PeriodicTable(pattern, 80).E)


def test_dump_round_trip():
    pattern = PeriodicPattern(6, frozenset({4}))
    vals = epsilon_periodic(pattern, 25)
    buf = io.StringIO()
    dump_values(vals, pattern, buf, version="0.0-test")
    text = buf.getvalue()
    assert text.startswith("# pawnnim 0.0-test periodic values")
    assert "#phase-table:" in text.splitlines()[1]
    got_pattern, got_vals = load_dump(io.StringIO(text))
    assert got_pattern == pattern
    assert np.array_equal(got_vals, vals)
