import pytest

from pawnnim.grundy import GrundyTable, epsilon
from pawnnim.oracle import (BLACK, WHITE, BoardPosition, NonUniqueHeapError,
                            ResourceLimitError, Solver, SumPosition,
                            apply_move, initial_position, legal_moves,
                            oracle_epsilon, oracle_is_loony, outcome,
                            principal_variation)
from pawnnim.words import enumerate_words


def test_initial_position_single_file():
    pos = initial_position(["0"])
    assert pos.width == 1
    assert pos.piece_at(0, 1) == "P"
    assert pos.piece_at(0, 3) == "p"
    assert pos.piece_at(0, 2) == "."
    assert not pos.stopped


def test_initial_position_two_components():
    pos = initial_position(["0000000", "0000"])
    assert pos.width == 12
    assert pos.piece_at(7, 1) == "."  # separator file
    assert pos.piece_at(8, 1) == "P"


def test_initial_position_stopped_files():
    pos = initial_position(["1000"])
    assert pos.width == 4
    assert pos.stopped == frozenset({0})
    with pytest.raises(ValueError):
        initial_position(["110"])


def test_legal_moves_counts():
    pos = initial_position(["0"])
    assert len(legal_moves(pos)) == 1
    pos = initial_position(["00"])
    advance = next(m for m in legal_moves(pos) if m.from_file == 0)
    after = apply_move(pos, advance)
    # attacked pawn may capture the advanced pawn or step forward
    replies = legal_moves(after)
    assert len(replies) == 2
    assert sorted(m.capture for m in replies) == [False, True]


def test_outcome_examples():
    assert outcome(initial_position(["000"]), 0) is False
    assert outcome(initial_position(["000"]), 1) is True
    assert outcome(initial_position(["1000"]), 2) is False
    assert outcome(SumPosition(initial_position(["000"]), 1)) is True


def test_oracle_epsilon_examples():
    assert oracle_epsilon("0") == 1
    assert oracle_epsilon("10") == 0
    assert oracle_epsilon("1000") == 2


def test_oracle_epsilon_rejects_small_heap_cap():
    # with max_heap 1 the value-2 component has no losing heap in range
    with pytest.raises(NonUniqueHeapError):
        oracle_epsilon("1000", max_heap=1)


def test_oracle_is_loony_examples():
    assert oracle_is_loony("00", 0) is True
    assert oracle_is_loony("1000", 1) is False
    assert oracle_is_loony("1000", 0) is True


def test_engine_oracle_agreement_small():
    table = GrundyTable()
    for m in range(1, 5):
        for w in enumerate_words(m):
            assert oracle_epsilon(w) == epsilon(w, table), str(w)


def test_two_component_sum_zero_iff_equal_values():
    table = GrundyTable()
    for w1 in ("0", "00", "10"):
        for w2 in ("0", "00", "1"):
            loses = not outcome(initial_position([w1, w2]), 0)
            assert loses == (epsilon(w1, table) == epsilon(w2, table))


def test_interior_between_stopped_files_never_loony():
    # an interior move with both neighbour files stopped is a plain
    # exchange; the game tree confirms it on every length-6 word
    for m in range(3, 7):
        for w in enumerate_words(m):
            for k in range(1, m - 1):
                if w[k - 1] == 1 and w[k + 1] == 1:
                    assert not oracle_is_loony(w, k, 3), (str(w), k)


def test_first_player_symmetry():
    for text in ("0", "00", "10", "000", "1000"):
        for heap in (0, 1):
            a = outcome(initial_position([text], WHITE), heap)
            b = outcome(initial_position([text], BLACK), heap)
            assert a == b, (text, heap)


def test_touchdown_positions():
    pos = initial_position(["00"])
    # hand-built: White pawn already on the far row of an unstopped file
    won = BoardPosition(pos.width, pos.stopped, 1 << 2, pos.black & ~(1 << 2),
                        BLACK)
    assert won.touchdown_winner() == WHITE
    assert outcome(won, 0) is False  # Black to move has already lost
    assert SumPosition(won).terminal_winner == WHITE
    # the same pawn on a stopped file wins nothing
    stopped = BoardPosition(pos.width, frozenset({0}), 1 << 2,
                            pos.black & ~(1 << 2), BLACK)
    assert stopped.touchdown_winner() is None


def test_inert_pawn_on_stopped_far_row():
    # advancing to the far row of a stopped file is legal but wins nothing
    pos = BoardPosition(2, frozenset({0}), 1 << 1, 1 << 5, WHITE)
    moves = legal_moves(pos)
    advance = next(m for m in moves if m.to_row == 3 and m.to_file == 0)
    after = apply_move(pos, advance)
    assert after.touchdown_winner() is None
    assert after.piece_at(0, 3) == "P"


def test_resource_limit():
    with pytest.raises(ResourceLimitError):
        Solver(max_states=4).wins(initial_position(["00000"]), 0)


def test_principal_variation_smoke():
    line = principal_variation(initial_position(["000"]), 1)
    assert line
    assert all(isinstance(s, str) for s in line)
    # first entry is a board move or a heap reduction
    assert line[0].count(",") >= 2 or line[0].startswith("heap->")


def test_move_notation():
    pos = initial_position(["00"])
    advance = next(m for m in legal_moves(pos) if m.from_file == 0)
    assert advance.notation() == "1,1,2"
    after = apply_move(pos, advance)
    cap = next(m for m in legal_moves(after) if m.capture)
    assert cap.notation() == "1,3,2,x"
