import pytest

from tests.conftest import RUN_SLOW
from tests.oracles import naive_protected, random_positions
from xiangqi_judge.board import Kind, Move, emit_fen, generate_moves, make_move, parse_fen, square, unmake_move
from xiangqi_judge.rules.protection import (
    OccupancySnapshot,
    get_defenders,
    has_legal_recapture,
    is_protected,
    piece_value_class,
)

# black rook d8 takes the knight on d9; the red cannon on d2 can only take
# back through d8 as its screen
SNAPSHOT_FEN = "3N1k3/3ra4/9/7R1/9/9/9/3CK4/9/9 b"


@pytest.mark.parametrize(
    "kind, value",
    [
        (Kind.ROOK, 3),
        (Kind.KNIGHT, 2),
        (Kind.CANNON, 2),
        (Kind.ADVISOR, 1),
        (Kind.ELEPHANT, 1),
        (Kind.PAWN, 1),
    ],
)
def test_value_classes(kind, value):
    assert piece_value_class(kind) == value


def test_king_has_no_value_class():
    with pytest.raises(ValueError):
        piece_value_class(Kind.KING)


def test_slider_defender_uses_pre_capture_snapshot():
    p = parse_fen(SNAPSHOT_FEN)
    capture = Move(square(3, 8), square(3, 9), Kind.KNIGHT)
    snapshot = OccupancySnapshot.take(p)
    token = make_move(p, capture)
    try:
        assert get_defenders(p, capture.to, snapshot) == [
            Move(square(3, 2), square(3, 9), Kind.ROOK)
        ]
        assert get_defenders(p, capture.to, OccupancySnapshot.take(p)) == []
    finally:
        unmake_move(p, token)
    assert has_legal_recapture(p, capture)
    assert is_protected(p, capture)


def test_snapshot_membership():
    p = parse_fen(SNAPSHOT_FEN)
    snapshot = OccupancySnapshot.take(p)
    assert square(3, 8) in snapshot
    assert snapshot(square(3, 2))
    assert not snapshot(square(0, 0))


def test_more_valuable_victim_is_never_protected():
    # the pawn takes a rook that the knight on f8 could take back
    p = parse_fen("4k4/5n3/9/4r4/4P4/9/9/9/9/3K5 w")
    capture = Move(square(4, 5), square(4, 6), Kind.ROOK)
    assert has_legal_recapture(p, capture)
    assert not is_protected(p, capture)


def test_pinned_defender_does_not_protect():
    # the rook on e1 could take back on c1 but it is pinned by the rook on e8
    p = parse_fen("3k5/4r4/9/9/9/9/1n7/9/2N1R4/4K4 b")
    capture = Move(square(1, 3), square(2, 1), Kind.KNIGHT)
    snapshot = OccupancySnapshot.take(p)
    token = make_move(p, capture)
    defenders = get_defenders(p, capture.to, snapshot)
    unmake_move(p, token)
    assert defenders == [Move(square(4, 1), square(2, 1), Kind.KNIGHT)]
    assert not has_legal_recapture(p, capture)
    assert not is_protected(p, capture)


@pytest.mark.parametrize("seed", [11, 12, 13, 14])
def test_is_protected_matches_snapshot_oracle(seed):
    # every capture kind, rook and cannon screens read before the capture
    count = 250 if RUN_SLOW else 30
    checked = 0
    for p in random_positions(seed, count):
        for move in generate_moves(p):
            if move.captured in (None, Kind.KING):
                continue
            assert is_protected(p, move) == naive_protected(p, move), "%s %s" % (emit_fen(p), move)
            checked += 1
    assert checked > 0


def test_snapshot_oracle_agrees_on_cannon_screen():
    p = parse_fen(SNAPSHOT_FEN)
    capture = Move(square(3, 8), square(3, 9), Kind.KNIGHT)
    assert naive_protected(p, capture)
    assert is_protected(p, capture)
