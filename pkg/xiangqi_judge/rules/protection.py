"""Whether a piece under a hypothetical capture can be taken back.

This is a one-ply boolean exchange test, not a full swap-off: the victim
counts as protected when at least one of its own pieces has a legal
recapture on the square. Rook and cannon defenders see the board as it
was before the capture, so the capturing piece still screens or blocks
from its original square.
"""
import logging

from ..board.constants import Kind, Move, in_palace, own_half
from ..board.movegen import (
    ADVISOR_MOVES,
    ELEPHANT_MOVES,
    KING_MOVES,
    KNIGHT_MOVES,
    PAWN_MOVES,
    RAYS,
    is_legal,
)
from ..board.position import make_move, unmake_move

logger = logging.getLogger(__name__)

VALUE_CLASS = {
    Kind.ROOK: 3,
    Kind.KNIGHT: 2,
    Kind.CANNON: 2,
    Kind.ADVISOR: 1,
    Kind.ELEPHANT: 1,
    Kind.PAWN: 1,
}

DEFENDER_ORDER = (
    Kind.ADVISOR,
    Kind.ELEPHANT,
    Kind.PAWN,
    Kind.KNIGHT,
    Kind.CANNON,
    Kind.ROOK,
    Kind.KING,
)

# squares a knight can jump from to land on `to`, with the leg it needs empty
KNIGHT_SOURCES = [[] for _ in range(len(KNIGHT_MOVES))]
for _frm, _entries in enumerate(KNIGHT_MOVES):
    for _to, _leg in _entries:
        KNIGHT_SOURCES[_to].append((_frm, _leg))


def piece_value_class(kind):
    if kind == Kind.KING:
        raise ValueError("the king has no exchange value class")
    return VALUE_CLASS[kind]


class OccupancySnapshot:
    """Occupied squares of a position, frozen before a capture is applied."""

    __slots__ = ("_occupied",)

    def __init__(self, occupied):
        self._occupied = frozenset(occupied)

    @classmethod
    def take(cls, p):
        return cls(sq for sq, pc in enumerate(p.board) if pc is not None)

    def __call__(self, sq):
        return sq in self._occupied

    def __contains__(self, sq):
        return sq in self._occupied


def _is(piece, color, kind):
    return piece is not None and piece.color == color and piece.kind == kind


def iter_defenders(p, to, snapshot):
    board = p.board
    color = p.side
    captured = board[to].kind if board[to] is not None else None

    for kind in DEFENDER_ORDER:
        if kind == Kind.ADVISOR:
            if in_palace(color, to):
                for frm in ADVISOR_MOVES[color][to]:
                    if _is(board[frm], color, kind):
                        yield Move(frm, to, captured)
        elif kind == Kind.ELEPHANT:
            if own_half(color, to):
                for frm, eye in ELEPHANT_MOVES[color][to]:
                    if _is(board[frm], color, kind) and board[eye] is None:
                        yield Move(frm, to, captured)
        elif kind == Kind.PAWN:
            for rays in RAYS[to]:
                if rays and _is(board[rays[0]], color, kind) and to in PAWN_MOVES[color][rays[0]]:
                    yield Move(rays[0], to, captured)
        elif kind == Kind.KNIGHT:
            for frm, leg in KNIGHT_SOURCES[to]:
                if _is(board[frm], color, kind) and board[leg] is None:
                    yield Move(frm, to, captured)
        elif kind in (Kind.CANNON, Kind.ROOK):
            # first (rook) or second (cannon) snapshot-occupied square on each ray
            wanted = 1 if kind == Kind.ROOK else 2
            for ray in RAYS[to]:
                seen = 0
                for sq in ray:
                    if sq in snapshot:
                        seen += 1
                        if seen == wanted:
                            if _is(board[sq], color, kind):
                                yield Move(sq, to, captured)
                            break
        else:
            if in_palace(color, to):
                for frm in KING_MOVES[color][to]:
                    if _is(board[frm], color, kind):
                        yield Move(frm, to, captured)


def get_defenders(p, to, snapshot):
    """Candidate recaptures onto `to`; `p` is already past the capture."""
    return list(iter_defenders(p, to, snapshot))


def has_legal_recapture(p, capture):
    snapshot = OccupancySnapshot.take(p)
    token = make_move(p, capture)
    try:
        for defence in iter_defenders(p, capture.to, snapshot):
            if is_legal(p, defence):
                return True
        return False
    finally:
        unmake_move(p, token)


def is_protected(p, capture):
    attacker = p.board[capture.frm]
    victim = p.board[capture.to]
    if piece_value_class(victim.kind) > piece_value_class(attacker.kind):
        return False
    return has_legal_recapture(p, capture)
