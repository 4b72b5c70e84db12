import logging
from typing import NamedTuple, Optional

from .constants import (
    FILES,
    RANKS,
    NUM_SQUARES,
    MAX_PIECES,
    LETTER_KINDS,
    Color,
    Kind,
    Move,
    Piece,
    in_palace,
    square,
)
from .zobrist import PIECE_KEYS, SIDE_KEY, compute_hash
from ..utilities.tools import FenError

logger = logging.getLogger(__name__)

START_FEN = "rnbakabnr/9/1c5c1/p1p1p1p1p/9/9/P1P1P1P1P/1C5C1/9/RNBAKABNR w"


class UndoToken(NamedTuple):
    move: Move
    captured: Optional[Piece]
    hash: int


class Position:
    __slots__ = ("board", "side", "hash", "ply", "kings")

    def __init__(self):
        self.board = [None] * NUM_SQUARES
        self.side = Color.RED
        self.hash = 0
        self.ply = 0
        self.kings = [None, None]

    def __repr__(self):
        return "Position(%s)" % emit_fen(self)

    def __eq__(self, other):
        return (
            isinstance(other, Position)
            and self.board == other.board
            and self.side == other.side
            and self.hash == other.hash
            and self.ply == other.ply
        )

    def copy(self):
        p = Position()
        p.board = list(self.board)
        p.side = self.side
        p.hash = self.hash
        p.ply = self.ply
        p.kings = list(self.kings)
        return p

    def piece_list(self, color):
        return [(sq, pc) for sq, pc in enumerate(self.board) if pc is not None and pc.color == color]

    def mirror(self):
        """Swap colors and flip ranks; Red's view becomes Black's."""
        p = Position()
        for sq, pc in enumerate(self.board):
            if pc is not None:
                r, f = divmod(sq, FILES)
                p.board[square(f, RANKS - 1 - r)] = Piece(pc.color.opponent, pc.kind)
        p.side = self.side.opponent
        p.ply = self.ply
        p._index_kings()
        p.hash = compute_hash(p)
        return p

    def _index_kings(self):
        self.kings = [None, None]
        for sq, pc in enumerate(self.board):
            if pc is not None and pc.kind == Kind.KING:
                self.kings[pc.color] = sq

    def make_move(self, move):
        return make_move(self, move)

    def unmake_move(self, token):
        unmake_move(self, token)


def make_move(p, move):
    piece = p.board[move.frm]
    captured = p.board[move.to]
    token = UndoToken(move, captured, p.hash)

    keys = PIECE_KEYS[piece.color][piece.kind]
    h = p.hash ^ keys[move.frm] ^ keys[move.to] ^ SIDE_KEY
    if captured is not None:
        h ^= PIECE_KEYS[captured.color][captured.kind][move.to]
        if captured.kind == Kind.KING:
            p.kings[captured.color] = None
    if piece.kind == Kind.KING:
        p.kings[piece.color] = move.to

    p.board[move.to] = piece
    p.board[move.frm] = None
    p.side = p.side.opponent
    p.hash = h
    p.ply += 1
    return token


def unmake_move(p, token):
    move = token.move
    piece = p.board[move.to]
    p.board[move.frm] = piece
    p.board[move.to] = token.captured
    if piece.kind == Kind.KING:
        p.kings[piece.color] = move.frm
    if token.captured is not None and token.captured.kind == Kind.KING:
        p.kings[token.captured.color] = move.to
    p.side = p.side.opponent
    p.hash = token.hash
    p.ply -= 1


def parse_fen(text):
    fields = text.strip().split()
    if not fields:
        raise FenError("board", "empty text")
    rows = fields[0].split("/")
    if len(rows) != RANKS:
        raise FenError("board", "expected %d rank fields, got %d" % (RANKS, len(rows)))

    p = Position()
    counts = {}
    for i, row in enumerate(rows):
        rank = RANKS - 1 - i
        file = 0
        for ch in row:
            if ch.isdigit():
                file += int(ch)
                continue
            kind = LETTER_KINDS.get(ch.lower())
            if kind is None:
                raise FenError("rank %d" % rank, "unknown piece letter '%s'" % ch)
            if file >= FILES:
                raise FenError("rank %d" % rank, "rank width exceeds %d" % FILES)
            color = Color.RED if ch.isupper() else Color.BLACK
            p.board[square(file, rank)] = Piece(color, kind)
            counts[(color, kind)] = counts.get((color, kind), 0) + 1
            file += 1
        if file != FILES:
            raise FenError("rank %d" % rank, "rank width %d, expected %d" % (file, FILES))

    for (color, kind), n in counts.items():
        if n > MAX_PIECES[kind]:
            raise FenError("board", "too many %s %s (%d)" % (color.name, kind.name, n))

    p._index_kings()
    for color in Color:
        if p.kings[color] is None:
            raise FenError("board", "missing %s king" % color.name)
        if not in_palace(color, p.kings[color]):
            raise FenError("board", "%s king outside palace" % color.name)

    side = fields[1].lower() if len(fields) > 1 else "w"
    if side in ("w", "r"):
        p.side = Color.RED
    elif side == "b":
        p.side = Color.BLACK
    else:
        raise FenError("side", "unknown side to move '%s'" % fields[1])

    from .movegen import in_check

    if in_check(p, p.side.opponent):
        raise FenError("side", "side not to move is in check")
    p.hash = compute_hash(p)
    return p


def emit_fen(p):
    rows = []
    for rank in range(RANKS - 1, -1, -1):
        row, gap = "", 0
        for file in range(FILES):
            piece = p.board[square(file, rank)]
            if piece is None:
                gap += 1
                continue
            if gap:
                row += str(gap)
                gap = 0
            row += piece.letter
        if gap:
            row += str(gap)
        rows.append(row)
    return "/".join(rows) + (" w" if p.side == Color.RED else " b")
