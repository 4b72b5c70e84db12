"""WXF move notation ("R2+1", "c8=3", "H3+5", "+P=4").

Files are counted 1..9 from each player's own right hand, so Red's file n
is column 9-n and Black's file n is column n-1. Doubled pieces on one
file replace the file digit with a tandem marker: "+" front, "-" rear,
"." middle of three; the marker may also lead ("+R+1" is "R++1").
Letter case is informational; the mover is always the side to move.
"""
import re

from ..board.constants import FILES, Color, Kind, file_of, forward, on_board, rank_of, square
from ..board.movegen import find_move, generate_moves
from ..utilities.tools import IllegalMoveError, MoveParseError

WXF_KINDS = {
    "K": Kind.KING,
    "A": Kind.ADVISOR,
    "E": Kind.ELEPHANT,
    "B": Kind.ELEPHANT,
    "H": Kind.KNIGHT,
    "N": Kind.KNIGHT,
    "R": Kind.ROOK,
    "C": Kind.CANNON,
    "P": Kind.PAWN,
}
TANDEM_MARKERS = "+-."
COORDINATE_RE = re.compile(r"^[a-i][0-9][a-i][0-9]$")
WXF_RE = re.compile(r"^(?:([+\-.])([A-Za-z])|([A-Za-z])([1-9+\-.]))([+\-=])([1-9])$")


def wxf_file(color, sq):
    return FILES - file_of(sq) if color == Color.RED else file_of(sq) + 1


def board_file(color, wxf):
    return FILES - wxf if color == Color.RED else wxf - 1


def _tandem(p, color, kind, marker, text):
    pieces = [sq for sq, pc in p.piece_list(color) if pc.kind == kind]
    by_file = {}
    for sq in pieces:
        by_file.setdefault(file_of(sq), []).append(sq)
    stacked = [squares for squares in by_file.values() if len(squares) >= 2]
    if len(stacked) != 1:
        raise MoveParseError(text, "tandem marker needs exactly one doubled file")
    # front first: the piece furthest advanced toward the opponent
    column = sorted(stacked[0], key=rank_of, reverse=(color == Color.RED))
    if marker == "+":
        return column[0]
    if marker == "-":
        return column[-1]
    if len(column) != 3:
        raise MoveParseError(text, "middle marker needs three pieces on the file")
    return column[1]


def _destination(color, kind, frm, op, digit, text):
    f, r = file_of(frm), rank_of(frm)
    step = forward(color)
    if kind in (Kind.ROOK, Kind.CANNON, Kind.PAWN, Kind.KING):
        if op == "=":
            return board_file(color, digit), r
        sign = step if op == "+" else -step
        return f, r + sign * digit
    if op == "=":
        raise MoveParseError(text, "diagonal movers cannot traverse")
    to_file = board_file(color, digit)
    df = abs(to_file - f)
    if kind == Kind.KNIGHT:
        dr = {1: 2, 2: 1}.get(df)
    elif kind == Kind.ADVISOR:
        dr = 1 if df == 1 else None
    else:
        dr = 2 if df == 2 else None
    if dr is None:
        raise IllegalMoveError(text, "no such %s step" % kind.name.lower())
    sign = step if op == "+" else -step
    return to_file, r + sign * dr


def parse_wxf_notation(p, text):
    text = text.strip()
    m = WXF_RE.match(text)
    if m is None:
        raise MoveParseError(text, "not WXF notation")
    marker, letter = (m.group(1), m.group(2)) if m.group(1) else (None, m.group(3))
    origin = m.group(4)
    if origin is not None and origin in TANDEM_MARKERS:
        marker = origin
    op, digit = m.group(5), int(m.group(6))

    color = p.side
    if letter.islower() and color == Color.RED:
        raise MoveParseError(text, "black piece letter on red's turn")
    kind = WXF_KINDS.get(letter.upper())
    if kind is None:
        raise MoveParseError(text, "unknown piece letter '%s'" % letter)

    if marker is not None:
        candidates = [_tandem(p, color, kind, marker, text)]
    else:
        column = board_file(color, int(origin))
        candidates = [
            sq
            for sq, pc in enumerate(p.board)
            if pc == (color, kind) and file_of(sq) == column
        ]
        if not candidates:
            raise MoveParseError(text, "no %s on file %s" % (kind.name.lower(), origin))

    legal = {(mv.frm, mv.to): mv for mv in generate_moves(p)}
    found = []
    for frm in candidates:
        to_file, to_rank = _destination(color, kind, frm, op, digit, text)
        if not on_board(to_file, to_rank):
            continue
        move = legal.get((frm, square(to_file, to_rank)))
        if move is not None:
            found.append(move)
    if not found:
        raise IllegalMoveError(text)
    if len(found) > 1:
        raise MoveParseError(text, "ambiguous without a tandem marker")
    return found[0]


def parse_move_text(p, text):
    """Coordinate text ("h2e2") or WXF, detected per token."""
    if COORDINATE_RE.match(text):
        return find_move(p, text)
    return parse_wxf_notation(p, text)
