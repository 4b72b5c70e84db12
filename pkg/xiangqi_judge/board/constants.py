from enum import IntEnum
from typing import NamedTuple, Optional

FILES = 9
RANKS = 10
NUM_SQUARES = FILES * RANKS
FILE_LETTERS = "abcdefghi"


class Color(IntEnum):
    RED = 0
    BLACK = 1

    @property
    def opponent(self):
        return Color(1 - self)


class Kind(IntEnum):
    KING = 0
    ADVISOR = 1
    ELEPHANT = 2
    KNIGHT = 3
    ROOK = 4
    CANNON = 5
    PAWN = 6


# letters as written in FEN; red pieces are upper case
KIND_LETTERS = "kabnrcp"
LETTER_KINDS = {letter: Kind(i) for i, letter in enumerate(KIND_LETTERS)}
LETTER_KINDS.update({"e": Kind.ELEPHANT, "h": Kind.KNIGHT})

MAX_PIECES = {
    Kind.KING: 1,
    Kind.ADVISOR: 2,
    Kind.ELEPHANT: 2,
    Kind.KNIGHT: 2,
    Kind.ROOK: 2,
    Kind.CANNON: 2,
    Kind.PAWN: 5,
}


class Piece(NamedTuple):
    color: Color
    kind: Kind

    @property
    def letter(self):
        letter = KIND_LETTERS[self.kind]
        return letter.upper() if self.color == Color.RED else letter


class Move(NamedTuple):
    frm: int
    to: int
    captured: Optional[Kind] = None

    @property
    def is_capture(self):
        return self.captured is not None

    def __str__(self):
        return move_to_text(self)


def square(file, rank):
    return rank * FILES + file


def file_of(sq):
    return sq % FILES


def rank_of(sq):
    return sq // FILES


def on_board(file, rank):
    return 0 <= file < FILES and 0 <= rank < RANKS


def square_name(sq):
    return "%s%d" % (FILE_LETTERS[file_of(sq)], rank_of(sq))


def parse_square(text):
    if len(text) != 2 or text[0] not in FILE_LETTERS or not text[1].isdigit():
        raise ValueError("bad square '%s'" % text)
    return square(FILE_LETTERS.index(text[0]), int(text[1]))


def in_palace(color, sq):
    f, r = file_of(sq), rank_of(sq)
    if not 3 <= f <= 5:
        return False
    return r <= 2 if color == Color.RED else r >= 7


def own_half(color, sq):
    return rank_of(sq) <= 4 if color == Color.RED else rank_of(sq) >= 5


def crossed_river(color, sq):
    return not own_half(color, sq)


def forward(color):
    """Rank delta of a pawn step for `color`."""
    return 1 if color == Color.RED else -1


def parse_move(text):
    """Coordinate text ("h2e2") to (from, to) squares."""
    if len(text) != 4:
        raise ValueError("expected four characters, got '%s'" % text)
    return parse_square(text[:2]), parse_square(text[2:])


def move_to_text(move):
    return square_name(move.frm) + square_name(move.to)
