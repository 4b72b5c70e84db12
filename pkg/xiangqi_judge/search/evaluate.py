from ..board.constants import Color, Kind, crossed_river, file_of, rank_of

PIECE_VALUES = {
    Kind.KING: 0,
    Kind.ROOK: 900,
    Kind.CANNON: 450,
    Kind.KNIGHT: 400,
    Kind.ADVISOR: 200,
    Kind.ELEPHANT: 200,
    Kind.PAWN: 100,
}
CROSSED_PAWN_VALUE = 200

# bonus per step of distance from the edge files (0 on a/i, 4 on e)
CENTRE_WEIGHT = {
    Kind.ROOK: 4,
    Kind.CANNON: 6,
    Kind.KNIGHT: 8,
    Kind.PAWN: 5,
}
PAWN_ADVANCE = 10


def _centre(sq):
    return 4 - abs(file_of(sq) - 4)


def piece_score(piece, sq):
    kind = piece.kind
    score = PIECE_VALUES[kind]
    if kind == Kind.PAWN and crossed_river(piece.color, sq):
        depth = rank_of(sq) - 5 if piece.color == Color.RED else 4 - rank_of(sq)
        score = CROSSED_PAWN_VALUE + PAWN_ADVANCE * min(depth, 3)
    return score + CENTRE_WEIGHT.get(kind, 0) * _centre(sq)


def evaluate(p):
    """Material plus centralisation, from the side to move's point of view."""
    total = 0
    for sq, piece in enumerate(p.board):
        if piece is None:
            continue
        if piece.color == Color.RED:
            total += piece_score(piece, sq)
        else:
            total -= piece_score(piece, sq)
    return total if p.side == Color.RED else -total
