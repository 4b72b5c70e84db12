from .constants import Move
from .movegen import generate_moves
from .position import make_move, unmake_move


def perft(p, depth):
    if depth == 0:
        return 1
    moves = generate_moves(p)
    if depth == 1:
        return len(moves)
    nodes = 0
    for move in moves:
        token = make_move(p, move)
        nodes += perft(p, depth - 1)
        unmake_move(p, token)
    return nodes


def perft_divide(p, depth):
    """Leaf counts per root move, keyed by coordinate text."""
    assert depth >= 1, "divide needs at least one ply"
    split = {}
    for move in generate_moves(p):
        token = make_move(p, move)
        split[str(Move(move.frm, move.to))] = perft(p, depth - 1)
        unmake_move(p, token)
    return split
