from .constants import (
    Color,
    Kind,
    Move,
    Piece,
    file_of,
    rank_of,
    square,
    square_name,
    parse_square,
    parse_move,
    move_to_text,
    in_palace,
    crossed_river,
)
from .position import Position, UndoToken, START_FEN, parse_fen, emit_fen, make_move, unmake_move
from .zobrist import compute_hash
from .movegen import (
    generate_pseudolegal,
    generate_moves,
    is_legal,
    in_check,
    is_attacked,
    kings_facing,
    piece_moves,
    find_move,
)
from .perft import perft, perft_divide
