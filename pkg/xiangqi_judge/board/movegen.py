"""Move generation and attack detection over the 90-square mailbox."""
from .constants import (
    FILES,
    NUM_SQUARES,
    Color,
    Kind,
    Move,
    crossed_river,
    file_of,
    forward,
    in_palace,
    on_board,
    own_half,
    parse_move,
    rank_of,
    square,
)
from .position import make_move, unmake_move
from ..utilities.tools import IllegalMoveError, MoveParseError

ORTHOGONAL = ((1, 0), (-1, 0), (0, 1), (0, -1))
KNIGHT_STEPS = ((1, 2), (1, -2), (-1, 2), (-1, -2), (2, 1), (2, -1), (-2, 1), (-2, -1))


def _knight_table():
    table = []
    for sq in range(NUM_SQUARES):
        f, r = file_of(sq), rank_of(sq)
        entries = []
        for dr, df in KNIGHT_STEPS:
            if not on_board(f + df, r + dr):
                continue
            # the leg is the orthogonal neighbour in the long direction
            if abs(dr) == 2:
                leg = square(f, r + dr // 2)
            else:
                leg = square(f + df // 2, r)
            entries.append((square(f + df, r + dr), leg))
        table.append(entries)
    return table


def _rays():
    table = []
    for sq in range(NUM_SQUARES):
        f, r = file_of(sq), rank_of(sq)
        rays = []
        for dr, df in ORTHOGONAL:
            ray, ff, rr = [], f + df, r + dr
            while on_board(ff, rr):
                ray.append(square(ff, rr))
                ff, rr = ff + df, rr + dr
            rays.append(ray)
        table.append(rays)
    return table


def _colored_steps(steps, allowed):
    table = [[], []]
    for color in Color:
        for sq in range(NUM_SQUARES):
            f, r = file_of(sq), rank_of(sq)
            entries = []
            for dr, df in steps:
                if on_board(f + df, r + dr) and allowed(color, sq, square(f + df, r + dr)):
                    entries.append(square(f + df, r + dr))
            table[color].append(entries)
    return table


def _elephant_table():
    table = [[], []]
    for color in Color:
        for sq in range(NUM_SQUARES):
            f, r = file_of(sq), rank_of(sq)
            entries = []
            for dr, df in ((2, 2), (2, -2), (-2, 2), (-2, -2)):
                if on_board(f + df, r + dr) and own_half(color, square(f + df, r + dr)):
                    entries.append((square(f + df, r + dr), square(f + df // 2, r + dr // 2)))
            table[color].append(entries)
    return table


def _pawn_table():
    table = [[], []]
    for color in Color:
        for sq in range(NUM_SQUARES):
            f, r = file_of(sq), rank_of(sq)
            entries = []
            if on_board(f, r + forward(color)):
                entries.append(square(f, r + forward(color)))
            if crossed_river(color, sq):
                entries.extend(square(f + df, r) for df in (-1, 1) if on_board(f + df, r))
            table[color].append(entries)
    return table


KNIGHT_MOVES = _knight_table()
RAYS = _rays()
ELEPHANT_MOVES = _elephant_table()
ADVISOR_MOVES = _colored_steps(
    ((1, 1), (1, -1), (-1, 1), (-1, -1)), lambda c, a, b: in_palace(c, b)
)
KING_MOVES = _colored_steps(ORTHOGONAL, lambda c, a, b: in_palace(c, b))
PAWN_MOVES = _pawn_table()


def _slider_targets(board, sq, kind, occupied=None):
    """Yield (to, is_capture) for a rook or cannon on `sq`.

    `occupied` overrides board occupancy for screens and blockers; the
    protection rules evaluate rays against a pre-capture snapshot.
    """
    if occupied is None:
        occupied = board.__getitem__
    for ray in RAYS[sq]:
        screened = False
        for to in ray:
            if not occupied(to):
                if not screened:
                    yield to, False
                continue
            if kind == Kind.ROOK or screened:
                yield to, True
                break
            screened = True


def piece_moves(p, sq, captures_only=False):
    """Pseudo-legal moves of the piece on `sq` (ignores the flying-king capture)."""
    board = p.board
    piece = board[sq]
    color, kind = piece.color, piece.kind
    moves = []

    def add(to):
        target = board[to]
        if target is None:
            if not captures_only:
                moves.append(Move(sq, to))
        elif target.color != color:
            moves.append(Move(sq, to, target.kind))

    if kind == Kind.ROOK or kind == Kind.CANNON:
        for to, hit in _slider_targets(board, sq, kind):
            if hit:
                target = board[to]
                if target.color != color:
                    moves.append(Move(sq, to, target.kind))
            elif not captures_only:
                moves.append(Move(sq, to))
    elif kind == Kind.KNIGHT:
        for to, leg in KNIGHT_MOVES[sq]:
            if board[leg] is None:
                add(to)
    elif kind == Kind.ELEPHANT:
        for to, eye in ELEPHANT_MOVES[color][sq]:
            if board[eye] is None:
                add(to)
    elif kind == Kind.ADVISOR:
        for to in ADVISOR_MOVES[color][sq]:
            add(to)
    elif kind == Kind.KING:
        for to in KING_MOVES[color][sq]:
            add(to)
    else:
        for to in PAWN_MOVES[color][sq]:
            add(to)
    return moves


def kings_facing(p):
    red, black = p.kings
    if red is None or black is None or file_of(red) != file_of(black):
        return False
    for sq in range(red + FILES, black, FILES):
        if p.board[sq] is not None:
            return False
    return True


def generate_pseudolegal(p):
    moves = []
    for sq, piece in enumerate(p.board):
        if piece is not None and piece.color == p.side:
            moves.extend(piece_moves(p, sq))
    if kings_facing(p):
        moves.append(Move(p.kings[p.side], p.kings[p.side.opponent], Kind.KING))
    return moves


def is_attacked(p, sq, by):
    """True if a piece of color `by` pseudo-legally attacks `sq`.

    Advisors and elephants are not probed; they never reach the enemy
    palace, which is the only place this is asked about kings.
    """
    board = p.board
    for ray in RAYS[sq]:
        screened = False
        for s in ray:
            piece = board[s]
            if piece is None:
                continue
            if not screened:
                if piece.color == by and piece.kind == Kind.ROOK:
                    return True
                screened = True
            else:
                if piece.color == by and piece.kind == Kind.CANNON:
                    return True
                break

    # a knight on n reaches sq iff sq reaches n by the mirrored step, with
    # the leg adjacent to n rather than to sq
    f, r = file_of(sq), rank_of(sq)
    for dr, df in KNIGHT_STEPS:
        nf, nr = f + df, r + dr
        if not on_board(nf, nr):
            continue
        piece = board[square(nf, nr)]
        if piece is None or piece.color != by or piece.kind != Kind.KNIGHT:
            continue
        if abs(dr) == 2:
            leg = square(nf, nr - dr // 2)
        else:
            leg = square(nf - df // 2, nr)
        if board[leg] is None:
            return True

    step = forward(by)
    if on_board(f, r - step):
        piece = board[square(f, r - step)]
        if piece is not None and piece.color == by and piece.kind == Kind.PAWN:
            return True
    for df in (-1, 1):
        if on_board(f + df, r):
            piece = board[square(f + df, r)]
            if (
                piece is not None
                and piece.color == by
                and piece.kind == Kind.PAWN
                and crossed_river(by, square(f + df, r))
            ):
                return True
            if piece is not None and piece.color == by and piece.kind == Kind.KING:
                return True
    for dr in (-1, 1):
        if on_board(f, r + dr):
            piece = board[square(f, r + dr)]
            if piece is not None and piece.color == by and piece.kind == Kind.KING:
                return True
    return False


def in_check(p, side):
    king = p.kings[side]
    if king is None:
        return True
    return kings_facing(p) or is_attacked(p, king, side.opponent)


def is_legal(p, move):
    mover = p.side
    token = make_move(p, move)
    legal = not in_check(p, mover)
    unmake_move(p, token)
    return legal


def generate_moves(p):
    return [m for m in generate_pseudolegal(p) if is_legal(p, m)]


def find_move(p, text):
    """Resolve coordinate text such as "h2e2" to the legal Move."""
    try:
        frm, to = parse_move(text)
    except ValueError as e:
        raise MoveParseError(text, str(e))
    for move in generate_moves(p):
        if move.frm == frm and move.to == to:
            return move
    raise IllegalMoveError(text)
