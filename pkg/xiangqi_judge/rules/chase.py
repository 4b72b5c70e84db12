"""Capture threats and the per-move Check/Chase/Idle/Cancel labels."""
import logging
from enum import IntFlag

from ..board.constants import Kind, crossed_river, file_of
from ..board.movegen import is_legal, piece_moves
from ..board.zobrist import SIDE_KEY
from .protection import has_legal_recapture, is_protected, piece_value_class

logger = logging.getLogger(__name__)

THREAT_ATTACKERS = (Kind.KNIGHT, Kind.ROOK, Kind.CANNON, Kind.ADVISOR, Kind.ELEPHANT)


class Status(IntFlag):
    IDLE = 1
    CHASE = 2
    CHECK = 4
    CANCEL = 8


def gen_captures(p):
    """Captures available to the side to move, kings and pawns left out."""
    captures = []
    for sq, piece in enumerate(p.board):
        if piece is not None and piece.color == p.side and piece.kind in THREAT_ATTACKERS:
            captures.extend(piece_moves(p, sq, captures_only=True))
    return captures


def is_exchange_move(p, capture):
    attacker = p.board[capture.frm]
    victim = p.board[capture.to]
    if piece_value_class(attacker.kind) != piece_value_class(victim.kind):
        return False
    return has_legal_recapture(p, capture)


def pawn_not_passed(p, sq):
    piece = p.board[sq]
    return piece.kind == Kind.PAWN and not crossed_river(piece.color, sq)


def _free_threats(p):
    threats = []
    for capture in gen_captures(p):
        if capture.captured == Kind.KING:
            continue
        if pawn_not_passed(p, capture.to):
            continue
        if not is_legal(p, capture):
            continue
        attacker = p.board[capture.frm]
        # a recapture turns equal classes into an exchange and protects cheaper victims
        if piece_value_class(capture.captured) <= piece_value_class(attacker.kind):
            if has_legal_recapture(p, capture):
                continue
        threats.append(capture)
    return threats


def get_chases(p):
    """Free captures the side NOT to move could make against the side to move."""
    p.side = p.side.opponent
    p.hash ^= SIDE_KEY
    try:
        return _free_threats(p)
    finally:
        p.side = p.side.opponent
        p.hash ^= SIDE_KEY


def _still_capturable(p, threat):
    attacker = p.board[threat.frm]
    if attacker is None or attacker.color != p.side:
        return False
    victim = p.board[threat.to]
    if victim is None or victim.color == p.side:
        return False
    if threat not in piece_moves(p, threat.frm, captures_only=True):
        return False
    return is_legal(p, threat)


def classify_reply(p_after, prior_check, reply, threats):
    """Label the move that created `threats` once the defender's `reply` is known.

    `p_after` has the attacker to move again. A victim counts only when
    the reply answered every threat on it: the victim moved, or each
    capture stopped being legal or met a protected victim. The number of
    attackers on one victim never matters.
    """
    if prior_check:
        return Status.CHECK, frozenset()

    by_victim = {}
    for threat in threats:
        by_victim.setdefault(threat.to, []).append(threat)

    victims = set()
    for sq, attacks in by_victim.items():
        if sq == reply.frm:
            victims.add(reply.to)
            continue
        if all(not _still_capturable(p_after, t) or is_protected(p_after, t) for t in attacks):
            victims.add(sq)

    if victims:
        logger.debug("reply %s answered threats on %s", reply, sorted(victims))
        return Status.CHASE, frozenset(victims)
    return Status.IDLE, frozenset()


def irreversible(move, mover_kind):
    """Captures and forward pawn pushes can never be part of a repetition."""
    if move.captured is not None:
        return True
    return mover_kind == Kind.PAWN and file_of(move.frm) == file_of(move.to)
