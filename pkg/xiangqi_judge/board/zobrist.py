"""Zobrist keys: one 64-bit key per (color, kind, square) plus a side key.

The tables are drawn once from a fixed seed so hashes are reproducible
across runs and processes.
"""
import numpy as np

from .constants import NUM_SQUARES, Color

ZOBRIST_SEED = 0x5EED_C0DE

_rng = np.random.default_rng(ZOBRIST_SEED)
_u64_max = np.iinfo(np.uint64).max

# python ints, XOR on numpy scalars is several times slower in the hot path
PIECE_KEYS = _rng.integers(
    0, _u64_max, size=(2, 7, NUM_SQUARES), dtype=np.uint64, endpoint=True
).tolist()
SIDE_KEY = int(_rng.integers(0, _u64_max, dtype=np.uint64, endpoint=True))


def compute_hash(p):
    h = 0
    for sq, piece in enumerate(p.board):
        if piece is not None:
            h ^= PIECE_KEYS[piece.color][piece.kind][sq]
    if p.side == Color.BLACK:
        h ^= SIDE_KEY
    return h
