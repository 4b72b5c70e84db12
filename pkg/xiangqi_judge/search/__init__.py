from .evaluate import PIECE_VALUES, evaluate
from .engine import (
    MATE_SCORE,
    SearchLimits,
    SearchInfo,
    SearchStopped,
    Searcher,
    order_moves,
    search_root,
)
