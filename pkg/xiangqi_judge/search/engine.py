"""Alpha-beta search with repetition judging inside the tree.

Chase information for a node is only built when the first quiet move is
played from it; capture and pawn-push children are labelled Cancel and
need none, so nodes that cut off on a capture never pay for it.
"""
import logging
import threading
import time
from dataclasses import dataclass, field
from typing import List, Optional

from ..board.constants import Move
from ..board.movegen import generate_moves
from ..rules.judge import GameResult, judge_prune
from .evaluate import PIECE_VALUES, evaluate

logger = logging.getLogger(__name__)

MATE_SCORE = 20000
INFINITY = MATE_SCORE + 1
WIN_RANGE = MATE_SCORE - 1000


class SearchStopped(Exception):
    pass


@dataclass
class SearchLimits:
    depth: Optional[int] = None
    nodes: Optional[int] = None
    movetime_ms: Optional[int] = None

    def __post_init__(self):
        assert (
            self.depth is not None or self.nodes is not None or self.movetime_ms is not None
        ), "at least one search limit must be set"


@dataclass
class SearchInfo:
    depth: int
    score: int
    nodes: int
    time_ms: int
    pv: List[Move] = field(default_factory=list)

    def format(self):
        line = "info depth %d score %d nodes %d time %d" % (
            self.depth,
            self.score,
            self.nodes,
            self.time_ms,
        )
        if self.pv:
            line += " pv " + " ".join(str(m) for m in self.pv)
        return line


def mvv_lva_key(p, move):
    victim = PIECE_VALUES[move.captured] if move.captured is not None else -1
    return victim, -PIECE_VALUES[p.board[move.frm].kind]


def order_moves(p, moves):
    captures = [m for m in moves if m.captured is not None]
    quiets = [m for m in moves if m.captured is None]
    captures.sort(key=lambda m: mvv_lva_key(p, m), reverse=True)
    return captures + quiets


class Searcher:
    def __init__(self, ntimes=1, use_judge=True, stop_event=None):
        self.ntimes = ntimes
        self.use_judge = use_judge
        self.stop_event = stop_event or threading.Event()
        self.reset_counters()
        self._deadline = None
        self._node_limit = None

    def reset_counters(self):
        self.nodes = 0
        self.interior_nodes = 0
        self.threats_skipped = 0

    def _poll(self):
        if self.stop_event.is_set():
            raise SearchStopped()
        if self._node_limit is not None and self.nodes >= self._node_limit:
            raise SearchStopped()
        if self._deadline is not None and self.nodes % 256 == 0:
            if time.monotonic() >= self._deadline:
                raise SearchStopped()

    def _judge(self, recorder, beta, ply):
        if ply == 0 or not self.use_judge:
            return None
        result = judge_prune(recorder.history, 0, beta, self.ntimes)
        if result == GameResult.LOSS:
            return -(MATE_SCORE - ply)
        if result == GameResult.WIN:
            return MATE_SCORE - ply
        if result == GameResult.DRAW:
            return 0
        return None

    def negamax(self, recorder, depth, alpha, beta, ply=0, pv=None):
        self.nodes += 1
        self._poll()
        p = recorder.position

        judged = self._judge(recorder, beta, ply)
        if judged is not None:
            return judged
        if depth <= 0:
            return evaluate(p)

        moves = order_moves(p, generate_moves(p))
        if not moves:
            return -(MATE_SCORE - ply)

        self.interior_nodes += 1
        built_before = recorder.threats_ready
        best = -INFINITY
        child_pv = []
        for move in moves:
            recorder.push(move)
            try:
                child_pv.clear()
                score = -self.negamax(recorder, depth - 1, -beta, -alpha, ply + 1, child_pv)
            finally:
                recorder.pop()
            if score > best:
                best = score
                if pv is not None:
                    pv[:] = [move] + child_pv
            if score > alpha:
                alpha = score
            if alpha >= beta:
                break
        if not recorder.in_check and not built_before and not recorder.threats_ready:
            self.threats_skipped += 1
        return best

    def minimax(self, recorder, depth, ply=0):
        """Unpruned reference search; only the tests call it."""
        p = recorder.position
        judged = self._judge(recorder, INFINITY, ply)
        if judged is not None:
            return judged
        if depth <= 0:
            return evaluate(p)
        moves = generate_moves(p)
        if not moves:
            return -(MATE_SCORE - ply)
        best = -INFINITY
        for move in moves:
            recorder.push(move)
            try:
                best = max(best, -self.minimax(recorder, depth - 1, ply + 1))
            finally:
                recorder.pop()
        return best

    def search(self, recorder, limits, on_info=None):
        """Iterative deepening; returns (best move, score, principal line)."""
        self.reset_counters()
        start = time.monotonic()
        self._deadline = start + limits.movetime_ms / 1000.0 if limits.movetime_ms else None
        self._node_limit = limits.nodes
        max_depth = limits.depth if limits.depth is not None else 64

        root_moves = generate_moves(recorder.position)
        if not root_moves:
            logger.info("no legal moves: side to move is mated or stalemated")
            return None, -MATE_SCORE, []

        best_move, best_score, best_pv = order_moves(recorder.position, root_moves)[0], 0, []
        for depth in range(1, max_depth + 1):
            pv = []
            try:
                score = self.negamax(recorder, depth, -INFINITY, INFINITY, 0, pv)
            except SearchStopped:
                logger.info("search stopped during depth %d", depth)
                break
            if pv:
                best_move, best_score, best_pv = pv[0], score, list(pv)
            info = SearchInfo(
                depth, score, self.nodes, int((time.monotonic() - start) * 1000), best_pv
            )
            logger.info(info.format())
            if on_info is not None:
                on_info(info)
            if abs(score) >= WIN_RANGE and depth >= MATE_SCORE - abs(score):
                break
        return best_move, best_score, best_pv


def search_root(recorder, limits, ntimes=1, use_judge=True, on_info=None):
    return Searcher(ntimes=ntimes, use_judge=use_judge).search(recorder, limits, on_info)
