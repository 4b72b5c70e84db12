import logging

from ..board.movegen import in_check
from ..board.position import make_move, unmake_move
from .chase import Status, classify_reply, get_chases, irreversible
from .judge import History, HistoryRecord

logger = logging.getLogger(__name__)


class HistoryRecorder:
    """Plays moves on a position while keeping its History labelled.

    Each push appends the record of the new position with a provisional
    status (Cancel, Check or Idle) and settles the previous record's chase
    bit now that the reply is known. Replay, the arbiter and the search all
    go through here so they label positions identically.
    """

    def __init__(self, position, multi_victim_chase=True, lazy_threats=True):
        self.position = position
        self.history = History(multi_victim_chase=multi_victim_chase)
        self.lazy_threats = lazy_threats
        self.threats_built = 0
        self._threats = []
        self._checks = []
        self._stack = []

        check = in_check(position, position.side)
        self.history.append(
            HistoryRecord(position.hash, None, Status.CHECK if check else Status.IDLE)
        )
        self._enter(check)

    def _enter(self, check):
        self._checks.append(check)
        self._threats.append(None)
        if not self.lazy_threats and not check:
            self.threats()

    @property
    def in_check(self):
        return self._checks[-1]

    @property
    def threats_ready(self):
        return self._threats[-1] is not None

    def threats(self):
        """ThreatList against the side to move, built on first use."""
        if self._threats[-1] is None:
            self._threats[-1] = get_chases(self.position)
            self.threats_built += 1
        return self._threats[-1]

    def push(self, move):
        p = self.position
        mover = p.board[move.frm]
        prev = self.history[-1]
        saved = (prev.status, prev.chased_set)

        if irreversible(move, mover.kind):
            token = make_move(p, move)
            status = Status.CANCEL
        else:
            prior_check = self._checks[-1]
            threats = () if prior_check else self.threats()
            token = make_move(p, move)
            if prev.status != Status.CANCEL:
                prev.status, prev.chased_set = classify_reply(p, prior_check, move, threats)
            status = None

        check = in_check(p, p.side)
        if status is None:
            status = Status.CHECK if check else Status.IDLE
        self.history.append(HistoryRecord(p.hash, move, status))
        self._stack.append((token, saved))
        self._enter(check)

    def pop(self):
        token, (status, chased) = self._stack.pop()
        self._threats.pop()
        self._checks.pop()
        self.history.pop()
        prev = self.history[-1]
        prev.status, prev.chased_set = status, chased
        unmake_move(self.position, token)

    def play(self, moves):
        for move in moves:
            self.push(move)
        return self
