"""Position history and repetition rulings.

Record i holds the position after i half-moves; record 0 is the root.
A record's status describes the half-move that produced it, so stepping
back two records at a time visits one player's moves only.
"""
import logging
from dataclasses import dataclass, field
from enum import Enum, IntEnum
from typing import FrozenSet, List, Optional

from ..board.constants import Color, Move
from .chase import Status

logger = logging.getLogger(__name__)


class ViolationLevel(IntEnum):
    UNDECIDED = -1
    PERPETUAL_IDLE = 0
    PERPETUAL_CHASE = 1
    PERPETUAL_CHECK = 2


class GameResult(Enum):
    UNDECIDED = "undecided"
    WIN = "win"
    LOSS = "loss"
    DRAW = "draw"

    @property
    def flipped(self):
        if self is GameResult.WIN:
            return GameResult.LOSS
        if self is GameResult.LOSS:
            return GameResult.WIN
        return self


@dataclass
class HistoryRecord:
    hash: int
    move: Optional[Move]
    status: Status
    chased_set: FrozenSet[int] = frozenset()


class History:
    def __init__(self, records=None, multi_victim_chase=True):
        self.records: List[HistoryRecord] = list(records or [])
        self.multi_victim_chase = multi_victim_chase

    def __len__(self):
        return len(self.records)

    def __getitem__(self, index):
        return self.records[index]

    def __iter__(self):
        return iter(self.records)

    def append(self, record):
        self.records.append(record)

    def pop(self):
        return self.records.pop()

    @property
    def last(self):
        return len(self.records) - 1


@dataclass
class Ruling:
    result: GameResult
    violation_ours: ViolationLevel
    violation_opponent: ViolationLevel
    repetition_found: bool
    judged_side: Optional[Color] = None
    chased_ours: FrozenSet[int] = frozenset()
    chased_opponent: FrozenSet[int] = frozenset()


@dataclass
class _Window:
    repeating: bool = False
    status: Status = Status(0)
    indices: List[int] = field(default_factory=list)


def update_subset(s, intervening):
    if intervening is None or intervening.frm not in s:
        return s
    return (s - {intervening.frm}) | {intervening.to}


def _scan(h, index, ntimes):
    window = _Window()
    if index < 0 or h[index].status == Status.CANCEL:
        return window
    target = max(ntimes, 1)
    key = h[index].hash
    found = 0
    j = index - 2
    while j >= 0:
        if h[j].status == Status.CANCEL or h[j + 1].status == Status.CANCEL:
            break
        window.status |= h[j].status
        window.indices.append(j)
        if h[j].hash == key:
            found += 1
            if found >= target:
                window.repeating = True
                break
        j -= 2
    return window


def _persistent_victims(h, indices):
    """Victims chased across the whole window, followed as they move."""
    chased = None
    for j in sorted(indices):
        if chased is None:
            chased = h[j].chased_set
            continue
        if j + 1 < len(h):
            chased = update_subset(chased, h[j + 1].move)
        chased = chased & h[j].chased_set
    return chased or frozenset()


def _level(h, window):
    if not window.repeating:
        return ViolationLevel.UNDECIDED
    if window.status == Status.CHECK:
        return ViolationLevel.PERPETUAL_CHECK
    if window.status == Status.CHASE:
        victims = _persistent_victims(h, window.indices)
        if victims and (h.multi_victim_chase or len(victims) == 1):
            return ViolationLevel.PERPETUAL_CHASE
    return ViolationLevel.PERPETUAL_IDLE


def judge_player(h, index, ntimes=1):
    """Violation level of the player who moved into h[index]."""
    return _level(h, _scan(h, index, ntimes))


def _compare(ours, opponent):
    if ours == ViolationLevel.UNDECIDED or opponent == ViolationLevel.UNDECIDED:
        return GameResult.UNDECIDED
    if ours == opponent:
        return GameResult.DRAW
    return GameResult.LOSS if ours > opponent else GameResult.WIN


def judge_ntimes(h, ntimes=1):
    last = h.last
    opponent = judge_player(h, last, ntimes)
    if opponent == ViolationLevel.UNDECIDED:
        return GameResult.UNDECIDED
    ours = judge_player(h, last - 1, ntimes)
    return _compare(ours, opponent)


def is_repetition(h, index, ntimes=1):
    if index < 0 or index >= len(h):
        return False
    return _scan(h, index, ntimes).repeating


def judge_prune(h, draw_score, beta, ntimes=1):
    """Ruling inside a search node, skipping the opponent when a draw already fails high."""
    last = h.last
    ours = judge_player(h, last - 1, ntimes)
    if ours == ViolationLevel.UNDECIDED:
        return GameResult.UNDECIDED
    if ours == ViolationLevel.PERPETUAL_IDLE and draw_score >= beta:
        return GameResult.DRAW if is_repetition(h, last, ntimes) else GameResult.UNDECIDED
    return _compare(ours, judge_player(h, last, ntimes))


def judge_details(h, ntimes=1, side_to_move=None):
    last = h.last
    theirs = _scan(h, last, ntimes)
    mine = _scan(h, last - 1, ntimes)
    opponent, ours = _level(h, theirs), _level(h, mine)
    result = _compare(ours, opponent)
    ruling = Ruling(
        result=result,
        violation_ours=ours,
        violation_opponent=opponent,
        repetition_found=theirs.repeating and mine.repeating,
        judged_side=side_to_move,
        chased_ours=_persistent_victims(h, mine.indices) if mine.repeating else frozenset(),
        chased_opponent=_persistent_victims(h, theirs.indices) if theirs.repeating else frozenset(),
    )
    logger.debug("ruling %s", ruling)
    return ruling
