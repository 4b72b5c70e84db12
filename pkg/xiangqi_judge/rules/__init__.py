from .protection import (
    VALUE_CLASS,
    OccupancySnapshot,
    piece_value_class,
    get_defenders,
    is_protected,
)
from .chase import Status, gen_captures, is_exchange_move, get_chases, classify_reply, irreversible
from .judge import (
    ViolationLevel,
    GameResult,
    HistoryRecord,
    History,
    Ruling,
    update_subset,
    judge_player,
    judge_ntimes,
    is_repetition,
    judge_prune,
    judge_details,
)
from .recorder import HistoryRecorder
