import os

import pytest

from xiangqi_judge.board import START_FEN, parse_fen
from xiangqi_judge.corpus.harness import replay

RUN_SLOW = bool(os.environ.get("RUN_SLOW"))
slow = pytest.mark.skipif(not RUN_SLOW, reason="set RUN_SLOW=1 to run")

CORPUS_PATH = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "corpus", "figures.jsonl")

# rook h7 shuttles h8/h7 checking the king on f8/f7
PERPETUAL_CHECK_FEN = "9/5k3/7R1/9/9/9/9/9/9/4K4 w"
PERPETUAL_CHECK_MOVES = ["R2+1", "K6+1", "R2-1", "K6-1", "R2+1"]

# rook chases the lone cannon between the h and i files
PERPETUAL_CHASE_FEN = "5k3/9/9/8c/9/9/9/7R1/9/3K5 w"
PERPETUAL_CHASE_MOVES = ["R2=1", "C9=8", "R1=2", "C8=9", "R2=1"]

MUTUAL_CHECK_FEN = "4k4/9/9/9/9/9/6n2/3K2N1c/4C4/9 w"
MUTUAL_CHECK_MOVES = ["H3+5", "h7+5", "H5-3", "h5-7", "H3+5"]

KILL_VS_CHASE_FEN = "3aka3/9/7c1/p7p/9/9/7R1/9/9/3n1Kn2 b"
KILL_VS_CHASE_MOVES = ["c8=3", "R2=7", "c3=8", "R7=2", "c8=3"]

ADVISOR_SHUFFLE_FEN = "3N1k3/3ra4/9/7R1/9/9/9/3CK4/9/9 w"
ADVISOR_SHUFFLE_MOVES = ["R2=6", "A5+4", "R6=2", "A4-5", "R2=6"]

MUTUAL_KILL_FEN = "5k3/r8/4P4/9/9/9/9/B3p4/9/4K4 w"
MUTUAL_KILL_MOVES = ["P5=4", "K6=5", "K5=4", "P5=6", "P4=5", "K5=6", "K4=5", "P6=5", "P5=4"]

# black king on d9 is mated: d8 is covered by the second rook, e9 faces the red king
MATED_FEN = "3k5/3R5/3R5/9/9/9/9/9/9/4K4 b"


@pytest.fixture
def start():
    return parse_fen(START_FEN)


@pytest.fixture
def replayed():
    """Replay WXF or coordinate move texts and hand back the recorder."""

    def _replay(fen, moves, **kwargs):
        return replay(fen, moves, **kwargs)

    return _replay
