import json
import logging
import os
from dataclasses import dataclass, field
from typing import List, Optional

import pandas as pd
from tqdm import tqdm

from ..board.constants import Color
from ..board.position import parse_fen
from ..rules.judge import GameResult, judge_ntimes
from ..rules.recorder import HistoryRecorder
from ..utilities.tools import CorpusError, XiangqiError, write_json
from .notation import parse_move_text

logger = logging.getLogger(__name__)

REQUIRED_FIELDS = ("id", "fen", "moves", "expected")
RESULT_NAMES = {r.value: r for r in GameResult}
COLOR_NAMES = {"red": Color.RED, "w": Color.RED, "black": Color.BLACK, "b": Color.BLACK}


@dataclass
class CorpusCase:
    id: str
    fen: str
    moves: List[str]
    expected: GameResult
    ntimes: int = 1
    perspective: Optional[Color] = None


@dataclass
class CaseOutcome:
    id: str
    expected: GameResult
    actual: Optional[GameResult]
    passed: bool
    error: str = ""


@dataclass
class CorpusReport:
    outcomes: List[CaseOutcome] = field(default_factory=list)

    @property
    def total(self):
        return len(self.outcomes)

    @property
    def passed(self):
        return sum(1 for o in self.outcomes if o.passed)

    @property
    def failed(self):
        return self.total - self.passed

    def to_frame(self):
        return pd.DataFrame(
            [
                {
                    "id": o.id,
                    "expected": o.expected.value,
                    "actual": o.actual.value if o.actual is not None else "error",
                    "pass": o.passed,
                    "error": o.error,
                }
                for o in self.outcomes
            ],
            columns=["id", "expected", "actual", "pass", "error"],
        )

    def summary(self):
        return "%d/%d %s" % (self.passed, self.total, "PASS" if self.failed == 0 else "FAIL")

    def write_json(self, path):
        write_json(
            {
                "total": self.total,
                "passed": self.passed,
                "failed": self.failed,
                "cases": self.to_frame().to_dict(orient="records"),
            },
            path,
        )


def _parse_record(record, path, lineno):
    missing = [k for k in REQUIRED_FIELDS if k not in record]
    if missing:
        raise CorpusError(path, lineno, "missing field(s) %s" % ", ".join(missing))
    expected = RESULT_NAMES.get(str(record["expected"]).lower())
    if expected is None:
        raise CorpusError(path, lineno, "unknown expected result '%s'" % record["expected"])
    perspective = record.get("perspective")
    if perspective is not None:
        if str(perspective).lower() not in COLOR_NAMES:
            raise CorpusError(path, lineno, "unknown perspective '%s'" % perspective)
        perspective = COLOR_NAMES[str(perspective).lower()]
    moves = record["moves"]
    if isinstance(moves, str):
        moves = moves.split()
    return CorpusCase(
        id=str(record["id"]),
        fen=record["fen"],
        moves=list(moves),
        expected=expected,
        ntimes=int(record.get("ntimes", 1)),
        perspective=perspective,
    )


def load_corpus(path):
    if not os.path.isfile(path):
        raise CorpusError(path, 0, "no such corpus file")
    cases = []
    with open(path, "r", encoding="utf-8") as f:
        for lineno, line in enumerate(f, start=1):
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            try:
                record = json.loads(line)
            except json.JSONDecodeError as e:
                raise CorpusError(path, lineno, "invalid JSON (%s)" % e.msg)
            if not isinstance(record, dict):
                raise CorpusError(path, lineno, "record is not an object")
            cases.append(_parse_record(record, path, lineno))
    if not cases:
        raise CorpusError(path, 0, "corpus is empty")
    return cases


def replay(fen, moves, multi_victim_chase=True):
    """Play move texts from `fen`, labelling every position on the way."""
    recorder = HistoryRecorder(parse_fen(fen), multi_victim_chase=multi_victim_chase)
    for text in moves:
        recorder.push(parse_move_text(recorder.position, text))
    return recorder


def from_perspective(result, side_to_move, perspective):
    if perspective is None or perspective == side_to_move:
        return result
    return result.flipped


def run_case(case, multi_victim_chase=True):
    recorder = replay(case.fen, case.moves, multi_victim_chase)
    result = judge_ntimes(recorder.history, case.ntimes)
    actual = from_perspective(result, recorder.position.side, case.perspective)
    return actual, actual == case.expected


def run_corpus(cases, multi_victim_chase=True, progress=True):
    report = CorpusReport()
    for case in tqdm(cases, desc="corpus", disable=not progress):
        try:
            actual, passed = run_case(case, multi_victim_chase)
            report.outcomes.append(CaseOutcome(case.id, case.expected, actual, passed))
        except XiangqiError as e:
            logger.warning("case %s failed to replay: %s", case.id, e)
            report.outcomes.append(CaseOutcome(case.id, case.expected, None, False, str(e)))
    logger.info("corpus %s", report.summary())
    return report
