"""Line protocol for driving the engine from a GUI or a script.

    position startpos|fen <fen> [moves m1 m2 ...]
    go depth N | go movetime MS | go nodes N
    stop | isready | uci | ucci | ucinewgame | d | quit
"""
import logging
import sys
import threading

from .board.constants import move_to_text
from .board.position import START_FEN, emit_fen
from .corpus.harness import replay
from .search.engine import SearchLimits, Searcher
from .utilities.tools import XiangqiError

logger = logging.getLogger(__name__)

ENGINE_NAME = "xiangqi-judge"


class EngineProtocol:
    def __init__(
        self,
        out=None,
        ntimes=1,
        default_depth=6,
        default_movetime=None,
        lazy_threats=True,
        use_judge=True,
        multi_victim_chase=True,
    ):
        self.out = out or sys.stdout
        self.ntimes = ntimes
        self.default_depth = default_depth
        self.default_movetime = default_movetime
        self.lazy_threats = lazy_threats
        self.use_judge = use_judge
        self.multi_victim_chase = multi_victim_chase
        self._lock = threading.Lock()
        self._stop = threading.Event()
        self._worker = None
        self.recorder = self._replay(START_FEN, [])

    def _replay(self, fen, moves):
        recorder = replay(fen, moves, self.multi_victim_chase)
        recorder.lazy_threats = self.lazy_threats
        return recorder

    def send(self, line):
        with self._lock:
            self.out.write(line + "\n")
            self.out.flush()

    @property
    def searching(self):
        return self._worker is not None and self._worker.is_alive()

    def wait(self):
        if self._worker is not None:
            self._worker.join()
            self._worker = None

    def stop(self):
        self._stop.set()
        self.wait()

    def _position(self, tokens):
        if not tokens:
            raise XiangqiError("position needs startpos or fen")
        moves = []
        if "moves" in tokens:
            i = tokens.index("moves")
            tokens, moves = tokens[:i], tokens[i + 1 :]
        if tokens[0] == "startpos":
            fen = START_FEN
        elif tokens[0] == "fen":
            fen = " ".join(tokens[1:])
        else:
            raise XiangqiError("position needs startpos or fen")
        self.recorder = self._replay(fen, moves)

    def _limits(self, tokens):
        values = {}
        for key, value in zip(tokens[::2], tokens[1::2]):
            values[key] = int(value)
        if not values:
            if self.default_movetime:
                return SearchLimits(movetime_ms=self.default_movetime)
            return SearchLimits(depth=self.default_depth)
        return SearchLimits(
            depth=values.get("depth"),
            nodes=values.get("nodes"),
            movetime_ms=values.get("movetime"),
        )

    def _go(self, limits):
        searcher = Searcher(ntimes=self.ntimes, use_judge=self.use_judge, stop_event=self._stop)

        def run():
            try:
                move, _, _ = searcher.search(self.recorder, limits, lambda info: self.send(info.format()))
            except Exception:
                logger.exception("search failed")
                move = None
            if move is None:
                self.send("nopv")
                self.send("bestmove (none)")
            else:
                self.send("bestmove %s" % move_to_text(move))

        self._stop.clear()
        self._worker = threading.Thread(target=run, daemon=True)
        self._worker.start()

    def handle(self, line):
        """Process one command line; returns False once the loop should end."""
        tokens = line.split()
        if not tokens:
            return True
        cmd, args = tokens[0], tokens[1:]

        if cmd == "quit":
            self.stop()
            return False
        if cmd == "stop":
            self.stop()
            return True
        if cmd in ("uci", "ucci"):
            self.send("id name %s" % ENGINE_NAME)
            self.send("%sok" % cmd)
        elif cmd == "isready":
            self.send("readyok")
        elif cmd == "ucinewgame":
            self.stop()
            self.recorder = self._replay(START_FEN, [])
        elif cmd == "d":
            self.wait()
            self.send(emit_fen(self.recorder.position))
        elif cmd == "position":
            self.stop()
            try:
                self._position(args)
            except XiangqiError as e:
                self.send("error: %s" % e)
        elif cmd == "go":
            if self.searching:
                self.send("error: search already running")
                return True
            try:
                limits = self._limits(args)
            except (ValueError, AssertionError):
                self.send("error: bad go arguments")
                return True
            self._go(limits)
        else:
            self.send("error: unknown command")
        return True

    def run(self, stream=None):
        for line in stream or sys.stdin:
            if not self.handle(line.strip()):
                break
        self.stop()
