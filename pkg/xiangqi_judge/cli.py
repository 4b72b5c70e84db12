import argparse
import json
import sys

from .board.constants import Color, square_name
from .board.perft import perft, perft_divide
from .board.position import START_FEN, parse_fen
from .corpus.harness import load_corpus, replay, run_corpus
from .protocol import EngineProtocol
from .rules.judge import GameResult, judge_details
from .utilities.logger import setup_logging
from .utilities.tools import (
    CorpusError,
    FenError,
    IllegalMoveError,
    MoveParseError,
    KeyNotFoundError,
    get_config,
    load_config,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_ILLEGAL = 3

LEVEL_LABELS = {
    -1: "Undecided",
    0: "PerpetualIdle",
    1: "PerpetualChase",
    2: "PerpetualCheck",
}


def color_name(color):
    return "red" if color == Color.RED else "black"


def format_ruling(ruling):
    ours = LEVEL_LABELS[int(ruling.violation_ours)]
    theirs = LEVEL_LABELS[int(ruling.violation_opponent)]
    if ruling.result == GameResult.UNDECIDED:
        return "UNDECIDED"
    if ruling.result == GameResult.DRAW:
        return "DRAW (%s vs %s)" % (ours, theirs)
    side = ruling.judged_side
    if ruling.result == GameResult.LOSS:
        return "LOSS for %s (%s vs %s)" % (color_name(side), ours, theirs)
    return "LOSS for %s (%s vs %s)" % (color_name(side.opponent), theirs, ours)


def ruling_to_dict(ruling):
    return {
        "result": ruling.result.value,
        "judged_side": color_name(ruling.judged_side),
        "violation_ours": LEVEL_LABELS[int(ruling.violation_ours)],
        "violation_opponent": LEVEL_LABELS[int(ruling.violation_opponent)],
        "repetition_found": ruling.repetition_found,
        "chased_ours": sorted(square_name(sq) for sq in ruling.chased_ours),
        "chased_opponent": sorted(square_name(sq) for sq in ruling.chased_opponent),
    }


def cmd_judge(fen, moves, ntimes=2, as_json=False, multi_victim_chase=True, out=None):
    out = out or sys.stdout
    try:
        recorder = replay(fen, moves, multi_victim_chase)
    except IllegalMoveError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_ILLEGAL
    except (FenError, MoveParseError) as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE

    ruling = judge_details(recorder.history, ntimes, recorder.position.side)
    if as_json:
        out.write(json.dumps(ruling_to_dict(ruling)) + "\n")
    else:
        out.write(format_ruling(ruling) + "\n")
        if ruling.chased_ours or ruling.chased_opponent:
            out.write(
                "chased: %s=%s %s=%s\n"
                % (
                    color_name(ruling.judged_side),
                    ",".join(sorted(square_name(sq) for sq in ruling.chased_ours)) or "-",
                    color_name(ruling.judged_side.opponent),
                    ",".join(sorted(square_name(sq) for sq in ruling.chased_opponent)) or "-",
                )
            )
    return EXIT_OK


def cmd_corpus(path, report_json=None, multi_victim_chase=True, progress=True, out=None):
    out = out or sys.stdout
    if not path:
        print("error: no corpus path given", file=sys.stderr)
        return EXIT_PARSE
    try:
        cases = load_corpus(path)
    except CorpusError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE

    report = run_corpus(cases, multi_victim_chase, progress)
    frame = report.to_frame()
    out.write(frame.to_string(index=False) + "\n")
    for outcome in report.outcomes:
        if not outcome.passed:
            out.write(
                "FAIL %s: expected %s, got %s %s\n"
                % (
                    outcome.id,
                    outcome.expected.value,
                    outcome.actual.value if outcome.actual is not None else "error",
                    outcome.error,
                )
            )
    out.write(report.summary() + "\n")
    if report_json:
        report.write_json(report_json)
    return EXIT_OK if report.failed == 0 else EXIT_FAIL


def cmd_perft(fen, depth, divide=False, out=None):
    out = out or sys.stdout
    try:
        p = parse_fen(fen)
    except FenError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE
    if divide and depth >= 1:
        split = perft_divide(p, depth)
        for move in sorted(split):
            out.write("%s: %d\n" % (move, split[move]))
        out.write("total: %d\n" % sum(split.values()))
    else:
        for d in range(0, depth + 1):
            out.write("depth %d: %d\n" % (d, perft(p, d)))
    return EXIT_OK


def cmd_engine(configs, stream=None, out=None):
    EngineProtocol(
        out=out,
        ntimes=get_config(configs, "engine.ntimes"),
        default_depth=get_config(configs, "engine.depth"),
        default_movetime=get_config(configs, "engine.movetime"),
        lazy_threats=get_config(configs, "engine.lazy_threats"),
        use_judge=get_config(configs, "engine.use_judge"),
        multi_victim_chase=get_config(configs, "judge.multi_victim_chase"),
    ).run(stream)
    return EXIT_OK


def build_parser():
    parser = argparse.ArgumentParser(
        prog="xiangqi-judge", description="WXF repetition judge, perft and search engine"
    )
    parser.add_argument(
        "-c", "--config_yaml", type=str, required=False, help="path to a config yaml overriding the defaults"
    )
    parser.add_argument("--log_level", type=str, default=None)
    parser.add_argument("--log_file", type=str, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    judge = sub.add_parser("judge", help="rule on a move sequence")
    judge.add_argument("--fen", type=str, default=START_FEN)
    judge.add_argument("--moves", type=str, nargs="*", default=[])
    judge.add_argument("--ntimes", type=int, default=None)
    judge.add_argument("--json", action="store_true")

    corpus = sub.add_parser("corpus", help="replay a corpus file")
    corpus.add_argument("path", nargs="?", default=None)
    corpus.add_argument("--report_json", type=str, default=None)
    corpus.add_argument("--no_progress", action="store_true")

    perft_p = sub.add_parser("perft", help="count move-generation leaves")
    perft_p.add_argument("--fen", type=str, default=START_FEN)
    perft_p.add_argument("--depth", type=int, default=3)
    perft_p.add_argument("--divide", action="store_true")

    engine = sub.add_parser("engine", help="run the engine protocol loop on stdin")
    engine.add_argument("--ntimes", type=int, default=None)
    engine.add_argument("--depth", type=int, default=None)
    engine.add_argument("--movetime", type=int, default=None)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        configs = load_config(args.config_yaml)
        return _dispatch(args, configs)
    except FileNotFoundError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE
    except KeyNotFoundError as e:
        print("error: %s" % e, file=sys.stderr)
        return EXIT_PARSE


def _dispatch(args, configs):
    setup_logging(args.log_file, args.log_level or get_config(configs, "log_level"))
    multi_victim_chase = get_config(configs, "judge.multi_victim_chase")

    if args.command == "judge":
        ntimes = args.ntimes if args.ntimes is not None else get_config(configs, "judge.ntimes")
        return cmd_judge(args.fen, args.moves, ntimes, args.json, multi_victim_chase)
    if args.command == "corpus":
        return cmd_corpus(
            args.path if args.path is not None else get_config(configs, "corpus.path"),
            args.report_json or get_config(configs, "corpus.report_json"),
            multi_victim_chase,
            get_config(configs, "corpus.progress") and not args.no_progress,
        )
    if args.command == "perft":
        return cmd_perft(args.fen, args.depth, args.divide)
    if args.command == "engine":
        engine = get_config(configs, "engine")
        for key in ("ntimes", "depth", "movetime"):
            if getattr(args, key) is not None:
                engine[key] = getattr(args, key)
        return cmd_engine(configs)
    return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
