import io
import json

import pytest

from tests.conftest import (
    CORPUS_PATH,
    MATED_FEN,
    MUTUAL_CHECK_FEN,
    MUTUAL_CHECK_MOVES,
    PERPETUAL_CHASE_FEN,
    PERPETUAL_CHASE_MOVES,
    PERPETUAL_CHECK_FEN,
    PERPETUAL_CHECK_MOVES,
)
from xiangqi_judge.board import START_FEN, emit_fen, find_move, make_move, parse_fen
from xiangqi_judge.cli import (
    EXIT_FAIL,
    EXIT_ILLEGAL,
    EXIT_OK,
    EXIT_PARSE,
    cmd_corpus,
    cmd_judge,
    cmd_perft,
    main,
)
from xiangqi_judge.protocol import EngineProtocol
from xiangqi_judge.utilities.tools import KeyNotFoundError, get_config, load_config


def _judge(fen, moves, ntimes=1, **kwargs):
    out = io.StringIO()
    code = cmd_judge(fen, moves, ntimes, out=out, **kwargs)
    return code, out.getvalue()


def test_judge_perpetual_chase():
    code, text = _judge(PERPETUAL_CHASE_FEN, PERPETUAL_CHASE_MOVES)
    assert code == EXIT_OK
    lines = text.splitlines()
    assert lines[0] == "LOSS for red (PerpetualChase vs PerpetualIdle)"
    assert lines[1] == "chased: black=- red=i6"


def test_judge_perpetual_check():
    _, text = _judge(PERPETUAL_CHECK_FEN, PERPETUAL_CHECK_MOVES)
    assert text == "LOSS for red (PerpetualCheck vs PerpetualIdle)\n"


def test_judge_mutual_check_is_draw():
    _, text = _judge(MUTUAL_CHECK_FEN, MUTUAL_CHECK_MOVES)
    assert text == "DRAW (PerpetualCheck vs PerpetualCheck)\n"


def test_judge_start_is_undecided():
    assert _judge(START_FEN, []) == (EXIT_OK, "UNDECIDED\n")


def test_judge_default_three_fold_needs_more_moves():
    _, text = _judge(PERPETUAL_CHECK_FEN, PERPETUAL_CHECK_MOVES, ntimes=2)
    assert text == "UNDECIDED\n"


def test_judge_json():
    _, text = _judge(PERPETUAL_CHASE_FEN, PERPETUAL_CHASE_MOVES, as_json=True)
    ruling = json.loads(text)
    assert ruling["result"] == "win"
    assert ruling["judged_side"] == "black"
    assert ruling["violation_opponent"] == "PerpetualChase"
    assert ruling["chased_opponent"] == ["i6"]
    assert ruling["repetition_found"] is True


@pytest.mark.parametrize(
    "fen, moves, code",
    [
        ("9/9 w", [], EXIT_PARSE),
        (START_FEN, ["zz"], EXIT_PARSE),
        (START_FEN, ["a0a5"], EXIT_ILLEGAL),
        (START_FEN, ["R1+9"], EXIT_ILLEGAL),
    ],
)
def test_judge_exit_codes(fen, moves, code):
    assert _judge(fen, moves)[0] == code


def test_perft_counts():
    out = io.StringIO()
    assert cmd_perft(START_FEN, 2, out=out) == EXIT_OK
    assert out.getvalue() == "depth 0: 1\ndepth 1: 44\ndepth 2: 1920\n"


def test_perft_divide():
    out = io.StringIO()
    cmd_perft(START_FEN, 2, divide=True, out=out)
    lines = out.getvalue().splitlines()
    assert len(lines) == 45
    assert lines[-1] == "total: 1920"
    assert sum(int(line.split(": ")[1]) for line in lines[:-1]) == 1920


def test_perft_bad_fen():
    assert cmd_perft("bad", 1, out=io.StringIO()) == EXIT_PARSE


def test_corpus_command(tmp_path):
    out = io.StringIO()
    report = tmp_path / "report.json"
    assert cmd_corpus(CORPUS_PATH, str(report), progress=False, out=out) == EXIT_OK
    assert out.getvalue().rstrip().endswith("13/13 PASS")
    assert json.loads(report.read_text())["passed"] == 13


def test_corpus_command_failure(tmp_path):
    path = tmp_path / "one.jsonl"
    record = {"id": "wrong", "fen": START_FEN, "moves": [], "expected": "draw"}
    path.write_text(json.dumps(record) + "\n")
    out = io.StringIO()
    assert cmd_corpus(str(path), progress=False, out=out) == EXIT_FAIL
    assert "FAIL wrong: expected draw, got undecided" in out.getvalue()


def test_corpus_command_without_file(tmp_path):
    assert cmd_corpus("", out=io.StringIO()) == EXIT_PARSE
    assert cmd_corpus(str(tmp_path / "absent.jsonl"), out=io.StringIO()) == EXIT_PARSE


def test_main_perft(capsys):
    assert main(["perft", "--depth", "1"]) == EXIT_OK
    assert "depth 1: 44" in capsys.readouterr().out


def test_main_judge_with_config_override(tmp_path, capsys):
    config = tmp_path / "three_fold.yaml"
    config.write_text("judge:\n  ntimes: 1\n")
    args = ["-c", str(config), "judge", "--fen", PERPETUAL_CHECK_FEN, "--moves"] + PERPETUAL_CHECK_MOVES
    assert main(args) == EXIT_OK
    assert capsys.readouterr().out == "LOSS for red (PerpetualCheck vs PerpetualIdle)\n"


def test_main_missing_config():
    assert main(["-c", "/nonexistent/config.yaml", "perft"]) == EXIT_PARSE


def test_config_defaults():
    configs = load_config()
    assert get_config(configs, "judge.ntimes") == 2
    assert get_config(configs, "engine.lazy_threats") is True
    with pytest.raises(KeyNotFoundError):
        get_config(configs, "judge.missing")


def _engine(**kwargs):
    out = io.StringIO()
    return EngineProtocol(out=out, **kwargs), out


def test_protocol_handshake():
    engine, out = _engine()
    engine.handle("uci")
    engine.handle("ucci")
    engine.handle("isready")
    engine.handle("bogus")
    assert out.getvalue().splitlines() == [
        "id name xiangqi-judge",
        "uciok",
        "id name xiangqi-judge",
        "ucciok",
        "readyok",
        "error: unknown command",
    ]
    assert engine.handle("") is True
    assert engine.handle("quit") is False


def test_protocol_position_and_display():
    engine, out = _engine()
    engine.handle("position startpos moves h2e2 h9g7")
    engine.handle("d")
    p = parse_fen(START_FEN)
    make_move(p, find_move(p, "h2e2"))
    make_move(p, find_move(p, "h9g7"))
    assert out.getvalue().strip() == emit_fen(p)
    assert len(engine.recorder.history) == 3
    engine.handle("position fen %s moves h7h8" % PERPETUAL_CHECK_FEN)
    assert engine.recorder.position.side.name == "BLACK"
    engine.handle("position nonsense")
    assert out.getvalue().splitlines()[-1].startswith("error:")


def test_protocol_go_depth():
    engine, out = _engine()
    engine.handle("position startpos")
    engine.handle("go depth 1")
    engine.wait()
    lines = out.getvalue().splitlines()
    assert lines[0].startswith("info depth 1 score")
    assert lines[-1].startswith("bestmove ")
    move = lines[-1].split()[1]
    find_move(parse_fen(START_FEN), move)


def test_protocol_game_history_feeds_judge():
    # after four moves the only repeating continuation is scored as a loss
    engine, out = _engine(default_depth=1)
    moves = "h7h8 f8f7 h8h7 f7f8"
    engine.handle("position fen %s moves %s" % (PERPETUAL_CHECK_FEN, moves))
    engine.handle("go")
    engine.wait()
    assert out.getvalue().splitlines()[-1] != "bestmove h7h8"


def test_protocol_no_moves():
    engine, out = _engine()
    engine.handle("position fen %s" % MATED_FEN)
    engine.handle("go depth 2")
    engine.wait()
    assert out.getvalue().splitlines()[-2:] == ["nopv", "bestmove (none)"]


def test_protocol_bad_go_arguments():
    engine, out = _engine()
    engine.handle("go depth x")
    assert out.getvalue() == "error: bad go arguments\n"


def test_protocol_run_loop():
    engine, out = _engine()
    engine.run(io.StringIO("isready\nposition startpos\ngo depth 1\nquit\nisready\n"))
    lines = out.getvalue().splitlines()
    assert lines[0] == "readyok"
    assert lines[-1].startswith("bestmove ")
    assert lines.count("readyok") == 1


def test_protocol_bestmove_is_coordinate_text():
    engine, out = _engine()
    engine.handle("position fen %s" % PERPETUAL_CHASE_FEN)
    engine.handle("go depth 2")
    engine.wait()
    last = out.getvalue().splitlines()[-1].split()
    assert last[0] == "bestmove"
    assert len(last) == 2 and len(last[1]) == 4
    find_move(parse_fen(PERPETUAL_CHASE_FEN), last[1])


def test_protocol_search_failure_still_answers(monkeypatch):
    def broken(self, recorder, limits, on_info=None):
        raise RuntimeError("boom")

    monkeypatch.setattr("xiangqi_judge.protocol.Searcher.search", broken)
    engine, out = _engine()
    engine.handle("go depth 1")
    engine.wait()
    assert out.getvalue().splitlines() == ["nopv", "bestmove (none)"]


def test_protocol_display_waits_for_search():
    engine, out = _engine()
    engine.handle("position startpos")
    engine.handle("go depth 2")
    engine.handle("d")
    lines = out.getvalue().splitlines()
    assert lines[-2].startswith("bestmove ")
    assert lines[-1] == emit_fen(parse_fen(START_FEN))
    assert not engine.searching


def test_main_config_missing_section(tmp_path, capsys):
    config = tmp_path / "broken.yaml"
    config.write_text("judge: 5\n")
    assert main(["-c", str(config), "perft", "--depth", "1"]) == EXIT_PARSE
    assert "judge.multi_victim_chase" in capsys.readouterr().err


def test_main_engine_flags_override_config(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("position startpos\ngo\nquit\n"))
    assert main(["engine", "--depth", "1"]) == EXIT_OK
    lines = capsys.readouterr().out.splitlines()
    assert all(line.split()[2] == "1" for line in lines if line.startswith("info"))
    assert lines[-1].startswith("bestmove ")
