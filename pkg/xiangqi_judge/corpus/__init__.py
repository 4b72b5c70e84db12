from .notation import parse_wxf_notation, parse_move_text, wxf_file
from .harness import (
    CorpusCase,
    CaseOutcome,
    CorpusReport,
    load_corpus,
    replay,
    run_case,
    run_corpus,
)
