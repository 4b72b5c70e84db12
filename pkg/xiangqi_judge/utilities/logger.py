import logging


def setup_logging(log_file=None, level=logging.WARNING):
    if isinstance(level, str):
        level = getattr(logging, level.upper())

    formatter = logging.Formatter(
        "%(asctime)s | %(levelname)s | %(message)s", datefmt="%Y-%m-%d,%H:%M:%S"
    )

    logging.root.setLevel(level)
    for name in list(logging.root.manager.loggerDict):
        if name.startswith("xiangqi_judge"):
            logging.getLogger(name).setLevel(level)

    # repeated cli invocations in one process (tests) must not stack handlers
    for handler in list(logging.root.handlers):
        if getattr(handler, "_xiangqi_judge", False):
            logging.root.removeHandler(handler)

    stream_handler = logging.StreamHandler()
    stream_handler.setFormatter(formatter)
    stream_handler._xiangqi_judge = True
    logging.root.addHandler(stream_handler)

    if log_file:
        file_handler = logging.FileHandler(filename=log_file)
        file_handler.setFormatter(formatter)
        file_handler._xiangqi_judge = True
        logging.root.addHandler(file_handler)
