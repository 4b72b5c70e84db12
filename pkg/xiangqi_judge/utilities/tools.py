import os
import json

import yaml

DEFAULT_CONFIG = os.path.join(
    os.path.dirname(os.path.dirname(os.path.abspath(__file__))), "config", "default.yaml"
)


class XiangqiError(Exception):
    pass


class FenError(XiangqiError):
    def __init__(self, field, message):
        self.field = field
        super().__init__("FEN %s: %s" % (field, message))


class MoveParseError(XiangqiError):
    def __init__(self, text, message):
        self.text = text
        super().__init__("move '%s': %s" % (text, message))


class IllegalMoveError(XiangqiError):
    def __init__(self, move, message="illegal in this position"):
        self.move = move
        super().__init__("move '%s': %s" % (move, message))


class CorpusError(XiangqiError):
    def __init__(self, path, line, message):
        self.path = path
        self.line = line
        super().__init__("%s:%s: %s" % (path, line, message))


class KeyNotFoundError(Exception):
    pass


def _merge(base, override):
    for key, value in override.items():
        if isinstance(value, dict) and isinstance(base.get(key), dict):
            _merge(base[key], value)
        else:
            base[key] = value
    return base


def load_config(config_yaml=None):
    with open(DEFAULT_CONFIG, "r") as f:
        configs = yaml.load(f, Loader=yaml.FullLoader)
    if config_yaml is not None:
        with open(config_yaml, "r") as f:
            _merge(configs, yaml.load(f, Loader=yaml.FullLoader) or {})
    return configs


def get_config(configs, dotted_key):
    node = configs
    for part in dotted_key.split("."):
        if not isinstance(node, dict) or part not in node:
            raise KeyNotFoundError("config key not found: %s" % dotted_key)
        node = node[part]
    return node


def write_json(my_dict, fname):
    with open(fname, "w") as json_file:
        json.dump(my_dict, json_file, indent=4)
