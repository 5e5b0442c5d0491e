"""Python access to the universal online learning simulator."""

from . import _uol
from ._uol import (
    UolError,
    closure_extendable,
    config_dump,
    evil_sequence,
    extension_operator,
    is_realizable,
    priority_construct,
)

__all__ = [
    "UolError",
    "closure_extendable",
    "config_dump",
    "decode",
    "encode",
    "eval_bounded",
    "evil_sequence",
    "extension_operator",
    "is_realizable",
    "priority_construct",
    "run",
]


def encode(term: str) -> int:
    return int(_uol.encode(term))


def decode(index: int) -> str:
    return _uol.decode(str(index))


def eval_bounded(index: int, x: int, steps: int):
    """The label, or None if the program is still running after `steps`."""
    return _uol.eval_bounded(str(index), x, steps)


def run(config: str = "", **keys):
    """Runs a command from config text plus `section__key=value` overrides.

    Returns (exit status, outputs by name, message).
    """
    lines = [config] + [f"{k.replace('__', '.')} = {v}" for k, v in keys.items()]
    return _uol.run_command("\n".join(lines))
