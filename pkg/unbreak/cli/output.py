"""Result records printed to stdout.

Structured mode prints ``#unbreak-output v1``, then ``key=value`` lines,
then ``end``. Lists are sorted and comma-joined, ``-`` for an empty one.
"""
from __future__ import annotations
import sys
from typing import List, Tuple

STRUCTURED_HEADER = "#unbreak-output v1"


def format_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (set, frozenset)):
        value = sorted(value)
    if isinstance(value, (list, tuple)):
        return ",".join(str(v) for v in value) if value else "-"
    return str(value)


class ResultWriter:
    def __init__(self, config, stream=None):
        self.config = config
        self.stream = stream if stream is not None else sys.stdout
        self.verdict = None
        self.fields: List[Tuple[str, str]] = []

    def set_verdict(self, verdict: str):
        self.verdict = verdict

    def add(self, key: str, value):
        self.fields.append((key, format_value(value)))

    def lines(self) -> List[str]:
        if self.config.output_format == "structured":
            out = [STRUCTURED_HEADER, f"command={self.config.command}"]
            if self.verdict is not None:
                out.append(f"verdict={self.verdict}")
            out += [f"{key}={value}" for key, value in self.fields]
            out.append("end")
            return out
        out = [self.verdict] if self.verdict is not None else []
        out += [f"{key}: {value}" for key, value in self.fields]
        return out

    def emit(self):
        self.stream.write("\n".join(self.lines()) + "\n")
        self.stream.flush()
