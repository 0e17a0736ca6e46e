from typing import List
import numpy as np
from ..framework.exceptions import InputFileError
from .universal_set import UniversalFamily


def format_universal_set(f: UniversalFamily) -> str:
    lines = [f"u {f.n} {f.k} {f.p}"]
    lines += ["".join(str(int(bit)) for bit in row) for row in f.functions]
    return "\n".join(lines) + "\n"


def write_universal_set(f: UniversalFamily, path: str):
    with open(path, "w") as fh:
        fh.write(format_universal_set(f))


def parse_universal_set(lines: List[str], path: str = None) -> UniversalFamily:
    header = None
    rows = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            tokens = line.split()
            if len(tokens) != 4 or tokens[0] != "u":
                raise InputFileError("Header must read 'u <n> <k> <p>'.", path, lineno)
            try:
                header = tuple(int(t) for t in tokens[1:])
            except ValueError:
                raise InputFileError("Header values must be integers.", path, lineno)
            continue
        if len(line) != header[0] or set(line) - {"0", "1"}:
            raise InputFileError(
                f"Expected a 0/1 string of length {header[0]}.", path, lineno
            )
        rows.append([int(ch) for ch in line])
    if header is None:
        raise InputFileError("Missing 'u <n> <k> <p>' header.", path, None)
    n, k, p = header
    try:
        return UniversalFamily(n, k, p, np.array(rows, dtype=np.uint8).reshape(-1, n))
    except ValueError as exc:
        raise InputFileError(str(exc), path, None)


def read_universal_set(path: str) -> UniversalFamily:
    try:
        with open(path) as fh:
            lines = fh.readlines()
    except OSError as exc:
        raise InputFileError(f"Cannot read file: {exc.strerror}.", path, None)
    return parse_universal_set(lines, path)
