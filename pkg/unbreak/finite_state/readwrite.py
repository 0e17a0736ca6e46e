"""Versioned text format for representative tables.

    unbreak-table v1
    property <name>
    signature <kinds>
    c <c>
    ubound <universe bound>
    cbound <context bound>
    classes <count>
    class <index> <members> <vector or ->
    <boundaried structure lines>
    end
    ...
"""
from __future__ import annotations
from typing import List
from ..framework.Boundaried import Kind, TypeSignature, compatibility_key
from ..framework.exceptions import InputFileError
from ..framework.readwrite import _read_lines, parse_boundaried_lines
from .classes import RepresentativeTable, TableClass

TABLE_HEADER = "unbreak-table v1"
_FIELDS = ("property", "signature", "c", "ubound", "cbound", "classes")


def format_table(table: RepresentativeTable) -> str:
    lines = [
        TABLE_HEADER,
        f"property {table.property_name}",
        f"signature {table.signature}",
        f"c {table.c}",
        f"ubound {table.universe_bound}",
        f"cbound {table.context_bound}",
        f"classes {len(table.classes)}",
    ]
    for i, cls in enumerate(table.classes):
        lines.append(f"class {i} {cls.members} {cls.vector or '-'}")
        lines.append(cls.encoding.rstrip("\n"))
        lines.append("end")
    return "\n".join(lines) + "\n"


def write_table(table: RepresentativeTable, path: str):
    with open(path, "w") as f:
        f.write(format_table(table))


def _signature(text: str, path, lineno) -> TypeSignature:
    try:
        return TypeSignature(tuple(Kind(k) for k in text.split(",")))
    except ValueError as exc:
        raise InputFileError(f"Bad signature {text!r}: {exc}", path, lineno)


def parse_table_lines(lines: List[str], path=None) -> RepresentativeTable:
    if not lines or lines[0].strip() != TABLE_HEADER:
        raise InputFileError(f"Missing '{TABLE_HEADER}' header.", path, 1)
    meta = {}
    lineno = 1
    for name in _FIELDS:
        lineno += 1
        if lineno > len(lines):
            raise InputFileError(f"Missing '{name}' line.", path, lineno)
        tokens = lines[lineno - 1].split()
        if len(tokens) != 2 or tokens[0] != name:
            raise InputFileError(f"Expected '{name} <value>'.", path, lineno)
        meta[name] = tokens[1]
    signature = _signature(meta["signature"], path, 3)
    try:
        c, ubound, cbound, count = (
            int(meta[k]) for k in ("c", "ubound", "cbound", "classes")
        )
    except ValueError:
        raise InputFileError("Table bounds must be integers.", path, None)

    classes = []
    i = lineno
    while i < len(lines):
        line = lines[i].strip()
        i += 1
        if not line:
            continue
        tokens = line.split()
        if tokens[0] != "class" or len(tokens) != 4:
            raise InputFileError("Expected 'class <index> <members> <vector>'.", path, i)
        start = i
        while i < len(lines) and lines[i].strip() != "end":
            i += 1
        if i == len(lines):
            raise InputFileError("Class block without 'end'.", path, start)
        rep = parse_boundaried_lines(lines[start:i], path)
        i += 1
        vector = "" if tokens[3] == "-" else tokens[3]
        if set(vector) - {"0", "1"}:
            raise InputFileError(f"Bad answer vector {tokens[3]!r}.", path, start)
        if not signature.admits(rep.type_signature):
            raise InputFileError("Representative does not match the signature.", path, start)
        if not tokens[2].isdigit():
            raise InputFileError(f"Bad member count {tokens[2]!r}.", path, start)
        classes.append(TableClass(rep, compatibility_key(rep), vector, int(tokens[2])))
    if len(classes) != count:
        raise InputFileError(
            f"Header declares {count} classes but {len(classes)} were given.", path, 7
        )
    return RepresentativeTable(meta["property"], signature, c, ubound, cbound, classes)


def read_table(path: str) -> RepresentativeTable:
    return parse_table_lines(_read_lines(path), path)


def parse_table(text: str) -> RepresentativeTable:
    return parse_table_lines(text.splitlines())
