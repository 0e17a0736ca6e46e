"""Text formats for graphs and boundaried structures.

Graph: ``p <n> <m>`` followed by ``m`` lines ``e <u> <v>`` with 0-based ids.
Boundaried structures add ``b <vertex> <label>`` and
``x <index> <kind> <payload>`` lines, where index 2 is the first element.
Blank lines and ``#`` comments are ignored everywhere.
"""
from __future__ import annotations
from typing import Dict, Iterable, List, Optional, Sequence, Tuple
from .Boundaried import BoundariedGraph, BoundariedStructure, Element, Kind
from .Graph import Graph
from .exceptions import InputFileError

ExtraLine = Tuple[int, List[str]]


def _int(token: str, path, lineno) -> int:
    try:
        return int(token)
    except ValueError:
        raise InputFileError(f"Expected an integer, got {token!r}.", path, lineno)


def parse_graph_lines(
    lines: Iterable[str],
    path: Optional[str] = None,
    extra_keys: Sequence[str] = (),
) -> Tuple[Graph, List[ExtraLine]]:
    """Parse the graph part and return lines whose key is in ``extra_keys``."""
    header = None
    edges = []
    extras = []
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        key = tokens[0]
        if key == "p":
            if header is not None:
                raise InputFileError("Duplicate 'p' header.", path, lineno)
            if len(tokens) != 3:
                raise InputFileError("Header must read 'p <n> <m>'.", path, lineno)
            header = (_int(tokens[1], path, lineno), _int(tokens[2], path, lineno), lineno)
            if header[0] < 0 or header[1] < 0:
                raise InputFileError("Negative vertex or edge count.", path, lineno)
        elif header is None:
            raise InputFileError("Missing 'p <n> <m>' header.", path, lineno)
        elif key == "e":
            if len(tokens) != 3:
                raise InputFileError("Edge line must read 'e <u> <v>'.", path, lineno)
            u, v = _int(tokens[1], path, lineno), _int(tokens[2], path, lineno)
            for w in (u, v):
                if not 0 <= w < header[0]:
                    raise InputFileError(f"Vertex {w} out of range.", path, lineno)
            edges.append((u, v))
        elif key in extra_keys:
            extras.append((lineno, tokens))
        else:
            raise InputFileError(f"Unknown line type {key!r}.", path, lineno)
    if header is None:
        raise InputFileError("Missing 'p <n> <m>' header.", path, None)
    if len(edges) != header[1]:
        raise InputFileError(
            f"Header declares {header[1]} edges but {len(edges)} were given.",
            path,
            header[2],
        )
    return Graph.from_edges(header[0], edges), extras


def _read_lines(path: str) -> List[str]:
    try:
        with open(path) as f:
            return f.readlines()
    except OSError as exc:
        raise InputFileError(f"Cannot read file: {exc.strerror}.", path, None)


def read_graph(path: str) -> Graph:
    return parse_graph_lines(_read_lines(path), path)[0]


def parse_graph(text: str) -> Graph:
    return parse_graph_lines(text.splitlines())[0]


def _dense_ids(graph: Graph) -> Dict[int, int]:
    return {v: i for i, v in enumerate(graph.vertices)}


def format_graph(graph: Graph) -> str:
    ids = _dense_ids(graph)
    lines = [f"p {graph.n} {graph.m}"]
    lines += [f"e {ids[u]} {ids[v]}" for u, v in graph.edges]
    return "\n".join(lines) + "\n"


def write_graph(graph: Graph, path: str):
    with open(path, "w") as f:
        f.write(format_graph(graph))


def _parse_id_list(payload: str, path, lineno) -> List[int]:
    if payload == "-":
        return []
    return [_int(tok, path, lineno) for tok in payload.split(",") if tok]


def parse_boundaried_lines(
    lines: Iterable[str], path: Optional[str] = None
) -> BoundariedStructure:
    graph, extras = parse_graph_lines(lines, path, extra_keys=("b", "x"))
    labels = {}
    elements: Dict[int, Element] = {}
    for lineno, tokens in extras:
        if tokens[0] == "b":
            if len(tokens) != 3:
                raise InputFileError("Boundary line must read 'b <vertex> <label>'.", path, lineno)
            v, label = _int(tokens[1], path, lineno), _int(tokens[2], path, lineno)
            if v in labels:
                raise InputFileError(f"Vertex {v} labeled twice.", path, lineno)
            labels[v] = label
            continue
        if len(tokens) not in (3, 4):
            raise InputFileError(
                "Element line must read 'x <index> <kind> [payload]'.", path, lineno
            )
        index = _int(tokens[1], path, lineno)
        if index < 2 or index in elements:
            raise InputFileError(f"Bad or repeated element index {index}.", path, lineno)
        try:
            kind = Kind(tokens[2])
        except ValueError:
            raise InputFileError(f"Unknown element kind {tokens[2]!r}.", path, lineno)
        payload = tokens[3] if len(tokens) == 4 else None
        if kind == Kind.STAR:
            el = Element.star()
        elif payload is None or kind == Kind.GRAPH:
            raise InputFileError(f"Element of kind {kind.value} needs a payload.", path, lineno)
        elif kind == Kind.VERTEX:
            el = Element.vertex(_int(payload, path, lineno))
        elif kind == Kind.EDGE:
            el = Element.edge(_int(payload, path, lineno))
        elif kind == Kind.VERTEX_SET:
            el = Element.vertex_set(_parse_id_list(payload, path, lineno))
        else:
            el = Element.edge_set(_parse_id_list(payload, path, lineno))
        elements[index] = el
    if sorted(elements) != list(range(2, 2 + len(elements))):
        raise InputFileError("Element indices must be 2, 3, ... without gaps.", path, None)
    try:
        return BoundariedStructure(
            BoundariedGraph(graph, labels), [elements[i] for i in sorted(elements)]
        )
    except ValueError as exc:
        raise InputFileError(str(exc), path, None)


def read_boundaried_structure(path: str) -> BoundariedStructure:
    return parse_boundaried_lines(_read_lines(path), path)


def _format_payload(el: Element, ids: Dict[int, int]) -> str:
    if el.kind == Kind.STAR:
        return ""
    if el.kind == Kind.VERTEX:
        return f" {ids[el.value]}"
    if el.kind == Kind.EDGE:
        return f" {el.value}"
    values = sorted(ids[v] for v in el.value) if el.kind == Kind.VERTEX_SET else sorted(el.value)
    return " " + (",".join(str(v) for v in values) if values else "-")


def format_boundaried_structure(a: BoundariedStructure) -> str:
    """Serialize on dense ids 0..n-1 in ascending order of the original ids."""
    ids = _dense_ids(a.graph)
    lines = [format_graph(a.graph).rstrip("\n")]
    lines += [f"b {ids[v]} {label}" for v, label in sorted(a.labels.items())]
    lines += [
        f"x {i} {el.kind.value}{_format_payload(el, ids)}"
        for i, el in enumerate(a.elements, start=2)
    ]
    return "\n".join(lines) + "\n"


def write_boundaried_structure(a: BoundariedStructure, path: str):
    with open(path, "w") as f:
        f.write(format_boundaried_structure(a))
