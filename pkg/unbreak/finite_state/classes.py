"""Equivalence classes of small boundaried structures and their representatives.

Two structures land in one class when they have the same compatibility
key and the property gives the same answer on every compatible context
enumerated up to the context bound. Each class keeps its member with the
shortest canonical serialization.
"""
from __future__ import annotations
from dataclasses import dataclass, field
import logging
import multiprocessing
import sys
from typing import Dict, List, Optional, Sequence, Tuple
import pandas as pd
from ..framework.Boundaried import (
    BoundariedStructure,
    TypeSignature,
    compatible,
    compatibility_key,
    glue_structures,
)
from ..framework.canonical import canonical_form
from ..framework.readwrite import format_boundaried_structure
from .properties import Property, get_property
from .universe import DEFAULT_MAX_STRUCTURES, check_bounds, enumerate_structures

if sys.stderr.isatty():
    from tqdm.auto import tqdm
else:

    def tqdm(iterable, **kwargs):
        return iterable


error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info


def encoding_of(a: BoundariedStructure) -> str:
    return format_boundaried_structure(canonical_form(a))


def _bits(answers: Sequence[bool]) -> str:
    return "".join("1" if x else "0" for x in answers)


@dataclass(frozen=True, eq=False)
class TableClass:
    representative: BoundariedStructure
    key: Tuple
    vector: str
    members: int = 1
    encoding: str = ""

    def __post_init__(self):
        if not self.encoding:
            object.__setattr__(self, "encoding", encoding_of(self.representative))

    @property
    def n(self) -> int:
        return self.representative.n


@dataclass(eq=False)
class RepresentativeTable:
    property_name: str
    signature: TypeSignature
    c: int
    universe_bound: int
    context_bound: int
    classes: List[TableClass]
    _by_key: Dict[Tuple, List[TableClass]] = field(default=None, init=False, repr=False)
    _tests: Dict[Tuple, List[BoundariedStructure]] = field(
        default_factory=dict, init=False, repr=False
    )
    _matrices: Dict[Tuple, List[Tuple[bool, ...]]] = field(
        default_factory=dict, init=False, repr=False
    )

    def __post_init__(self):
        self._by_key = {}
        for cls in self.classes:
            self._by_key.setdefault(cls.key, []).append(cls)

    @property
    def boundary_budget(self) -> int:
        return 2 * self.c

    @property
    def arity(self) -> int:
        return self.signature.arity

    @property
    def r(self) -> int:
        """Vertex count of the largest representative, at least c."""
        return max([self.c] + [cls.n for cls in self.classes])

    @property
    def max_encoding_length(self) -> int:
        return max((len(cls.encoding) for cls in self.classes), default=0)

    def schedule_s(self) -> int:
        return 2 * self.r * 2**self.c + self.r

    def candidates(self, key: Tuple) -> List[TableClass]:
        """Classes sharing the compatibility key ``key``."""
        return self._by_key.get(key, [])

    def test_set(self, a: BoundariedStructure) -> List[BoundariedStructure]:
        """Representatives compatible with ``a``; depends only on its key."""
        key = compatibility_key(a)
        if key not in self._tests:
            self._tests[key] = [
                cls.representative
                for cls in self.classes
                if compatible(a, cls.representative)
            ]
        return self._tests[key]

    def answer_matrix(self, a: BoundariedStructure, solver) -> List[Tuple[bool, ...]]:
        """Answers of every candidate of a's key against a's test set."""
        key = compatibility_key(a)
        memo = (key, solver.name)
        if memo not in self._matrices:
            tests = self.test_set(a)
            self._matrices[memo] = [
                tuple(solver(glue_structures(cls.representative, t)) for t in tests)
                for cls in self.candidates(key)
            ]
        return self._matrices[memo]

    def to_frame(self) -> pd.DataFrame:
        rows = []
        for i, cls in enumerate(self.classes):
            labels, per_index = cls.key
            rows.append(
                {
                    "class": i,
                    "labels": ",".join(str(x) for x in labels) or "-",
                    "elements": ";".join(f"{kind}:{detail}" for kind, detail in per_index)
                    or "-",
                    "vertices": cls.n,
                    "edges": cls.representative.graph.m,
                    "members": cls.members,
                    "encoding_length": len(cls.encoding),
                    "vector": cls.vector or "-",
                }
            )
        return pd.DataFrame(
            rows,
            columns=[
                "class",
                "labels",
                "elements",
                "vertices",
                "edges",
                "members",
                "encoding_length",
                "vector",
            ],
        )

    def __repr__(self):
        return (
            f"RepresentativeTable({self.property_name}, c={self.c}, "
            f"classes={len(self.classes)}, r={self.r})"
        )


def schedule_s(table: RepresentativeTable) -> int:
    return table.schedule_s()


def contexts_by_key(
    universe: Sequence[BoundariedStructure], contexts: Sequence[BoundariedStructure]
) -> Dict[Tuple, List[BoundariedStructure]]:
    grouped = {}
    for a in universe:
        key = compatibility_key(a)
        if key not in grouped:
            grouped[key] = [g for g in contexts if compatible(a, g)]
    return grouped


def evaluation_vector(
    prop: Property, a: BoundariedStructure, contexts: Sequence[BoundariedStructure]
) -> str:
    return _bits(prop(glue_structures(a, g)) for g in contexts)


def _init_worker(prop_name, grouped):
    global worker_prop, worker_contexts
    worker_prop = get_property(prop_name)
    worker_contexts = grouped


def _vector_worker(a: BoundariedStructure) -> str:
    return evaluation_vector(worker_prop, a, worker_contexts[compatibility_key(a)])


def _vectors(prop, universe, grouped, jobs) -> List[str]:
    if jobs > 1:
        try:
            get_property(prop.name)
        except ValueError:
            warn(f"Property {prop.name} is not registered; evaluating serially.")
            jobs = 1
    if jobs <= 1:
        return [
            evaluation_vector(prop, a, grouped[compatibility_key(a)])
            for a in tqdm(universe, desc="classes", leave=False)
        ]
    with multiprocessing.Pool(
        jobs, initializer=_init_worker, initargs=(prop.name, grouped)
    ) as pool:
        return pool.map(_vector_worker, universe, chunksize=64)


def compute_classes(
    prop: Property,
    c: int,
    universe_bound: int,
    context_bound: int,
    jobs: int = 1,
    max_structures: int = DEFAULT_MAX_STRUCTURES,
) -> RepresentativeTable:
    """Partition the enumerated universe by compatibility key and answer vector."""
    check_bounds(c, universe_bound)
    check_bounds(c, context_bound)
    if context_bound > universe_bound:
        warn(
            f"Context bound {context_bound} exceeds universe bound {universe_bound}; "
            "some distinguishing contexts may have no representative."
        )
    universe = enumerate_structures(prop.signature, c, universe_bound, max_structures)
    if context_bound == universe_bound:
        contexts = universe
    else:
        contexts = enumerate_structures(prop.signature, c, context_bound, max_structures)
    info(
        f"{len(universe)} structures and {len(contexts)} contexts of type {prop.signature}."
    )
    grouped = contexts_by_key(universe, contexts)
    vectors = _vectors(prop, universe, grouped, jobs)
    members: Dict[Tuple, List[BoundariedStructure]] = {}
    for a, vector in zip(universe, vectors):
        members.setdefault((compatibility_key(a), vector), []).append(a)
    classes = []
    for (key, vector), group in members.items():
        encoded = [(len(enc), enc, a) for a, enc in ((a, encoding_of(a)) for a in group)]
        length, enc, best = min(encoded, key=lambda t: (t[0], t[1]))
        classes.append(TableClass(best, key, vector, len(group), enc))
    classes.sort(key=lambda cls: (len(cls.encoding), cls.encoding))
    table = RepresentativeTable(
        prop.name, prop.signature, c, universe_bound, context_bound, classes
    )
    info(f"{len(classes)} classes; r = {table.r}, schedule s = {table.schedule_s()}.")
    return table


def class_of(table: RepresentativeTable, a: BoundariedStructure, prop: Property) -> Optional[int]:
    """Index of the class whose vector over the table's contexts matches ``a``.

    Recomputes the context family, so it is meant for tests and small inputs.
    """
    contexts = enumerate_structures(prop.signature, table.c, table.context_bound)
    key = compatibility_key(a)
    ctx = [g for g in contexts if compatible(a, g)]
    vector = evaluation_vector(prop, a, ctx)
    for i, cls in enumerate(table.classes):
        if cls.key == key and cls.vector == vector:
            return i
    return None
