#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.enumeration import ConnectedSetQuery, count_bound, enum_connected_sets
from unbreak.framework.readwrite import read_graph
from unbreak.cli.output import ResultWriter

logging.basicConfig(
    level=logging.INFO,
    format="%(levelname)-5s @ %(asctime)s:\n\t %(message)s \n",
    datefmt="%a, %d %b %Y %H:%M:%S",
    stream=sys.stderr,
    filemode="w",
)
error = logging.critical
warn = logging.warning
debug = logging.debug
info = logging.info


def main(args):
    info("unbreak-enumconn: connected sets around a root with a small neighborhood")
    g = read_graph(args.graph)
    query = ConnectedSetQuery(args.root, args.p, args.q)
    sets = enum_connected_sets(g, query)
    info(f"{len(sets)} sets; at most {count_bound(args.p, args.q)} are possible.")
    out = ResultWriter(args.config)
    out.set_verdict("SETS")
    out.add("root", args.root)
    out.add("count", len(sets))
    out.add("bound", count_bound(args.p, args.q))
    if not args.count_only:
        for u in sets:
            out.add("set", u)
    out.emit()
