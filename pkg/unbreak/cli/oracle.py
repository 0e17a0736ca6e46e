#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.applications import read_mwcu
from unbreak.enumeration import ConnectedSetQuery
from unbreak.finite_state import get_property
from unbreak.framework.readwrite import read_graph
from unbreak.oracle import (
    oracle_connected_sets,
    oracle_equivalence,
    oracle_mwcu,
    oracle_witnessing_separation,
)
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


def breakable(args, out):
    g = read_graph(args.graph)
    sep = oracle_witnessing_separation(g, args.s, args.c, args.config.budget)
    out.add("n", g.n)
    if sep is None:
        out.set_verdict("UNBREAKABLE")
        return
    out.set_verdict("WITNESS")
    out.add("order", sep.order)
    out.add("separator", sep.separator)
    out.add("x_side", sep.x_side)
    out.add("y_side", sep.y_side)


def mwcu(args, out):
    inst = read_mwcu(args.instance, args.k)
    solution = oracle_mwcu(inst, args.config.budget)
    out.add("k", inst.k)
    if solution is None:
        out.set_verdict("NO")
    else:
        out.set_verdict("YES")
        out.add("solution", solution)


def connsets(args, out):
    g = read_graph(args.graph)
    sets = oracle_connected_sets(
        g, ConnectedSetQuery(args.root, args.p, args.q), args.config.budget
    )
    out.set_verdict("SETS")
    out.add("root", args.root)
    out.add("count", len(sets))
    for u in sets:
        out.add("set", u)


def classes(args, out):
    prop = get_property(args.prop)
    partition = oracle_equivalence(prop, args.c, args.ubound, args.cbound, args.config.budget)
    out.set_verdict("CLASSES")
    out.add("property", prop.name)
    out.add("classes", len(partition))
    out.add("structures", sum(len(block) for block in partition))


def main(args):
    info(f"unbreak-oracle: brute-force {args.oracle_command} reference")
    out = ResultWriter(args.config)
    {"breakable": breakable, "mwcu": mwcu, "connsets": connsets, "classes": classes}[
        args.oracle_command
    ](args, out)
    out.emit()
