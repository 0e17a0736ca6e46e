#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.breaking.break_alg import break_alg
from unbreak.breaking.parser import check_args
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
    info("unbreak-breakcheck: search a separation of order <= c with two sides above s")
    args = check_args(args)
    config = args.config
    g = read_graph(args.graph)
    info(f"Read {g.n} vertices and {g.m} edges from {args.graph}.")
    outcome = break_alg(g, args.s, args.c, seed=config.seed, jobs=config.jobs)
    out = ResultWriter(config)
    out.add("n", g.n)
    out.add("s", args.s)
    out.add("c", args.c)
    if outcome.unbreakable:
        out.set_verdict("UNBREAKABLE")
    else:
        sep = outcome.witness
        out.set_verdict("WITNESS")
        out.add("threshold", outcome.threshold)
        out.add("order", sep.order)
        out.add("separator", sep.separator)
        out.add("x_side", sep.x_side)
        out.add("y_side", sep.y_side)
        out.add("source", outcome.source)
    out.emit()
