#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.applications import (
    PendantInstance,
    constant_schedule,
    default_s_of_k,
    pendant_solve_unbreakable,
)
from unbreak.applications.parser import check_args
from unbreak.finite_state import get_property
from unbreak.framework.readwrite import read_graph
from unbreak.cli.mwcu import warn_if_breakable
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
    info("unbreak-pendant: connected low-treewidth set with a small neighborhood")
    args = check_args(args)
    config = args.config
    inst = PendantInstance(read_graph(args.graph), args.k, args.t, get_property(args.prop))
    s_of_k = constant_schedule(args.s) if args.s is not None else default_s_of_k
    warn_if_breakable(inst.graph, s_of_k(inst.k), inst.k + inst.t, config.seed, config.jobs)
    found = pendant_solve_unbreakable(inst, s_of_k)
    out = ResultWriter(config)
    out.add("k", inst.k)
    out.add("t", inst.t)
    out.add("property", inst.prop.name)
    if found is None:
        out.set_verdict("NO")
    else:
        out.set_verdict("YES")
        out.add("set", found)
    out.emit()
