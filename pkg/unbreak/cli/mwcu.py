#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.applications import (
    BranchStats,
    constant_schedule,
    default_s_of_k,
    mwcu_to_rbcu,
    rbcu_solve_unbreakable,
    read_mwcu,
)
from unbreak.applications.parser import check_args
from unbreak.breaking.break_alg import break_alg
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


def warn_if_breakable(g, s: int, c: int, seed: int, jobs: int):
    outcome = break_alg(g, s, c, seed=seed, jobs=jobs)
    if not outcome.unbreakable:
        warn(
            f"The graph has a separation of order <= {c} with sides above {outcome.threshold} "
            f"({sorted(outcome.witness.separator)}); a NO answer is only guaranteed on "
            f"({s},{c})-unbreakable graphs."
        )


def main(args):
    info("unbreak-mwcu: vertex multiway cut-uncut on unbreakable graphs")
    args = check_args(args)
    config = args.config
    inst = read_mwcu(args.instance, args.k)
    s_of_k = constant_schedule(args.s) if args.s is not None else default_s_of_k
    info(
        f"{inst.graph.n} vertices, {len(inst.terminals)} terminals in "
        f"{len(inst.classes)} classes, k = {inst.k}, s(k) = {s_of_k(inst.k)}."
    )
    warn_if_breakable(inst.graph, s_of_k(inst.k), inst.k, config.seed, config.jobs)
    rbcu, inserted = mwcu_to_rbcu(inst)
    debug(f"Inserted red edges: {inserted}.")
    stats = BranchStats()
    solution = rbcu_solve_unbreakable(
        rbcu, s_of_k, guess_large=not args.pair_branching, stats=stats
    )
    out = ResultWriter(config)
    out.add("k", inst.k)
    out.add("s", s_of_k(inst.k))
    if solution is None:
        out.set_verdict("NO")
    else:
        out.set_verdict("YES")
        out.add("solution", solution)
    out.add("branch_calls", stats.calls)
    out.add("depth", stats.max_depth)
    out.emit()
