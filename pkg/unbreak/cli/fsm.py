#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.finite_state import (
    DirectSolver,
    compute_classes,
    get_property,
    read_table,
    solve_cmso,
    understand,
    write_table,
)
from unbreak.finite_state.parser import check_args
from unbreak.framework.readwrite import read_boundaried_structure
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


def table(args):
    prop = get_property(args.prop)
    result = compute_classes(prop, args.c, args.ubound, args.cbound, jobs=args.config.jobs)
    write_table(result, args.out)
    csv_path = f"{args.out}.classes.csv"
    result.to_frame().to_csv(csv_path, index=False)
    info(f"Wrote {args.out} and {csv_path}.")
    out = ResultWriter(args.config)
    out.set_verdict("TABLE")
    out.add("property", result.property_name)
    out.add("c", result.c)
    out.add("classes", len(result.classes))
    out.add("r", result.r)
    out.add("max_encoding_length", result.max_encoding_length)
    out.add("schedule_s", result.schedule_s())
    out.add("table", args.out)
    out.emit()


def _threshold(args, tbl) -> int:
    return args.s if args.s is not None else tbl.schedule_s()


def understand_structure(args):
    tbl = read_table(args.table)
    structure = read_boundaried_structure(args.structure)
    solver = DirectSolver(get_property(tbl.property_name))
    s = _threshold(args, tbl)
    trace = []
    rep = understand(
        structure,
        tbl,
        solver,
        s,
        tbl.c,
        seed=args.config.seed,
        jobs=args.config.jobs,
        trace=trace,
    )
    index = next(i for i, cls in enumerate(tbl.classes) if cls.representative is rep)
    info(f"{len(trace)} replacements at s = {s}.")
    out = ResultWriter(args.config)
    out.set_verdict("CLASS")
    out.add("class", index)
    out.add("n", structure.n)
    out.add("representative_n", rep.n)
    out.add("representative_m", rep.graph.m)
    out.add("labels", [f"{v}:{label}" for v, label in sorted(rep.labels.items())])
    out.add("replacements", len(trace))
    out.emit()


def solve(args):
    tbl = read_table(args.table)
    prop = get_property(args.prop)
    if prop.name != tbl.property_name:
        raise ValueError(f"The table was built for {tbl.property_name}, not {prop.name}.")
    structure = read_boundaried_structure(args.structure)
    if structure.boundary:
        raise ValueError("fsm solve takes a structure without boundary ('b') lines.")
    s = _threshold(args, tbl)
    trace = []
    answer = solve_cmso(
        structure.to_structure(),
        tbl,
        DirectSolver(prop),
        s,
        tbl.c,
        seed=args.config.seed,
        jobs=args.config.jobs,
        trace=trace,
    )
    info(f"{len(trace)} replacements at s = {s}.")
    out = ResultWriter(args.config)
    out.set_verdict("TRUE" if answer else "FALSE")
    out.add("property", prop.name)
    out.add("n", structure.n)
    out.add("replacements", len(trace))
    out.emit()


def main(args):
    info("unbreak-fsm: representative tables and recursive understanding")
    args = check_args(args)
    if args.fsm_command == "table":
        table(args)
    elif args.fsm_command == "understand":
        understand_structure(args)
    else:
        solve(args)
