#!/usr/bin/env python
# -*- coding: utf-8 -*-
import sys
import logging
from unbreak.universal import (
    build_universal_set,
    read_universal_set,
    verify_universal_set,
    write_universal_set,
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


def _row(bits) -> str:
    return "".join(str(int(b)) for b in bits)


def build(args):
    config = args.config
    family = build_universal_set(args.n, args.k, args.p, seed=config.seed, strategy=args.strategy)
    info(f"Built {family}.")
    if args.out is not None:
        write_universal_set(family, args.out)
        info(f"Wrote the family to {args.out}.")
    out = ResultWriter(config)
    out.set_verdict("BUILT")
    out.add("n", family.n)
    out.add("k", family.k)
    out.add("p", family.p)
    out.add("size", len(family))
    out.add("strategy", family.strategy)
    out.add("vectors", [_row(row) for row in family.functions])
    out.emit()


def verify(args):
    config = args.config
    family = read_universal_set(args.family)
    info(f"Checking {family} ...")
    result = verify_universal_set(family, jobs=config.jobs)
    out = ResultWriter(config)
    out.add("n", family.n)
    out.add("k", family.k)
    out.add("p", family.p)
    out.add("size", len(family))
    if result.ok:
        out.set_verdict("OK")
    else:
        coords, pattern = result.witness
        out.set_verdict("VIOLATION")
        out.add("coordinates", list(coords))
        out.add("pattern", list(pattern))
    out.emit()


def main(args):
    info("unbreak-uset: build or verify (n,k,p)-universal families")
    if args.uset_command == "build":
        build(args)
    else:
        verify(args)
