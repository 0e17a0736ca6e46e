import argparse
import logging
import sys
from unbreak.applications.parser import parse_mwcu_args as get_mwcu_parser
from unbreak.applications.parser import parse_pendant_args as get_pendant_parser
from unbreak.breaking.parser import parse_args as get_breakcheck_parser
from unbreak.enumeration.parser import parse_args as get_enumconn_parser
from unbreak.finite_state.parser import parse_args as get_fsm_parser
from unbreak.oracle.parser import parse_args as get_oracle_parser
from unbreak.universal.parser import parse_args as get_uset_parser
from unbreak.cli.breakcheck import main as breakcheck
from unbreak.cli.config import DEFAULT_SEED, OUTPUT_FORMATS, RunConfig
from unbreak.cli.enumconn import main as enumconn
from unbreak.cli.fsm import main as fsm
from unbreak.cli.mwcu import main as mwcu
from unbreak.cli.oracle import main as oracle
from unbreak.cli.pendant import main as pendant
from unbreak.cli.uset import main as uset
from unbreak.framework.exceptions import BudgetExceededError, InputFileError

error = logging.critical

COMMANDS = {
    "breakcheck": breakcheck,
    "uset": uset,
    "enumconn": enumconn,
    "fsm": fsm,
    "mwcu": mwcu,
    "pendant": pendant,
    "oracle": oracle,
}


def get_parser():
    parser = argparse.ArgumentParser(prog="unbreak")
    parser.add_argument(
        "--seed", help="Seed for every randomized construction.", type=int, default=DEFAULT_SEED
    )
    parser.add_argument(
        "--jobs", help="Worker processes for parallel loops.", type=int, default=1
    )
    parser.add_argument(
        "--format",
        help="Output format of the result on stdout.",
        choices=OUTPUT_FORMATS,
        default="human",
    )
    subparsers = parser.add_subparsers(help="Subcommands", dest="subcommand")
    get_breakcheck_parser(
        subparsers.add_parser("breakcheck", help="decide (s,c)-breakability")
    )
    get_uset_parser(subparsers.add_parser("uset", help="build or verify universal sets"))
    get_enumconn_parser(
        subparsers.add_parser("enumconn", help="enumerate connected sets around a root")
    )
    get_fsm_parser(
        subparsers.add_parser("fsm", help="representative tables and understanding")
    )
    get_mwcu_parser(
        subparsers.add_parser("mwcu", help="solve vertex multiway cut-uncut")
    )
    get_pendant_parser(
        subparsers.add_parser("pendant", help="find a pendant low-treewidth subgraph")
    )
    get_oracle_parser(subparsers.add_parser("oracle", help="brute-force references"))
    return parser


def main(argv=None) -> int:
    parser = get_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code
    if args.subcommand is None:
        parser.print_usage(sys.stderr)
        return 2
    try:
        args.config = RunConfig.from_args(args)
        COMMANDS[args.subcommand](args)
    except (InputFileError, ValueError) as exc:
        error(f"{type(exc).__name__}: {exc}")
        return 2
    except BudgetExceededError as exc:
        error(f"Budget exceeded: {exc}")
        return 3
    return 0
