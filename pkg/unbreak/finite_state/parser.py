import argparse
from .properties import list_properties


def _add_c(parser):
    parser.add_argument(
        "--c", help="Half of the boundary label budget; labels lie in [1, 2c].", type=int, default=1
    )


def parse_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    commands = parser.add_subparsers(dest="fsm_command", metavar="{table,understand,solve}")
    commands.required = True

    table_parser = commands.add_parser(
        "table", help="Enumerate small structures and build a representative table."
    )
    table_parser.add_argument(
        "--prop",
        help=f"Property name: one of {', '.join(list_properties())}, or <atmost|atleast|exactly><k>:<set property>.",
        type=str,
        required=True,
    )
    _add_c(table_parser)
    bounds = table_parser.add_argument_group("Enumeration bounds")
    bounds.add_argument(
        "--ubound", help="Largest structure enumerated, in vertices.", type=int, default=3
    )
    bounds.add_argument(
        "--cbound", help="Largest context enumerated, in vertices.", type=int, default=3
    )
    table_parser.add_argument(
        "-o", "--out", help="Path to write the table to.", type=str, required=True
    )

    understand_parser = commands.add_parser(
        "understand", help="Replace a boundaried structure by its class representative."
    )
    understand_parser.add_argument("structure", help="Boundaried structure file.", type=str)
    understand_parser.add_argument("--table", help="Table file.", type=str, required=True)
    understand_parser.add_argument(
        "--s",
        help="Recursion threshold; defaults to the table's schedule 2r·2^c + r.",
        type=int,
        default=None,
    )

    solve_parser = commands.add_parser(
        "solve", help="Decide a property on a structure through its representative."
    )
    solve_parser.add_argument("structure", help="Structure file; 'b' lines are optional.", type=str)
    solve_parser.add_argument("--prop", help="Property name.", type=str, required=True)
    solve_parser.add_argument("--table", help="Table file.", type=str, required=True)
    solve_parser.add_argument(
        "--s",
        help="Recursion threshold; defaults to the table's schedule 2r·2^c + r.",
        type=int,
        default=None,
    )
    return parser


def check_args(args):
    if args.fsm_command == "table":
        if args.c < 0:
            raise ValueError(f"--c must be non-negative, got {args.c}.")
        if args.ubound < 0 or args.cbound < 0:
            raise ValueError("--ubound and --cbound must be non-negative.")
    elif args.s is not None and args.s < 1:
        raise ValueError(f"--s must be positive, got {args.s}.")
    return args
