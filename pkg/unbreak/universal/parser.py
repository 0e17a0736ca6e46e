import argparse
from .universal_set import STRATEGIES


def parse_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    commands = parser.add_subparsers(dest="uset_command", metavar="{build,verify}")
    commands.required = True

    build = commands.add_parser("build", help="Build an (n,k,p)-universal family.")
    build.add_argument("--n", help="Vector length.", type=int, required=True)
    build.add_argument("--k", help="Size of the coordinate subsets to cover.", type=int, required=True)
    build.add_argument("--p", help="Number of ones in each pattern.", type=int, required=True)
    build.add_argument(
        "--strategy",
        help="Construction to use; 'auto' keeps the smallest applicable family.",
        choices=STRATEGIES,
        default="auto",
    )
    build.add_argument(
        "-o", "--out", help="Write the family to this file as well.", type=str, default=None
    )

    verify = commands.add_parser("verify", help="Check every (I, pattern) constraint.")
    verify.add_argument("family", help="Family file ('u <n> <k> <p>' then 0/1 rows).", type=str)
    return parser
