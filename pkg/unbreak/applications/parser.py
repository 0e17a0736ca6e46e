import argparse


def parse_mwcu_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    parser.add_argument(
        "instance",
        help="Graph file with 't <vertex>' terminal lines and 'r <v1> <v2> ...' class lines.",
        type=str,
    )
    parser.add_argument("--k", help="Largest number of deleted vertices.", type=int, required=True)
    parser.add_argument(
        "--s",
        help="Component size bound s(k) the graph is unbreakable for. Defaults to k + 2.",
        type=int,
        default=None,
    )
    parser.add_argument(
        "--pair-branching",
        help="Branch on both cliques of a violating pair instead of guessing the large component.",
        action="store_true",
    )
    return parser


def parse_pendant_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    parser.add_argument("graph", help="Graph file.", type=str)
    parser.add_argument("--k", help="Largest neighborhood size.", type=int, required=True)
    parser.add_argument("--t", help="Largest treewidth.", type=int, required=True)
    parser.add_argument(
        "--prop", help="Property of the induced subgraph, e.g. even-vertices.", type=str, default="true"
    )
    parser.add_argument(
        "--s",
        help="Value of s(k) the graph is unbreakable for. Defaults to k + 2.",
        type=int,
        default=None,
    )
    return parser


def check_args(args):
    for name in ("k", "t", "s"):
        value = getattr(args, name, None)
        if value is not None and value < 0:
            raise ValueError(f"--{name} must be non-negative, got {value}.")
    if getattr(args, "s", None) == 0:
        raise ValueError("--s must be positive.")
    return args
