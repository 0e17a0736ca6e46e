import argparse


def parse_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    parser.add_argument("graph", help="Graph file ('p <n> <m>' then 'e <u> <v>' lines).", type=str)
    parser.add_argument(
        "--s", help="Both sides must keep more than s vertices outside the separator.", type=int, required=True
    )
    parser.add_argument("--c", help="Largest separator size.", type=int, required=True)
    return parser


def check_args(args):
    if args.s < 1:
        raise ValueError(f"--s must be positive, got {args.s}.")
    if args.c < 0:
        raise ValueError(f"--c must be non-negative, got {args.c}.")
    return args
