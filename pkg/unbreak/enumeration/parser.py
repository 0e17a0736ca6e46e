import argparse


def parse_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    parser.add_argument("graph", help="Graph file.", type=str)
    parser.add_argument("--root", help="Vertex every set contains.", type=int, required=True)
    parser.add_argument("--p", help="Largest set size.", type=int, required=True)
    parser.add_argument("--q", help="Largest neighborhood size.", type=int, required=True)
    parser.add_argument(
        "--count-only", help="Print only the number of sets.", action="store_true"
    )
    return parser
