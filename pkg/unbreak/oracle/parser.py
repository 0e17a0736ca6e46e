import argparse


def parse_args(parser=None):
    if parser is None:
        parser = argparse.ArgumentParser()
    parser.add_argument(
        "--budget",
        help="Largest graph the oracle accepts, in vertices. Defaults to $UNBREAK_BUDGET or 14.",
        type=int,
        default=None,
    )
    parser.add_argument(
        "--timeout", help="Seconds before the oracle gives up.", type=float, default=None
    )
    commands = parser.add_subparsers(
        dest="oracle_command", metavar="{breakable,mwcu,connsets,classes}"
    )
    commands.required = True

    breakable = commands.add_parser("breakable", help="Search every small separation.")
    breakable.add_argument("graph", help="Graph file.", type=str)
    breakable.add_argument("--s", help="Side size bound.", type=int, required=True)
    breakable.add_argument("--c", help="Separator size bound.", type=int, required=True)

    mwcu = commands.add_parser("mwcu", help="Try every deletion set.")
    mwcu.add_argument("instance", help="Multiway cut-uncut instance file.", type=str)
    mwcu.add_argument("--k", help="Largest number of deleted vertices.", type=int, required=True)

    connsets = commands.add_parser("connsets", help="Filter every vertex subset.")
    connsets.add_argument("graph", help="Graph file.", type=str)
    connsets.add_argument("--root", help="Vertex every set contains.", type=int, required=True)
    connsets.add_argument("--p", help="Largest set size.", type=int, required=True)
    connsets.add_argument("--q", help="Largest neighborhood size.", type=int, required=True)

    classes = commands.add_parser("classes", help="Partition all labeled structures.")
    classes.add_argument("--prop", help="Property name.", type=str, required=True)
    classes.add_argument("--c", help="Half of the label budget.", type=int, default=1)
    classes.add_argument("--ubound", help="Largest structure, in vertices.", type=int, default=3)
    classes.add_argument("--cbound", help="Largest context, in vertices.", type=int, default=2)
    return parser
