import argparse
import logging
import sys

from common.errors import SednError
from common.log_config import setup_logging
from common.settings import LabSettings, set_settings
from views.commands import (
    cmd_conjecture,
    cmd_construct,
    cmd_gamma,
    cmd_solve,
    cmd_sweep,
    cmd_verify,
)

logger = logging.getLogger(__name__)


def _add_triple(parser):
    parser.add_argument("m", type=int)
    parser.add_argument("n", type=int)
    parser.add_argument("p", type=int)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="sedn-lab",
        description="Signed edge domination numbers of complete tripartite graphs K(m,n,p)",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="debug logging")
    parser.add_argument("--log-file", help="also write the log to this file")
    parser.add_argument("--config", help="settings JSON (default data/lab_settings.json)")
    sub = parser.add_subparsers(dest="command", required=True)

    gamma = sub.add_parser("gamma", help="closed-form value and its case tags")
    _add_triple(gamma)
    gamma.add_argument("--json", action="store_true")
    gamma.add_argument("--report", help="also write the JSON result to this file")
    gamma.set_defaults(handler=cmd_gamma)

    construct = sub.add_parser("construct", help="build and verify a minimum SEDF")
    _add_triple(construct)
    construct.add_argument("--out", help="certificate JSON path")
    construct.add_argument("--save", action="store_true",
                           help="write the certificate under data/certificates/")
    construct.add_argument("--show-plan", action="store_true", help="print the quota plan first")
    construct.set_defaults(handler=cmd_construct)

    verify = sub.add_parser("verify", help="check a labeling JSON file")
    verify.add_argument("file")
    verify.add_argument("--json", action="store_true")
    verify.set_defaults(handler=cmd_verify)

    solve = sub.add_parser("solve", help="exact branch-and-bound optimum")
    _add_triple(solve)
    solve.add_argument("--max-edges", type=int, help="refuse instances with more edges")
    solve.add_argument("--threads", type=int, help="parallel search width")
    solve.add_argument("--no-symmetry", action="store_true", help="disable symmetry pruning")
    solve.add_argument("--no-bound", action="store_true", help="disable bound pruning")
    solve.add_argument("--scan", action="store_true", help="check vertex-weight bounds on the optimum")
    solve.add_argument("--json", action="store_true")
    solve.add_argument("--report", help="also write the JSON report to this file")
    solve.add_argument("--out", help="write the optimal labeling here")
    solve.add_argument("--save", action="store_true", help="write the labeling under data/solver/")
    solve.set_defaults(handler=cmd_solve)

    sweep = sub.add_parser("sweep", help="cross-check closed forms, constructions and the solver")
    scope = sweep.add_mutually_exclusive_group(required=True)
    scope.add_argument("--max-sum", type=int, help="all canonical triples with m+n+p <= S")
    scope.add_argument("--range", help="e.g. m=1..8,n=m..8,p=msum..msum+6")
    sweep.add_argument("--csv", help="write rows here instead of stdout")
    sweep.add_argument("--with-solver", action="store_true")
    sweep.add_argument("--max-edges", type=int, help="solver edge cap")
    sweep.add_argument("--workers", type=int, default=0, help="process pool size")
    sweep.add_argument("--pdf", help="also render the table as PDF")
    sweep.set_defaults(handler=cmd_sweep)

    conjecture = sub.add_parser("conjecture", help="audit gamma <= |V| - 1")
    conjecture.add_argument("--max-sum", type=int, default=30)
    conjecture.add_argument("--all", action="store_true", help="print slack rows too")
    conjecture.add_argument("--pdf")
    conjecture.set_defaults(handler=cmd_conjecture)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    setup_logging(verbose=args.verbose, log_file=args.log_file)
    set_settings(LabSettings.load(args.config))

    try:
        return args.handler(args)
    except SednError as e:
        logger.debug("command %s failed", args.command, exc_info=True)
        print(f"error: {e}", file=sys.stderr)
        return e.exit_code
    except KeyboardInterrupt:
        print("interrupted", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
