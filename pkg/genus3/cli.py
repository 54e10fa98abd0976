import argparse
import logging
import sys
from pathlib import Path
from typing import List, Optional

from genus3.config import settings
from genus3.schemas import TABLE_IDS, ProjBundleModel
from genus3.services import chowcurve, classify, oracle, surflat
from genus3.services.fixtures import default_fixture_path, load_fixture
from genus3.services.reports import (
    FORMATS,
    render_enumeration,
    render_oracle,
    render_records,
    render_verification,
)
from genus3.services.verification import verify


EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _add_format(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default=settings.report_format,
                        help=f"Report format (default: {settings.report_format})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genus3",
        description="Invariants and classification tables of polarized manifolds of sectional genus three.")
    parser.add_argument("--verbose", action="store_true", help="Log rule decisions at DEBUG level")
    commands = parser.add_subparsers(dest="command", required=True)

    invariants = commands.add_parser("invariants", help="d, g, s of 2H + bF on P(E) as JSON")
    invariants.add_argument("--base-genus", type=int, default=0)
    invariants.add_argument("--rank", type=int, default=None,
                            help="Rank of E (3 with --veronese)")
    invariants.add_argument("--c1", type=int, required=True)
    invariants.add_argument("--b", type=int, required=True)
    invariants.add_argument("--veronese", action="store_true",
                            help="Treat 2H + bF as the polarization of a Veronese fibration")

    enumerate_ = commands.add_parser("enumerate", help="Hyperquadric fibration candidates of degree d")
    enumerate_.add_argument("--d", type=int, required=True)
    enumerate_.add_argument("--n-min", type=int, default=None)
    enumerate_.add_argument("--n-max", type=int, default=None)
    enumerate_.add_argument("--rules", default="default",
                            help="'default' or a comma-separated list of rule tags")
    _add_format(enumerate_)

    verify_ = commands.add_parser("verify", help="Recompute a table and diff it against a fixture")
    verify_.add_argument("--table", choices=TABLE_IDS, required=True)
    verify_.add_argument("--fixture", type=Path, default=None,
                         help="Fixture path (default: the packaged fixture for the table)")
    _add_format(verify_)

    selftest = commands.add_parser("oracle-selftest", help="Closed forms vs ring vs sympy oracle")
    _add_format(selftest)

    for name, help_text in (("branches", "The six adjunction branches"),
                            ("veronese", "Veronese fibration solutions"),
                            ("reductions", "Reduction tuples and the Veronese blow-up bound"),
                            ("deltas", "Delta-genus bounds of the nef-adjoint branch"),
                            ("deg-t", "deg T rows on the elliptic ruled surface")):
        _add_format(commands.add_parser(name, help=help_text))
    return parser


def _invariants(args: argparse.Namespace) -> int:
    if args.veronese:
        bundle = ProjBundleModel.over_curve(args.base_genus, args.rank or 3, args.c1)
        result = chowcurve.veronese_invariants(bundle, args.b)
    else:
        if args.rank is None:
            raise ValueError("--rank is required unless --veronese is given")
        bundle = ProjBundleModel.over_curve(args.base_genus, args.rank, args.c1)
        result = chowcurve.quadric_invariants(bundle, args.b)
    sys.stdout.write(result.model_dump_json() + "\n")
    return EXIT_OK


def _enumerate(args: argparse.Namespace) -> int:
    default_min, default_max = classify.default_n_range(args.d)
    n_range = (args.n_min if args.n_min is not None else default_min,
               args.n_max if args.n_max is not None else default_max)
    rules = classify.parse_rules(args.rules, args.d)
    result = classify.enumerate_quadric_splittings(args.d, n_range=n_range, rules=rules)
    sys.stdout.write(render_enumeration(result, args.format))
    return EXIT_OK


def _verify(args: argparse.Namespace) -> int:
    rows = load_fixture(args.fixture or default_fixture_path(args.table))
    report = verify(args.table, rows)
    sys.stdout.write(render_verification(report, args.format))
    return EXIT_FAILED if report.exit_status else EXIT_OK


def _oracle_selftest(args: argparse.Namespace) -> int:
    report = oracle.oracle_selftest()
    sys.stdout.write(render_oracle(report, args.format))
    return EXIT_FAILED if report.exit_status else EXIT_OK


def _deltas(args: argparse.Namespace) -> int:
    bounds = classify.delta_bounds()
    if args.format == 'json':
        sys.stdout.write(bounds.model_dump_json(indent=2) + "\n")
        return EXIT_OK
    title = (f"d in [{bounds.d_range[0]}, {bounds.d_range[1]}]; "
             f"double cover branch degree {bounds.double_cover_branch_degree}; "
             f"(deg rho, w) in {bounds.degree_factorizations}")
    sys.stdout.write(render_records(bounds.notes, args.format, title=title))
    return EXIT_OK


def _deg_t(args: argparse.Namespace) -> int:
    view = surflat.deg_t_view()
    if args.format == 'json':
        sys.stdout.write(view.model_dump_json(indent=2) + "\n")
        return EXIT_OK
    bound = view.rank_bound
    title = (f"scrolls over (P^2, O({bound.degree})): A.l = {bound.A_dot_line}, "
             f"rank E <= {bound.max_rank}")
    sys.stdout.write(render_records(view.rows, args.format, title=title))
    return EXIT_OK


def _records(args: argparse.Namespace) -> int:
    if args.command == "branches":
        records = classify.branch_map()
    elif args.command == "veronese":
        records = classify.veronese_solutions()
    else:
        records = [classify.reduction_tuples()]
    sys.stdout.write(render_records(records, args.format))
    return EXIT_OK


HANDLERS = {
    "invariants": _invariants,
    "enumerate": _enumerate,
    "verify": _verify,
    "oracle-selftest": _oracle_selftest,
    "branches": _records,
    "veronese": _records,
    "reductions": _records,
    "deltas": _deltas,
    "deg-t": _deg_t,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else settings.log_level,
                        stream=sys.stderr)
    try:
        return HANDLERS[args.command](args)
    except ValueError as e:
        sys.stderr.write(f"[error] {e}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
