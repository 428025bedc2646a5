"""Command-line entry point: ``analyze``, ``quote`` and ``adoption-curve``.

Exit codes: 0 success, 1 parse or validation error, 2 file I/O error.
"""

from __future__ import annotations

import argparse
import logging
import sys

from .errors import EntireTrainError, ScenarioIOError
from .scenario import (
    analyze,
    emit_adoption_csv,
    format_table,
    load_scenario,
    quote,
    write_report_json,
)

EXIT_OK, EXIT_INVALID, EXIT_IO = 0, 1, 2


class _Parser(argparse.ArgumentParser):
    # bad arguments are invalid input, not I/O failures
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INVALID, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="entiretrain",
        description="Entire-train discount analysis for rail shipments.",
    )
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("analyze", help="analyze every shipment in a scenario")
    p.add_argument("--scenario", required=True)
    p.add_argument("--out", help="write the JSON report here")
    p.add_argument("--workers", type=int, default=None, help="analyze shipments in parallel")

    p = sub.add_parser("quote", help="surpluses for one shipment at a given discount")
    p.add_argument("--scenario", required=True)
    p.add_argument("--shipment", required=True)
    p.add_argument("--beta", type=float, required=True)

    p = sub.add_parser("adoption-curve", help="portfolio acceptance over a discount grid")
    p.add_argument("--scenario", required=True)
    p.add_argument("--beta-min", type=float, required=True)
    p.add_argument("--beta-max", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--out", required=True)
    return parser


def _run(args) -> None:
    scenario = load_scenario(args.scenario)
    if args.command == "analyze":
        reports = analyze(scenario, max_workers=args.workers)
        print(format_table(reports))
        if args.out:
            write_report_json(reports, args.out)
    elif args.command == "quote":
        q = quote(scenario, args.shipment, args.beta)
        print(f"shipment      {q['shipment_id']}")
        print(f"beta          {q['beta']:.6f}")
        print(f"dE            {q['de_total']:,.2f}")
        print(f"P             {q['price']:,.2f}")
        print(f"C_inventory   {q['c_inventory']:,.2f}")
        print(f"dH            {q['dh']:,.2f}")
        print(f"dR            {q['dr']:,.2f}")
        print(f"case          {q['case_label']}")
    else:
        points = emit_adoption_csv(
            scenario, args.beta_min, args.beta_max, args.steps, args.out
        )
        best = max(points, key=lambda p: p.win_win_fraction)
        print(
            f"wrote {len(points)} rows to {args.out}; "
            f"peak win-win {best.win_win_fraction:.3f} at beta={best.beta:.5f}"
        )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.ERROR,
        format="%(levelname)s %(name)s: %(message)s",
    )
    try:
        _run(args)
    except ScenarioIOError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO
    except EntireTrainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
