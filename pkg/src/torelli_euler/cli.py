"""Command-line front end.

Exit codes: 0 when everything requested passed or computed, 1 when any
check failed or was inconclusive (including cache validation failures),
2 on usage errors.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .bernoulli import (
    BernoulliTable,
    CacheError,
    CapacityError,
    bernoulli_table,
    load_table,
    persist_table,
)
from .certify import (
    Inconclusive,
    certify_non_integrality,
    scan,
    threshold_for_n,
)
from .euler_char import (
    EmnQuery,
    TORELLI_FORMULA_NOTE,
    chi_torelli,
    e_mn,
    euler_moduli,
    euler_siegel_quotient,
)
from .render import (
    bound_sequence_to_json,
    certificate_text,
    certificate_to_json,
    dumps,
    format_rational,
    rational_to_json,
)
from .verify import report_to_json, run_verification_suite

CACHE_ENV_VAR = "TORELLI_EULER_CACHE"


def _positive_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def _nonnegative_int(text: str) -> int:
    value = int(text)
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected a nonnegative integer, got {text}")
    return value


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--cache",
        default=os.environ.get(CACHE_ENV_VAR),
        help=f"Bernoulli table cache file (default: ${CACHE_ENV_VAR})",
    )
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--digits", type=_positive_int, default=12, help="decimal digits in text output"
    )
    parser.add_argument(
        "--precision", type=_positive_int, default=128, help="interval precision in bits"
    )


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="torelli-euler",
        description=(
            "Exact zeta values, Bernoulli numbers, orbifold Euler characteristics, "
            "and machine-checkable non-integrality certificates for e(m,n)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bernoulli", help="exact Bernoulli numbers B_0..B_2K")
    p.add_argument("--max-k", type=_nonnegative_int, required=True, metavar="K")
    p.add_argument(
        "--algorithm",
        choices=("seidel", "akiyama-tanigawa", "both"),
        default="seidel",
    )
    _add_common(p)

    p = sub.add_parser("zeta", help="exact zeta(1-2K) plus decimal")
    p.add_argument("--k", type=_positive_int, required=True)
    _add_common(p)

    p = sub.add_parser("chi", help="orbifold Euler characteristics")
    p.add_argument("--space", choices=("siegel", "moduli", "torelli"), required=True)
    p.add_argument("-g", type=_positive_int, required=True)
    p.add_argument("-n", type=_nonnegative_int, default=0)
    _add_common(p)

    p = sub.add_parser("emn", help="exact e(m,n)")
    p.add_argument("-m", type=_positive_int, required=True)
    p.add_argument("-n", type=_positive_int, required=True)
    _add_common(p)

    p = sub.add_parser("certify", help="non-integrality certificate for e(m,n)")
    p.add_argument("-m", type=_positive_int, required=True)
    p.add_argument("-n", type=_positive_int, required=True)
    p.add_argument("--strategy", choices=("auto", "exact", "bound"), default="auto")
    _add_common(p)

    p = sub.add_parser("threshold", help="certified bound threshold for fixed n")
    p.add_argument("-n", type=_positive_int, required=True)
    p.add_argument("--m-cap", type=_positive_int, default=64)
    _add_common(p)

    p = sub.add_parser("scan", help="certificates over a grid of (m, n)")
    p.add_argument("--m-min", type=_positive_int, required=True)
    p.add_argument("--m-max", type=_positive_int, required=True)
    p.add_argument("--n-min", type=_positive_int, required=True)
    p.add_argument("--n-max", type=_positive_int, required=True)
    p.add_argument("--strategy", choices=("auto", "exact", "bound"), default="exact")
    _add_common(p)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--deep", action="store_true", help="extend the scan to m = 1470")
    _add_common(p)

    return parser


def _obtain_table(
    required: int, cache: str | None, algorithm: str = "seidel"
) -> BernoulliTable:
    """Load the cache when it suffices, otherwise build and persist."""
    if cache is None:
        return bernoulli_table(required, algorithm)
    path = Path(cache)
    if path.exists():
        table = load_table(path)
        if table.max_index >= required and (
            algorithm == "seidel" or table.algorithm == algorithm
        ):
            return table
    table = bernoulli_table(required, algorithm)
    persist_table(table, path)
    return table


def _cmd_bernoulli(args: argparse.Namespace) -> int:
    max_index = 2 * args.max_k
    if args.algorithm == "both":
        table = _obtain_table(max_index, args.cache)
        other = bernoulli_table(max_index, "akiyama-tanigawa")
        agreement = table.values == other.values
    else:
        table = _obtain_table(max_index, args.cache, args.algorithm)
        other = None
        agreement = None
    if args.format == "json":
        payload = {
            "max_index": table.max_index,
            "algorithm": table.algorithm,
            "convention": table.convention,
            "values": [
                {"n": n, "value": rational_to_json(table.values[n])}
                for n in range(table.max_index + 1)
                if n < 2 or n % 2 == 0
            ],
        }
        if agreement is not None:
            payload["agreement"] = agreement
        print(dumps(payload))
    else:
        for n in range(table.max_index + 1):
            if n >= 3 and n % 2 == 1:
                continue
            print(f"B_{n} = {format_rational(table.values[n], args.digits)}")
        if agreement is not None:
            print(f"agreement between algorithms: {'yes' if agreement else 'NO'}")
    if agreement is False:
        return 1
    return 0


def _cmd_zeta(args: argparse.Namespace) -> int:
    from .zeta_special import zeta_one_minus_2k

    table = _obtain_table(2 * args.k, args.cache)
    zeta = zeta_one_minus_2k(args.k, table)
    if args.format == "json":
        print(dumps({"k": zeta.k, "value": rational_to_json(zeta.value)}))
    else:
        print(f"zeta(1-2k) for k={args.k}: {format_rational(zeta.value, args.digits)}")
    return 0


def _cmd_chi(args: argparse.Namespace) -> int:
    if args.g < 2:
        raise ValueError("reported spaces need genus g >= 2")
    if args.space == "siegel" and args.n != 0:
        raise ValueError("the Siegel quotient carries no marked points")
    table = _obtain_table(2 * args.g, args.cache)
    if args.space == "siegel":
        result = euler_siegel_quotient(args.g, table)
    elif args.space == "moduli":
        result = euler_moduli(args.g, args.n, table)
    else:
        result = chi_torelli(args.g, args.n, table)
    note = TORELLI_FORMULA_NOTE if args.space == "torelli" else None
    if args.format == "json":
        payload = {
            "space": result.space.kind,
            "g": result.space.g,
            "n": result.space.n,
            "value": rational_to_json(result.value),
        }
        if note:
            payload["note"] = note
        print(dumps(payload))
    else:
        label = f"{result.space.kind} (g={result.space.g}, n={result.space.n})"
        print(f"{label}: {format_rational(result.value, args.digits)}")
        if note:
            print(f"note: {note}")
    return 0


def _cmd_emn(args: argparse.Namespace) -> int:
    table = _obtain_table(2 * args.m, args.cache)
    value = e_mn(EmnQuery(args.m, args.n), table)
    if args.format == "json":
        print(dumps({"m": args.m, "n": args.n, "value": rational_to_json(value)}))
    else:
        print(f"e({args.m},{args.n}) = {format_rational(value, args.digits)}")
    return 0


def _cmd_certify(args: argparse.Namespace) -> int:
    table = None
    if args.strategy == "exact" or (args.strategy == "auto" and args.m <= 200):
        table = _obtain_table(2 * args.m, args.cache)
    cert = certify_non_integrality(
        args.m, args.n, args.strategy, table, precision=args.precision
    )
    if args.format == "json":
        payload = certificate_to_json(cert)
        payload.update({"m": args.m, "n": args.n})
        print(dumps(payload))
    else:
        print(f"e({args.m},{args.n}): {certificate_text(cert, args.digits)}")
    return 1 if isinstance(cert, Inconclusive) else 0


def _cmd_threshold(args: argparse.Namespace) -> int:
    result = threshold_for_n(args.n, m_cap=args.m_cap, precision=args.precision)
    if args.format == "json":
        print(
            dumps(
                {
                    "n": result.n,
                    "m_cap": result.m_cap,
                    "m_found": result.m_found,
                    "chain": [bound_sequence_to_json(seq) for seq in result.chain],
                }
            )
        )
    elif result.found:
        print(
            f"threshold for n={args.n}: m0 = {result.m_found} "
            f"(bound and ratio certified below 1 through m = {args.m_cap})"
        )
    else:
        print(f"threshold for n={args.n}: not found below cap {args.m_cap}")
    return 0 if result.found else 1


def _cmd_scan(args: argparse.Namespace) -> int:
    table = None
    if args.strategy in ("exact", "auto"):
        table = _obtain_table(2 * args.m_max, args.cache)
    points = scan(
        (args.m_min, args.m_max),
        (args.n_min, args.n_max),
        args.strategy,
        table,
        precision=args.precision,
    )
    any_inconclusive = False
    if args.format == "json":
        rows = []
        for point in points:
            cert = certificate_to_json(point.certificate)
            row = {"m": point.m, "n": point.n, "certificate": cert}
            if point.preferred_witness is not None:
                row["preferred_witness"] = point.preferred_witness
            rows.append(row)
            any_inconclusive |= isinstance(point.certificate, Inconclusive)
        print(dumps({"strategy": args.strategy, "points": rows}))
    else:
        for point in points:
            flag = ""
            if point.preferred_witness is True:
                flag = " [691/3617]"
            print(
                f"m={point.m} n={point.n}: "
                f"{certificate_text(point.certificate, args.digits)}{flag}"
            )
            any_inconclusive |= isinstance(point.certificate, Inconclusive)
    return 1 if any_inconclusive else 0


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    mode = "deep" if args.deep else "standard"
    echo = print if args.format == "text" else None
    report = run_verification_suite(mode, cache_path=args.cache, echo=echo)
    if args.format == "json":
        print(dumps(report_to_json(report)))
    else:
        summary = report.summary
        print(
            f"summary: {summary['pass']} pass, {summary['fail']} fail, "
            f"{summary['inconclusive']} inconclusive (mode={report.mode})"
        )
    return 0 if report.passed else 1


_HANDLERS = {
    "bernoulli": _cmd_bernoulli,
    "zeta": _cmd_zeta,
    "chi": _cmd_chi,
    "emn": _cmd_emn,
    "certify": _cmd_certify,
    "threshold": _cmd_threshold,
    "scan": _cmd_scan,
    "verify-paper": _cmd_verify_paper,
}


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return _HANDLERS[args.command](args)
    except CacheError as exc:
        print(f"cache error: {exc}", file=sys.stderr)
        return 1
    except CapacityError as exc:
        print(f"capacity error: {exc}", file=sys.stderr)
        return 1
    except ValueError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return 2


def console_entry() -> None:
    sys.exit(main())
