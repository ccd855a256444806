"""Command-line interface: ``hilbqdim <subcommand> ...``.

Standard output carries only the result (text, JSON or CSV); progress and
diagnostics go to standard error.  Exit codes: 0 success or PASS, 1 FAIL,
2 usage error, 3 resource guard exceeded.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
import time
from typing import Optional, Sequence

from . import checks
from .charlab import freudenthal
from .errors import (DimensionMismatchError, HilbQdimError, IntegralityError, InvalidLabelError,
                     NotDominantError, ResourceGuardError, UnsupportedError)
from .fock import euler_series
from .oracle import euler_series_oracle
from .qdim import quantum_dimension, quantum_dimension_via_character
from .rootsys import AffineDimVector, build_root_system, dynkin_diagram
from .strata import enumerate_strata, strata_euler

log = logging.getLogger("hilbqdim")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _tuple(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(",") if x != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _dump_json(doc) -> str:
    return json.dumps(doc, sort_keys=True)


def _emit_series(label: str, coeffs: list, fmt: str) -> str:
    if fmt == "json":
        return _dump_json({"gamma": label, "coefficients": coeffs})
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["index", "value"])
        writer.writerows(enumerate(coeffs))
        return buf.getvalue().rstrip("\n")
    return str(coeffs)


def _print_results(results: list[checks.CheckResult]) -> int:
    for r in results:
        print(r.line())
    ok = all(r.passed for r in results)
    print("PASS" if ok else "FAIL")
    return EXIT_OK if ok else EXIT_FAIL


def cmd_rootsystem(args) -> int:
    rs = build_root_system(args.type)
    if args.dump:
        print(_dump_json({
            "type": str(rs.label),
            "rank": rs.rank,
            "cartan": [list(r) for r in rs.cartan],
            "positive_roots": [list(r) for r in rs.positive_roots],
            "h_dual": rs.h_dual,
            "marks": list(rs.affine_marks),
        }))
    else:
        print(f"{rs.label}: rank {rs.rank}, {len(rs.positive_roots)} positive roots, "
              f"h_dual {rs.h_dual}, marks {list(rs.affine_marks)}")
    return EXIT_OK


def cmd_qdim(args) -> int:
    rs = build_root_system(args.type)
    rs._check(args.lam)
    if args.via_character:
        q = quantum_dimension_via_character(rs, args.lam, args.guard)
    else:
        q = quantum_dimension(rs, args.lam)
    if args.format == "json":
        print(_dump_json({"type": str(rs.label), "lambda": list(args.lam),
                          "value": [str(c) for c in q.value.coeffs], "integer": q.as_int}))
    elif q.as_int is not None:
        print(q.as_int)
    else:
        print(f"{q.value!r}  (not a rational integer; z = exp(2 pi i / {rs.m}))")
    return EXIT_OK


def cmd_weights(args) -> int:
    rs = build_root_system(args.type)
    rs._check(args.lam)
    rs._check(args.at)
    print(freudenthal(rs, args.lam, args.guard)[args.at])
    return EXIT_OK


def cmd_verify_theorem2(args) -> int:
    if args.all == bool(args.type):
        raise UsageError("give exactly one of --type or --all")
    labels = checks.ALL_TYPES if args.all else [str(build_root_system(args.type).label)]
    return _print_results(checks.l_fundamental_sums(labels))


def cmd_euler_series(args) -> int:
    rs = build_root_system(args.gamma)
    if args.order < 0:
        raise UsageError("--order must be nonnegative")
    t0 = time.perf_counter()
    log.info("enumerating %s lattice to norm %d with %d job(s)", rs.label, args.order, args.jobs)
    coeffs = euler_series(rs, args.order, jobs=args.jobs).tolist()
    log.info("done in %.1f s", time.perf_counter() - t0)
    print(_emit_series(str(rs.label), coeffs, args.format))
    return EXIT_OK


def _stratum_doc(rs, s) -> dict:
    return {
        "v_prime": list(s.v_prime.vertex_vector(rs)),
        "m_prime": list(s.v_prime.finite_part),
        "v_slice": list(s.v_slice),
        "w_slice": list(s.w_slice),
        "dimension": s.dimension,
        "chi_s": s.chi_s,
    }


def cmd_strata(args) -> int:
    rs = build_root_system(args.gamma)
    if args.n < 0:
        raise UsageError("--n must be nonnegative")
    if args.enumerate_only:
        strata = enumerate_strata(rs, AffineDimVector.n_delta(rs, args.n))
        total = None
    else:
        strata = strata_euler(rs, args.n, args.guard)
        total = sum(s.chi_s for s in strata)
    docs = [_stratum_doc(rs, s) for s in strata]
    if args.format == "json":
        print(_dump_json({"gamma": str(rs.label), "n": args.n, "strata": docs, "total": total}))
    else:
        for d in docs:
            print(f"v'={d['v_prime']} v^s={d['v_slice']} w^s={d['w_slice']} "
                  f"dim={d['dimension']} chi^s={d['chi_s']}")
        print(f"total {total}")
    return EXIT_OK


def cmd_oracle(args) -> int:
    if args.cyclic < 1 or args.n < 0:
        raise UsageError("need --cyclic >= 1 and --n >= 0")
    coeffs = euler_series_oracle(args.cyclic, args.n).tolist()
    print(_emit_series(f"Z/{args.cyclic}", coeffs, args.format))
    return EXIT_OK


def cmd_oracle_compare(args) -> int:
    if args.cyclic < 2 or args.n < 0:
        raise UsageError("need --cyclic >= 2 and --n >= 0")
    rs = build_root_system(f"A{args.cyclic - 1}")
    a = euler_series(rs, args.n, jobs=args.jobs).tolist()
    b = euler_series_oracle(args.cyclic, args.n).tolist()
    results = [checks.CheckResult(f"n={i}: character {x}, fixed points {y}", x == y)
               for i, (x, y) in enumerate(zip(a, b))]
    return _print_results(results)


def cmd_verify_all(args) -> int:
    orders = {label: (10 if label == "E8" else 15) for label in checks.ALL_TYPES}
    suites = [
        ("quantum dimensions", checks.quantum_dimension_values),
        ("l-fundamental sums", checks.l_fundamental_sums),
        ("type A vs fixed points", checks.type_a_fixed_points),
        ("integrality", lambda: checks.integrality(orders)),
        ("strata", checks.strata_cross_path),
        ("small multiplicities", checks.sl2_and_a3_multiplicities),
        ("path equality", checks.path_equality),
        ("zeta integers", checks.zeta_integer_identities),
    ]
    results = []
    for name, fn in suites:
        t0 = time.perf_counter()
        log.info("running %s", name)
        part = fn()
        log.info("%s: %s in %.1f s", name, "ok" if all(r.passed for r in part) else "FAILED",
                 time.perf_counter() - t0)
        results.extend(part)
    return _print_results(results)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--guard", type=int, default=None,
                        help="dimension guard override (default: HILBQDIM_GUARD or built-in)")
    common.add_argument("--jobs", type=int, default=1, help="worker processes for lattice enumeration")
    common.add_argument("--print-numbering", action="store_true",
                        help="print the Dynkin diagram with vertex numbers and exit")
    common.add_argument("-q", "--quiet", action="store_true", help="suppress progress on stderr")

    parser = _Parser(prog="hilbqdim", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("rootsystem", parents=[common], help="root-system data")
    p.add_argument("--type", required=True)
    p.add_argument("--dump", action="store_true", help="emit JSON")
    p.set_defaults(func=cmd_rootsystem, label_attr="type")

    p = sub.add_parser("qdim", parents=[common], help="quantum dimension of V(lambda)")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda", dest="lam", type=_tuple, required=True,
                   help="highest weight in fundamental coordinates, e.g. 2,0,0,0,0,0,0")
    p.add_argument("--via-character", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.set_defaults(func=cmd_qdim, label_attr="type")

    p = sub.add_parser("weights", parents=[common], help="weight multiplicity in V(lambda)")
    p.add_argument("--type", required=True)
    p.add_argument("--lambda", dest="lam", type=_tuple, required=True)
    p.add_argument("--at", type=_tuple, required=True)
    p.set_defaults(func=cmd_weights, label_attr="type")

    p = sub.add_parser("verify-theorem2", parents=[common],
                       help="l-fundamental quantum dimensions all equal 1")
    p.add_argument("--type")
    p.add_argument("--all", action="store_true")
    p.set_defaults(func=cmd_verify_theorem2, label_attr="type")

    p = sub.add_parser("euler-series", parents=[common], help="Euler numbers of Hilb^n(C^2/Gamma)")
    p.add_argument("--gamma", required=True)
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_euler_series, label_attr="gamma")

    p = sub.add_parser("strata", parents=[common], help="strata of Hilb^n(C^2/Gamma)")
    p.add_argument("--gamma", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--enumerate-only", action="store_true", help="skip the Euler-number recursion")
    p.set_defaults(func=cmd_strata, label_attr="gamma")

    p = sub.add_parser("oracle", parents=[common], help="fixed-point count for Z/k")
    p.add_argument("--cyclic", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=["text", "json", "csv"], default="text")
    p.set_defaults(func=cmd_oracle, label_attr=None)

    p = sub.add_parser("oracle-compare", parents=[common], help="character vs fixed-point count")
    p.add_argument("--cyclic", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_oracle_compare, label_attr=None)

    p = sub.add_parser("verify-all", parents=[common], help="run every reproduction check")
    p.set_defaults(func=cmd_verify_all, label_attr=None)
    return parser


def dispatch(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except UsageError as exc:
        print(f"hilbqdim: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:  # --help
        return int(exc.code or 0)

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter("%(message)s"))
    log.addHandler(handler)
    log.setLevel(logging.WARNING if args.quiet else logging.INFO)
    log.propagate = False
    try:
        if args.print_numbering:
            label = getattr(args, args.label_attr, None) if args.label_attr else None
            if label is None and args.command in ("oracle", "oracle-compare"):
                label = f"A{max(args.cyclic - 1, 1)}"
            if label is None:
                raise UsageError("--print-numbering needs a root-system label")
            print(dynkin_diagram(label), end="")
            return EXIT_OK
        if args.jobs < 1:
            raise UsageError("--jobs must be positive")
        return args.func(args)
    except (UsageError, InvalidLabelError, DimensionMismatchError, NotDominantError,
            UnsupportedError) as exc:
        print(f"hilbqdim: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ResourceGuardError as exc:
        print(f"hilbqdim: resource guard: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except IntegralityError as exc:
        print(f"hilbqdim: integrality failure: {exc}", file=sys.stderr)
        return EXIT_FAIL
    except HilbQdimError as exc:
        print(f"hilbqdim: {exc}", file=sys.stderr)
        return EXIT_FAIL
    finally:
        log.removeHandler(handler)


def main() -> None:
    sys.exit(dispatch())


if __name__ == "__main__":
    main()
