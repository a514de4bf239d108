"""Command-line entry point.

Subcommands run the verification suites over an algebra file:

  validate FILE           presentation invariants (degrees, antisymmetry,
                          Jacobi, Leibniz, d^2 = 0, nilpotency class)
  crossed FILE            build the crossed module, run the axiom suite
  classify FILE           simplicial identities of the classifying space
  realize FILE            realization invariants and the twisting suite
  theorem FILE            the full level-wise isomorphism suite
  ls-interval             d^2 = 0 in the interval model

Exit status: 0 all checks pass, 1 some check failed, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .algebra import Presentation, validate_presentation
from .crossed import crossed_from_cdgl
from .errors import CdglError
from .groups import build_perp_table, two_type_reduce
from .interval import ls_interval_check
from .realization import Realization
from .reports import SuiteReport
from .serialization import load_presentation
from .simplicial import check_simplicial_identities, check_twisting

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_INPUT = 2
MAX_WITNESSES = 5


def _print_report(report: SuiteReport) -> None:
    print(report.summary())
    for failure in report.failures[:MAX_WITNESSES]:
        print("    FAIL %-20s %s  %s" % (failure.kind, failure.witness, failure.detail))
    extra = len(report.failures) - MAX_WITNESSES
    if extra > 0:
        print("    ... and %d more failures" % extra)


def _finish(args, command: str, source: str, reports: list[SuiteReport]) -> int:
    ok = all(r.ok for r in reports)
    for r in reports:
        _print_report(r)
    if getattr(args, "report", None):
        doc = {
            "tool": "cdgl %s" % __version__,
            "command": command,
            "input": source,
            "ok": ok,
            "reports": [r.to_dict() for r in reports],
        }
        with open(args.report, "w") as fh:
            json.dump(doc, fh, indent=2, sort_keys=True)
            fh.write("\n")
    print("result: %s" % ("ok" if ok else "FAILED"))
    return EXIT_OK if ok else EXIT_FAIL


def _load_validated(path: str) -> tuple[Presentation, list[SuiteReport]]:
    """Load an algebra file and insist it is a well-formed cdgl; a
    malformed algebra is an input error for the downstream suites."""
    p = load_presentation(path)
    report = validate_presentation(p)
    if not report.ok:
        first = report.failures[0]
        raise CdglError(
            "%s is not a valid presentation: %s at %s" % (path, first.kind, first.witness)
        )
    return p, [report]


def _reduce_if_needed(p: Presentation, reports: list[SuiteReport]) -> Presentation:
    degrees = p.degrees_present()
    if degrees <= {0, 1}:
        return p
    if min(degrees) < 0:
        raise CdglError("negative degrees are outside the scope of this construction")
    reduced, _qmap = two_type_reduce(p)
    print(
        "note: input has generators above degree 1; working with its 2-type quotient (%d generators)"
        % len(reduced.generators)
    )
    return reduced


def _realization(p: Presentation, samples: int, seed: int) -> Realization:
    table = build_perp_table(p.bracket_bound())
    crossed = crossed_from_cdgl(p, table, samples=min(samples, 25), seed=seed)
    return Realization(crossed)


def cmd_validate(args) -> int:
    p = load_presentation(args.file)
    report = validate_presentation(p)
    return _finish(args, "validate", args.file, [report])


def cmd_crossed(args) -> int:
    p, reports = _load_validated(args.file)
    p = _reduce_if_needed(p, reports)
    table = build_perp_table(p.bracket_bound())
    crossed = crossed_from_cdgl(p, table, samples=10, seed=args.seed)
    reports.append(crossed.axiom_report(samples=args.samples, seed=args.seed))
    return _finish(args, "crossed", args.file, reports)


def cmd_classify(args) -> int:
    p, reports = _load_validated(args.file)
    p = _reduce_if_needed(p, reports)
    r = _realization(p, args.samples, args.seed)
    reports.append(
        check_simplicial_identities(
            r.nerve.face,
            r.nerve.degeneracy,
            r.nerve.eq,
            r.nerve.random_element,
            args.level,
            args.samples,
            seed=args.seed,
            suite="nerve-identities",
        )
    )
    reports.append(
        check_simplicial_identities(
            r.wbar.face,
            r.wbar.degeneracy,
            r.wbar.eq,
            r.wbar.random_element,
            args.level,
            args.samples,
            seed=args.seed,
            suite="classifying-identities",
        )
    )
    return _finish(args, "classify", args.file, reports)


def cmd_realize(args) -> int:
    p, reports = _load_validated(args.file)
    p = _reduce_if_needed(p, reports)
    r = _realization(p, args.samples, args.seed)
    rng = random.Random(args.seed)
    invariants = SuiteReport("realization-invariants", seed=args.seed)
    for level in range(1, args.level + 1):
        for sample in range(args.samples):
            x = r.random_simplex(level, rng)
            invariants.merge(r.validate_simplex(x))
    reports.append(invariants)
    reports.append(
        check_simplicial_identities(
            r.face,
            r.degeneracy,
            r.eq,
            r.random_simplex,
            args.level,
            args.samples,
            seed=args.seed,
            suite="realization-identities",
        )
    )
    reports.append(
        check_twisting(
            r.twisting(), r.random_simplex, args.level, args.samples, seed=args.seed
        )
    )
    reports.append(
        r.triangle_differential_check(level=min(args.level, 3), samples=args.samples, seed=args.seed)
    )
    return _finish(args, "realize", args.file, reports)


def cmd_theorem(args) -> int:
    p, reports = _load_validated(args.file)
    p = _reduce_if_needed(p, reports)
    r = _realization(p, args.samples, args.seed)
    rng = random.Random(args.seed)
    suite = SuiteReport("levelwise-isomorphism", seed=args.seed)
    for level in range(1, args.level + 1):
        for sample in range(args.samples):
            witness = "level %d sample %d" % (level, sample)
            x = r.random_simplex(level, rng)
            image = r.phi(x)
            suite.record(r.eq(r.phi_inverse(image), x), "injective-round-trip", witness)
            for i in range(level + 1):
                suite.record(
                    r.wbar.eq(r.phi(r.face(i, x)), r.wbar.face(i, image)),
                    "face-%d" % i,
                    witness,
                )
                suite.record(
                    r.wbar.eq(r.phi(r.degeneracy(i, x)), r.wbar.degeneracy(i, image)),
                    "degeneracy-%d" % i,
                    witness,
                )
            w = r.wbar.random_element(level, rng)
            suite.record(
                r.wbar.eq(r.phi(r.phi_inverse(w)), w), "surjective-round-trip", witness
            )
    reports.append(suite)
    return _finish(args, "theorem", args.file, reports)


def cmd_ls_interval(args) -> int:
    report, series = ls_interval_check(args.order)
    print("d a01 through bracket length %d:" % args.order)
    print("  %s" % series.format())
    return _finish(args, "ls-interval", "order %d" % args.order, [report])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="cdgl",
        description="Exact verification suites for degree-{0,1} cdgl constructions.",
    )
    parser.add_argument("--version", action="version", version="cdgl %s" % __version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, level_default=3, samples_default=25):
        sp.add_argument("file", help="algebra definition (.alg JSON)")
        if level_default is not None:
            sp.add_argument("--level", type=int, default=level_default, help="top simplicial level")
        sp.add_argument("--samples", type=int, default=samples_default, help="random samples per check")
        sp.add_argument("--seed", type=int, default=0, help="random seed")
        sp.add_argument("--report", help="write a machine-readable JSON report here")

    sp = sub.add_parser("validate", help="check presentation invariants")
    sp.add_argument("file")
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_validate)

    sp = sub.add_parser("crossed", help="crossed-module axiom suite")
    common(sp, level_default=None, samples_default=200)
    sp.set_defaults(func=cmd_crossed)

    sp = sub.add_parser("classify", help="classifying-space simplicial identities")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("realize", help="realization invariants and twisting suite")
    common(sp)
    sp.set_defaults(func=cmd_realize)

    sp = sub.add_parser("theorem", help="level-wise isomorphism suite")
    common(sp)
    sp.set_defaults(func=cmd_theorem)

    sp = sub.add_parser("ls-interval", help="interval model d^2 = 0 check")
    sp.add_argument("--order", type=int, default=6, help="bracket-length truncation")
    sp.add_argument("--report")
    sp.set_defaults(func=cmd_ls_interval)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CdglError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
