"""Batch front end: analyze single instances, verify corpora, fuzz, replay
built-in examples.

Exit codes: 0 success, 1 input error, 2 partial report (a fit did not
stabilize), 3 theorem violation or example mismatch.  Reports are
byte-deterministic for a fixed configuration.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from math import comb

from . import formats
from .closures import _is_prime
from .errors import HilbcloseError
from .hilbert import FiltrationKind, coefficient_report, multiplicity_volume
from .ideals import ParameterIdeal
from .theorems import fuzz_corpus, verify_instances

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_PARTIAL = 2
EXIT_VIOLATION = 3

REPORT_FORMATS = ("json", "csv", "table")


@dataclass
class RunConfig:
    command: str
    ring_path: str | None = None
    ideal_path: str | None = None
    corpus_path: str | None = None
    n_max: int = 10
    characteristic: int | None = None
    e_max: int = 4
    seed: int = 0
    count: int = 0
    max_coord: int = 6
    report: str = "json"
    out: str | None = None
    example_name: str | None = None

    def __post_init__(self):
        if self.n_max < 5:
            raise ValueError("n-max must be at least 5")
        if self.characteristic is not None and not _is_prime(self.characteristic):
            raise ValueError("characteristic must be prime")
        if self.report not in REPORT_FORMATS:
            raise ValueError("report format must be one of %s" % (REPORT_FORMATS,))


def _emit(text, out_path):
    if out_path:
        with open(out_path, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_json(path, what):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise formats.FormatError("cannot read %s file %r: %s" % (what, path, exc))
    except json.JSONDecodeError as exc:
        raise formats.FormatError(
            "%s file %r: line %d column %d: %s"
            % (what, path, exc.lineno, exc.colno, exc.msg))


def run_analyze(config):
    try:
        ring = formats.ring_from_record(_load_json(config.ring_path, "ring"))
        record = _load_json(config.ideal_path, "ideal")
        gens, _ = formats.ideal_from_record(record, ring)
        q = ParameterIdeal(ring, gens)
    except (HilbcloseError, ValueError) as exc:
        sys.stderr.write("input error [%s]: %s\n"
                         % (getattr(exc, "code", "INVALID"), exc))
        return EXIT_INPUT
    bundle = coefficient_report(ring, q, n_max=config.n_max,
                                characteristic=config.characteristic,
                                e_max=config.e_max)
    report = formats.bundle_to_report(bundle, ring, record)
    if ring.is_free and ring.dim <= 2:
        report["multiplicity_volume"] = multiplicity_volume(q.base)
    if config.report == "json":
        _emit(formats.dumps_report(report), config.out)
    elif config.report == "csv":
        _emit(formats.bundle_to_csv(bundle), config.out)
    else:
        _emit(formats.bundle_to_table(bundle), config.out)
    partial = any(rep.status != "ok" for rep in bundle.reports.values())
    return EXIT_PARTIAL if partial else EXIT_OK


def _run_verification(config, instances, params, command):
    summary = verify_instances(instances, n_max=config.n_max,
                               characteristic=config.characteristic,
                               e_max=config.e_max)
    report = formats.summary_to_report(summary, command, params)
    _emit(formats.dumps_report(report), config.out)
    if summary.violations:
        repro = formats.reproducer_record(summary.violations[0])
        path = (config.out or "violation") + ".reproducer.json"
        with open(path, "w") as fh:
            json.dump(repro, fh, sort_keys=True, indent=2)
            fh.write("\n")
        sys.stderr.write("theorem violation: reproducer written to %s\n" % path)
        return EXIT_VIOLATION
    return EXIT_OK


def run_verify(config):
    try:
        instances = formats.corpus_from_record(_load_json(config.corpus_path, "corpus"))
    except (HilbcloseError, ValueError) as exc:
        sys.stderr.write("input error [%s]: %s\n"
                         % (getattr(exc, "code", "INVALID"), exc))
        return EXIT_INPUT
    return _run_verification(config, instances,
                             {"corpus": config.corpus_path}, "verify")


def run_fuzz(config):
    try:
        instances = fuzz_corpus(config.seed, config.count, max_coord=config.max_coord)
    except HilbcloseError as exc:
        sys.stderr.write("input error [%s]: %s\n" % (exc.code, exc))
        return EXIT_INPUT
    params = {"seed": config.seed, "count": config.count,
              "max_coord": config.max_coord}
    return _run_verification(config, instances, params, "fuzz")


# ---------------------------------------------------------------------------
# built-in examples

def _builtin_examples():
    remark = {
        "name": "remark-s2",
        "ring": {"dim": 2, "generators": [[1, 0], [1, 1], [0, 2], [0, 3]]},
        "ideal": {"generators": [[1, 0], [0, 2]], "ordered": True},
        "n_max": 8,
        "expect": {
            "integral_lengths": [2 * comb(n + 2, 2) - 1 for n in range(9)],
            "ordinary_lengths": [(n + 1) * (n + 3) for n in range(9)],
            "integral_coefficients": [2, 0, -1],
            "ordinary_coefficients": [2, -1, 0],
            "e1_lim": 0,
        },
    }
    x2y3 = {
        "name": "free-x2y3",
        "ring": {"dim": 2, "generators": [[1, 0], [0, 1]]},
        "ideal": {"generators": [[2, 0], [0, 3]], "ordered": True},
        "n_max": 8,
        "expect": {
            "integral_lengths": [(n + 1) * (3 * n + 5) for n in range(9)],
            "ordinary_lengths": [6 * comb(n + 2, 2) for n in range(9)],
            "integral_coefficients": [6, 1, 0],
            "ordinary_coefficients": [6, 0, 0],
            "e1_lim": 0,
        },
    }
    maximal = {
        "name": "free-maximal",
        "ring": {"dim": 2, "generators": [[1, 0], [0, 1]]},
        "ideal": {"generators": [[1, 0], [0, 1]], "ordered": True},
        "n_max": 8,
        "expect": {
            "integral_lengths": [comb(n + 2, 2) for n in range(9)],
            "ordinary_lengths": [comb(n + 2, 2) for n in range(9)],
            "integral_coefficients": [1, 0, 0],
            "ordinary_coefficients": [1, 0, 0],
            "e1_lim": 0,
        },
    }
    return {ex["name"]: ex for ex in (remark, x2y3, maximal)}


def example_instance(name):
    """Ring and parameter ideal of a built-in example."""
    ex = _builtin_examples()[name]
    ring = formats.ring_from_record(ex["ring"])
    gens, _ = formats.ideal_from_record(ex["ideal"], ring)
    return ring, ParameterIdeal(ring, gens)


def run_example(config):
    examples = _builtin_examples()
    name = config.example_name
    if name not in examples:
        sys.stderr.write("unknown example %r; available: %s\n"
                         % (name, ", ".join(sorted(examples))))
        return EXIT_INPUT
    ex = examples[name]
    ring, q = example_instance(name)
    bundle = coefficient_report(ring, q, n_max=ex["n_max"])
    got = {
        "integral_lengths": list(bundle.report(FiltrationKind.INTEGRAL).lengths),
        "ordinary_lengths": list(bundle.report(FiltrationKind.ORDINARY).lengths),
        "integral_coefficients": list(bundle.report(FiltrationKind.INTEGRAL).coefficients),
        "ordinary_coefficients": list(bundle.report(FiltrationKind.ORDINARY).coefficients),
        "e1_lim": bundle.e1_lim,
    }
    lines = ["example %s" % name,
             "%-24s %-8s" % ("quantity", "match")]
    all_ok = True
    for key in sorted(ex["expect"]):
        ok = got[key] == ex["expect"][key]
        all_ok = all_ok and ok
        lines.append("%-24s %-8s expected=%r got=%r"
                     % (key, "ok" if ok else "MISMATCH", ex["expect"][key], got[key]))
    _emit("\n".join(lines) + "\n", config.out)
    return EXIT_OK if all_ok else EXIT_VIOLATION


# ---------------------------------------------------------------------------
# argument parsing

def build_parser():
    parser = argparse.ArgumentParser(
        prog="hilbclose",
        description="Exact Hilbert-Samuel coefficients of closure filtrations "
                    "for monomial ideals in affine semigroup rings.")
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="coefficient report for one instance")
    pa.add_argument("--ring", required=True, help="ring description JSON file")
    pa.add_argument("--ideal", required=True, help="parameter ideal JSON file")
    pa.add_argument("--n-max", type=int, default=10)
    pa.add_argument("--char", type=int, default=None,
                    help="prime characteristic for the tight filtration")
    pa.add_argument("--e-max", type=int, default=4)
    pa.add_argument("--report", choices=REPORT_FORMATS, default="json")
    pa.add_argument("--out", default=None)

    pv = sub.add_parser("verify", help="run the theorem suite over a corpus file")
    pv.add_argument("--corpus", required=True)
    pv.add_argument("--n-max", type=int, default=8)
    pv.add_argument("--char", type=int, default=None)
    pv.add_argument("--e-max", type=int, default=4)
    pv.add_argument("--report", choices=REPORT_FORMATS, default="json")
    pv.add_argument("--out", default=None)

    pf = sub.add_parser("fuzz", help="generate and verify a random corpus")
    pf.add_argument("--seed", type=int, required=True)
    pf.add_argument("--count", type=int, required=True)
    pf.add_argument("--max-coord", type=int, default=6)
    pf.add_argument("--n-max", type=int, default=8)
    pf.add_argument("--char", type=int, default=None)
    pf.add_argument("--e-max", type=int, default=4)
    pf.add_argument("--report", choices=REPORT_FORMATS, default="json")
    pf.add_argument("--out", default=None)

    pe = sub.add_parser("example", help="replay a built-in example")
    pe.add_argument("name")
    pe.add_argument("--out", default=None)
    return parser


def config_from_args(args):
    kwargs = {"command": args.command}
    if args.command == "analyze":
        kwargs.update(ring_path=args.ring, ideal_path=args.ideal, n_max=args.n_max,
                      characteristic=args.char, e_max=args.e_max,
                      report=args.report, out=args.out)
    elif args.command == "verify":
        kwargs.update(corpus_path=args.corpus, n_max=args.n_max,
                      characteristic=args.char, e_max=args.e_max,
                      report=args.report, out=args.out)
    elif args.command == "fuzz":
        kwargs.update(seed=args.seed, count=args.count, max_coord=args.max_coord,
                      n_max=args.n_max, characteristic=args.char, e_max=args.e_max,
                      report=args.report, out=args.out)
    else:
        kwargs.update(example_name=args.name, out=args.out)
    return RunConfig(**kwargs)


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = config_from_args(args)
    except ValueError as exc:
        sys.stderr.write("input error: %s\n" % exc)
        return EXIT_INPUT
    runner = {"analyze": run_analyze, "verify": run_verify,
              "fuzz": run_fuzz, "example": run_example}[config.command]
    try:
        return runner(config)
    except HilbcloseError as exc:
        sys.stderr.write("error [%s]: %s\n" % (exc.code, exc))
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
