"""Command-line front end.

Four subcommands: ``prove`` searches a template's certificate space for
a problem file, ``verify`` re-checks a certificate against a problem,
``compare`` runs one comparison under a certificate's parameters, and
``oracle`` runs a canned exhaustive check.

Exit status is part of the interface: 0 means terminating (or the
requested check passed), 1 unknown (or check failed), 2 timeout,
3 usage or parse error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .ari import ParseError, parse_ari, parse_term
from .dp import Obligation, direct_obligation, dp_obligation
from .oracle import check_names, run_named_check
from .orders import ComparisonStats, Status, fast_comparator, gwpo_comparator
from .orders import mgwpo_pair_comparator, mspo_pair_comparator
from .proof import emit_proof, parse_certificate, proof_from_search
from .search import (
    DP_TEMPLATES,
    TEMPLATES,
    Certificate,
    CertificateError,
    SearchSpace,
    find_certificate,
    verify_certificate,
    _validate,
)
from .terms import Term
from .triples import (
    OrderPair,
    ReductionTriple,
    combine_triples,
    marked_triple,
    triple_from_algebra,
    triple_from_precedence,
)

EXIT_TERMINATING = 0
EXIT_UNKNOWN = 1
EXIT_TIMEOUT = 2
EXIT_USAGE = 3

_SPACE_KEYS = ("coeff_max", "const_max", "shift_min", "shift_max", "statuses")


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse parser whose failures map to exit status 3."""

    def error(self, message: str):
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="gwpo",
        description="Termination tools for term rewrite systems.",
        epilog="exit status: 0 terminating/check passed, 1 unknown, "
        "2 timeout, 3 usage or parse error",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    prove = sub.add_parser("prove", help="search for a termination certificate")
    prove.add_argument("file", help="problem file")
    prove.add_argument("--template", choices=TEMPLATES, default="gwpo")
    prove.add_argument("--timeout", type=float, default=None, metavar="SECONDS")
    prove.add_argument("--max-const", type=int, default=None, metavar="N")
    prove.add_argument("--statuses", choices=("total", "all"), default=None)
    prove.add_argument("--scc", choices=("on", "off"), default="off",
                       help="restrict strict obligations to cyclic dependency pairs")
    prove.add_argument("--proof", default=None, metavar="PATH",
                       help="also write the proof text to PATH")
    prove.add_argument("--jobs", type=int, default=1, metavar="N",
                       help="worker bound; the result is deterministic regardless")
    prove.add_argument("--config", default=None, metavar="PATH",
                       help="JSON file with search-space bounds "
                       f"(keys: {', '.join(_SPACE_KEYS)})")
    prove.set_defaults(func=_cmd_prove)

    verify = sub.add_parser("verify", help="re-check a certificate")
    verify.add_argument("file", help="problem file")
    verify.add_argument("--params", required=True, metavar="CERT",
                        help="certificate file (a proof file works as-is)")
    verify.add_argument("--scc", choices=("on", "off"), default="off")
    verify.set_defaults(func=_cmd_verify)

    compare = sub.add_parser(
        "compare", help="compare two terms under certificate parameters"
    )
    compare.add_argument("file", help="problem file supplying the signature")
    compare.add_argument("--lhs", required=True, help="left term, rule syntax")
    compare.add_argument("--rhs", required=True, help="right term, rule syntax")
    compare.add_argument("--params", required=True, metavar="CERT")
    compare.set_defaults(func=_cmd_compare)

    oracle = sub.add_parser("oracle", help="run an exhaustive ground-truth check")
    oracle.add_argument("check", help=f"one of: {', '.join(check_names())}")
    oracle.add_argument("--size", type=int, default=None,
                        help="term-size bound for the enumerated universe")
    oracle.set_defaults(func=_cmd_oracle)

    return parser


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise _UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc


def _problem_for(trs, cert_kind: str, use_scc: bool) -> Obligation:
    if cert_kind == "dp":
        return dp_obligation(trs, use_scc=use_scc)
    return direct_obligation(trs)


def _cmd_prove(args) -> int:
    trs = parse_ari(_read_text(args.file))
    if args.jobs < 1:
        raise _UsageError("--jobs must be at least 1")

    space_kw: dict = {}
    if args.config is not None:
        try:
            loaded = json.loads(_read_text(args.config))
        except json.JSONDecodeError as exc:
            raise _UsageError(f"cannot parse {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise _UsageError(f"{args.config}: expected a JSON object")
        for key in loaded:
            if key not in _SPACE_KEYS:
                raise _UsageError(f"{args.config}: unknown search-space key {key!r}")
        space_kw.update(loaded)
    if args.max_const is not None:
        space_kw["const_max"] = args.max_const
    if args.statuses is not None:
        space_kw["statuses"] = args.statuses
    try:
        space = SearchSpace(template=args.template, **space_kw)
    except (TypeError, ValueError) as exc:
        raise _UsageError(str(exc)) from exc

    kind = "dp" if args.template in DP_TEMPLATES else "direct"
    problem = _problem_for(trs, kind, args.scc == "on")
    result = find_certificate(problem, space, deadline=args.timeout)
    text = emit_proof(proof_from_search(result, args.template, args.timeout))
    sys.stdout.write(text)
    if args.proof is not None:
        Path(args.proof).write_text(text)
    if result.outcome == "found":
        return EXIT_TERMINATING
    if result.outcome == "timeout":
        return EXIT_TIMEOUT
    return EXIT_UNKNOWN


def _cmd_verify(args) -> int:
    trs = parse_ari(_read_text(args.file))
    cert = parse_certificate(_read_text(args.params))
    problem = _problem_for(trs, cert.kind, args.scc == "on")
    report = verify_certificate(problem, cert)
    for line in report.lines:
        print(line)
    print("certificate accepted" if report.ok else "certificate REJECTED")
    return EXIT_TERMINATING if report.ok else EXIT_UNKNOWN


def _counted_pair(pair: OrderPair, stats: ComparisonStats, layer: str) -> OrderPair:
    weak_field = "weak_" + layer
    strict_field = "strict_" + layer

    def weak(s: Term, t: Term) -> bool:
        setattr(stats, weak_field, getattr(stats, weak_field) + 1)
        return pair.weak(s, t)

    def strict(s: Term, t: Term) -> bool:
        setattr(stats, strict_field, getattr(stats, strict_field) + 1)
        return pair.strict(s, t)

    return OrderPair(weak, strict, pair.label)


def _counted(triple: ReductionTriple, stats: ComparisonStats, layer: str):
    return ReductionTriple(triple.ge, _counted_pair(triple.pair, stats, layer),
                           triple.label)


def _comparison(cert: Certificate, stats: ComparisonStats):
    """A (weak, strict) comparator under ``cert``, counting base calls.

    Dependency-pair templates report their native pair verdicts; for the
    direct templates the weak verdict is the reflexive closure of the
    strict order.
    """
    status = cert.status if cert.status is not None else Status({})
    if cert.template == "wpo":
        ta = _counted(triple_from_algebra(cert.interp_a), stats, "a")
        tb = _counted(triple_from_precedence(cert.precedence), stats, "b")
        return mgwpo_pair_comparator(status, ta, tb)
    if cert.template == "gwpo":
        ta = _counted(triple_from_algebra(cert.interp_a), stats, "a")
        tb = _counted(marked_triple(cert.interp_b), stats, "b")
        return mgwpo_pair_comparator(status, ta, tb)
    if cert.template == "spo":
        combined = combine_triples(
            _counted(marked_triple(cert.interp_a), stats, "a"),
            _counted(marked_triple(cert.interp_b), stats, "b"),
        )
        return mspo_pair_comparator(status, combined)
    if cert.template == "mgwpo-direct":
        ta = triple_from_algebra(cert.interp_a)
        tb = triple_from_algebra(cert.interp_b)
        gt = gwpo_comparator(ta.pair, tb.pair, stats)

        def direct_pair(s: Term, t: Term) -> tuple[bool, bool]:
            st = ta.ge(s, t) and tb.ge(s, t) and gt(s, t)
            return (st or s == t, st)

        return direct_pair
    # kbo-like
    ta = triple_from_algebra(cert.interp_a)
    tb = triple_from_precedence(cert.precedence)
    fast = fast_comparator(ta.pair, tb.pair, stats)

    def kbo_pair(s: Term, t: Term) -> tuple[bool, bool]:
        st = ta.ge(s, t) and fast(s, t)
        return (st or s == t, st)

    return kbo_pair


def _cmd_compare(args) -> int:
    trs = parse_ari(_read_text(args.file))
    cert = parse_certificate(_read_text(args.params))
    _validate(_problem_for(trs, cert.kind, False), cert)
    lhs = parse_term(args.lhs, trs.signature)
    rhs = parse_term(args.rhs, trs.signature)
    stats = ComparisonStats()
    weak, strict = _comparison(cert, stats)(lhs, rhs)
    print(f"weak: {'yes' if weak else 'no'}")
    print(f"strict: {'yes' if strict else 'no'}")
    print(
        f"base comparisons: weak_a={stats.weak_a} strict_a={stats.strict_a}"
        f" weak_b={stats.weak_b} strict_b={stats.strict_b} total={stats.total()}"
    )
    return EXIT_TERMINATING if strict else EXIT_UNKNOWN


def _cmd_oracle(args) -> int:
    try:
        outcome = run_named_check(args.check, args.size)
    except KeyError:
        raise _UsageError(
            f"unknown check {args.check!r}; known: {', '.join(check_names())}"
        ) from None
    print(json.dumps(
        {"check": outcome.name, "ok": outcome.ok, "lines": outcome.lines}, indent=2
    ))
    return EXIT_TERMINATING if outcome.ok else EXIT_UNKNOWN


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CertificateError as exc:
        print(f"certificate error: {exc}", file=sys.stderr)
        return EXIT_USAGE


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
