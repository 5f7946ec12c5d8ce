"""Bounded certificate search over the built-in order templates.

A certificate fixes every parameter an order template needs — the
algebraic interpretations, the argument status, the symbol precedence —
together with the orientation results it induces on a proof obligation.
``find_certificate`` enumerates a finite parameter space in a fixed
canonical order and returns the first candidate whose induced order
discharges the obligation; ``verify_certificate`` re-derives everything
a certificate claims from its parameters alone, so a stored or
transmitted certificate never has to be trusted.

Templates
---------

``wpo``
    Dependency-pair template: linear-polynomial core (required simple on
    the status positions) refined by a root-symbol precedence.
``gwpo``
    Dependency-pair template: linear-polynomial core (again status
    simple) refined by a root-marked max/plus layer, so the root of a
    term may weigh differently from inner occurrences.
``spo``
    Dependency-pair template without any simplicity requirement: a
    root-marked linear layer (marked entries may project an argument
    the plain entry does not) combined lexicographically with a
    root-marked max/plus layer.
``mgwpo-direct``
    Direct termination template: the nested recursive comparison built
    from a totally simple linear core and a max/plus refinement, each
    rule oriented strictly.
``kbo-like``
    Direct template using the flat recursive comparison: unit-coefficient
    weights (hence strictly simple) refined by a precedence.

Canonical enumeration order
---------------------------

Symbols are ordered by (arity, name).  Interpretation grids enumerate
per-symbol entry vectors lexicographically, least entry first, with the
first symbol varying slowest; statuses enumerate per-symbol position
subsets shortest first; precedences enumerate rank vectors
lexicographically.  Candidate vectors are then ordered per template:

* ``wpo``: (linear core, status, precedence)
* ``gwpo``: (linear core, max/plus layer, status)
* ``spo``: (max/plus layer, plain linear grid, marked-entry variants,
  status) — the max/plus layer varies slowest because its first entry
  (every symbol constant zero) already supports most proofs this
  template finds
* ``mgwpo-direct``: (linear core, max/plus layer)
* ``kbo-like``: (weights, precedence)

Enlarging a domain bound never removes a candidate, so anything found
in a smaller space is still found (possibly earlier) in a larger one.

Searching prunes with necessary conditions only — a candidate is
skipped only when some conjunct of the induced order provably fails on
an obligation — and every returned certificate is re-checked through
``verify_certificate`` before it is handed back.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from typing import Iterator, Sequence

from .algebra import (
    LinearPolyInterpretation,
    MaxPlusInterpretation,
    check_simple,
    check_strictly_simple,
    check_weak_monotone,
)
from .dp import Obligation, ObligationResult, check_direct, check_dp
from .orders import (
    Status,
    explain_fast_gt,
    explain_gwpo_gt,
    explain_gwpo_pair,
    explain_spo_pair,
    fast_comparator,
    gwpo_comparator,
    mgwpo_pair_comparator,
    mspo_pair_comparator,
)
from .terms import App, Symbol, Term, bang_symbol, subterms
from .triples import (
    Precedence,
    ReductionTriple,
    combine_triples,
    marked_triple,
    triple_from_algebra,
    triple_from_precedence,
)

TEMPLATES = ("wpo", "gwpo", "spo", "mgwpo-direct", "kbo-like")
DP_TEMPLATES = ("wpo", "gwpo", "spo")
DIRECT_TEMPLATES = ("mgwpo-direct", "kbo-like")


class CertificateError(ValueError):
    """A certificate is structurally unusable for the given obligation.

    The message names the first component that failed validation.
    """


@dataclass(frozen=True)
class SearchSpace:
    """Bounds of the candidate grid.

    ``coeff_max`` bounds linear argument coefficients (from 0),
    ``const_max`` bounds additive constants (from 0), and the max/plus
    argument offsets range over ``shift_min..shift_max``.  ``statuses``
    selects either every position subset per symbol ("all") or just the
    full left-to-right status ("total").
    """

    template: str
    coeff_max: int = 1
    const_max: int = 2
    shift_min: int = -1
    shift_max: int = 1
    statuses: str = "all"

    def __post_init__(self) -> None:
        if self.template not in TEMPLATES:
            raise ValueError(f"unknown template {self.template!r}")
        if self.coeff_max < 1:
            raise ValueError("coeff_max must be at least 1")
        if self.const_max < 0:
            raise ValueError("const_max must be non-negative")
        if self.shift_min > self.shift_max:
            raise ValueError("empty shift range")
        if self.statuses not in ("all", "total"):
            raise ValueError("statuses must be 'all' or 'total'")


@dataclass
class Certificate:
    """Everything needed to reconstruct one concrete order.

    ``interp_a`` is the linear layer and ``interp_b`` the max/plus
    layer; for the marked templates they carry entries for the
    root-marker symbols as well.  Unused components are None.
    ``obligations`` holds the per-rule orientation results (with case
    chains) once the certificate has been verified.
    """

    template: str
    kind: str
    interp_a: LinearPolyInterpretation | None = None
    interp_b: MaxPlusInterpretation | None = None
    precedence: Precedence | None = None
    status: Status | None = None
    obligations: tuple[ObligationResult, ...] = ()


@dataclass(frozen=True)
class SearchResult:
    """Outcome of one bounded search.

    ``outcome`` is "found", "exhausted" (the whole space was enumerated
    without success) or "timeout" (the deadline cut enumeration short).
    ``tried`` counts candidates that reached orientation checking;
    candidates discarded by necessary-condition pruning are not counted.
    """

    outcome: str
    certificate: Certificate | None
    tried: int
    elapsed: float


@dataclass(frozen=True)
class VerifyReport:
    """Re-derivation of a certificate's claims: hypothesis checks first,
    then one orientation entry per rule and per strict obligation."""

    ok: bool
    lines: tuple[str, ...]
    entries: tuple[ObligationResult, ...]


# -- canonical grids ----------------------------------------------------


def problem_symbols(problem: Obligation) -> list[Symbol]:
    """Symbols occurring in the obligation's rules, ordered (arity, name)."""
    seen: dict[str, Symbol] = {}
    for rule in (*problem.weak_rules, *problem.strict_rules):
        for side in (rule.lhs, rule.rhs):
            for _, sub in subterms(side):
                if isinstance(sub, App):
                    seen.setdefault(sub.sym.name, sub.sym)
    return sorted(seen.values(), key=lambda s: (s.arity, s.name))


def _linear_choices(
    sym: Symbol, space: SearchSpace
) -> list[tuple[int, tuple[int, ...]]]:
    out = []
    for const in range(space.const_max + 1):
        for coeffs in itertools.product(
            range(space.coeff_max + 1), repeat=sym.arity
        ):
            out.append((const, coeffs))
    return out


def _maxplus_choices(
    sym: Symbol, space: SearchSpace
) -> list[tuple[int, tuple[tuple[int, int], ...]]]:
    arg_opts = [
        (b, c)
        for b in (0, 1)
        for c in range(space.shift_min, space.shift_max + 1)
    ]
    out = []
    for base in range(space.const_max + 1):
        for args in itertools.product(arg_opts, repeat=sym.arity):
            out.append((base, args))
    return out


def _weight_choices(sym: Symbol, space: SearchSpace) -> list[tuple[int, tuple[int, ...]]]:
    """Unit-coefficient entries; non-constant symbols need weight >= 1 so
    the interpretation stays strictly simple."""
    low = 0 if sym.arity == 0 else 1
    ones = tuple(1 for _ in range(sym.arity))
    return [(const, ones) for const in range(low, space.const_max + 1)]


def _status_choices(symbols: Sequence[Symbol], space: SearchSpace) -> list[Status]:
    if space.statuses == "total":
        return [Status.total_for(symbols)]
    per_symbol = []
    for sym in symbols:
        opts: list[tuple[int, ...]] = []
        for size in range(sym.arity + 1):
            opts.extend(itertools.combinations(range(1, sym.arity + 1), size))
        per_symbol.append(opts)
    return [
        Status(dict(zip(symbols, combo)))
        for combo in itertools.product(*per_symbol)
    ]


def _precedence_choices(symbols: Sequence[Symbol]) -> list[Precedence]:
    n = len(symbols)
    return [
        Precedence(dict(zip(symbols, ranks)))
        for ranks in itertools.product(range(n), repeat=n)
    ]


def _with_inherited_marks(entries: dict) -> dict:
    """Extend entries so every root-marker symbol copies its plain entry."""
    full = dict(entries)
    for sym, entry in entries.items():
        full[bang_symbol(sym)] = entry
    return full


def _mark_variants(
    sym: Symbol, plain: tuple[int, tuple[int, ...]]
) -> list[tuple[int, tuple[int, ...]]]:
    """Root-marker entry candidates: inherit the plain entry, or project
    one argument the plain entry need not project."""
    variants = [plain]
    for pos in range(sym.arity):
        proj = (0, tuple(1 if k == pos else 0 for k in range(sym.arity)))
        if proj != plain:
            variants.append(proj)
    return variants


# -- certificate validation and order reconstruction -------------------


_REQUIRED = {
    "wpo": ("interp_a", "precedence", "status"),
    "gwpo": ("interp_a", "interp_b", "status"),
    "spo": ("interp_a", "interp_b", "status"),
    "mgwpo-direct": ("interp_a", "interp_b"),
    "kbo-like": ("interp_a", "precedence"),
}

# templates whose max/plus layer (m) or linear layer (l) compares marked roots
_MARKED = {"gwpo": "m", "spo": "lm"}


def _validate(problem: Obligation, cert: Certificate) -> list[Symbol]:
    if cert.template not in TEMPLATES:
        raise CertificateError(f"template: unknown template {cert.template!r}")
    expected_kind = "dp" if cert.template in DP_TEMPLATES else "direct"
    if cert.kind != expected_kind:
        raise CertificateError(
            f"kind: template {cert.template} requires a {expected_kind} obligation,"
            f" certificate says {cert.kind}"
        )
    if problem.kind != cert.kind:
        raise CertificateError(
            f"kind: certificate is for a {cert.kind} obligation,"
            f" problem is {problem.kind}"
        )
    for field_name in _REQUIRED[cert.template]:
        if getattr(cert, field_name) is None:
            raise CertificateError(f"{field_name}: missing for template {cert.template}")

    symbols = problem_symbols(problem)
    marked = _MARKED.get(cert.template, "")
    if cert.interp_a is not None:
        if not isinstance(cert.interp_a, LinearPolyInterpretation):
            raise CertificateError("interp_a: expected a linear interpretation")
        for sym in symbols:
            if sym not in cert.interp_a.entries:
                raise CertificateError(f"interp_a: no entry for {sym.name}")
            if "l" in marked and bang_symbol(sym) not in cert.interp_a.entries:
                raise CertificateError(
                    f"interp_a: no entry for marker {bang_symbol(sym).name}"
                )
    if cert.interp_b is not None:
        if not isinstance(cert.interp_b, MaxPlusInterpretation):
            raise CertificateError("interp_b: expected a max/plus interpretation")
        for sym in symbols:
            if sym not in cert.interp_b.entries:
                raise CertificateError(f"interp_b: no entry for {sym.name}")
            if "m" in marked and bang_symbol(sym) not in cert.interp_b.entries:
                raise CertificateError(
                    f"interp_b: no entry for marker {bang_symbol(sym).name}"
                )
    if cert.precedence is not None:
        for sym in symbols:
            if sym not in cert.precedence.ranks:
                raise CertificateError(f"precedence: no rank for {sym.name}")
    if cert.status is not None:
        for sym in symbols:
            if sym not in cert.status.entries:
                raise CertificateError(f"status: no positions for {sym.name}")
    return symbols


def _assemble(cert: Certificate, symbols: Sequence[Symbol]):
    """Rebuild (checker, explain, hypotheses) from certificate parameters.

    For dependency-pair templates the checker returns (weak, strict)
    verdicts; for direct templates it is a strict comparator.  The
    hypotheses are the order-existence conditions the template relies
    on, re-checked from scratch.
    """
    template = cert.template
    if template == "wpo":
        ta = triple_from_algebra(cert.interp_a)
        tb = triple_from_precedence(cert.precedence)
        checker = mgwpo_pair_comparator(cert.status, ta, tb)

        def explain(s: Term, t: Term, want_strict: bool):
            return explain_gwpo_pair(s, t, cert.status, ta.pair, tb.pair, want_strict)

        hypotheses = [
            ("core weakly monotone", lambda: check_weak_monotone(cert.interp_a)),
            (
                "core simple on status positions",
                lambda: check_simple(cert.interp_a, cert.status.entries, symbols),
            ),
        ]
    elif template == "gwpo":
        ta = triple_from_algebra(cert.interp_a)
        tb = marked_triple(cert.interp_b)
        checker = mgwpo_pair_comparator(cert.status, ta, tb)

        def explain(s: Term, t: Term, want_strict: bool):
            return explain_gwpo_pair(s, t, cert.status, ta.pair, tb.pair, want_strict)

        hypotheses = [
            ("core weakly monotone", lambda: check_weak_monotone(cert.interp_a)),
            ("refinement weakly monotone", lambda: check_weak_monotone(cert.interp_b)),
            (
                "core simple on status positions",
                lambda: check_simple(cert.interp_a, cert.status.entries, symbols),
            ),
        ]
    elif template == "spo":
        combined = combine_triples(
            marked_triple(cert.interp_a), marked_triple(cert.interp_b)
        )
        checker = mspo_pair_comparator(cert.status, combined)

        def explain(s: Term, t: Term, want_strict: bool):
            return explain_spo_pair(s, t, cert.status, combined.pair, want_strict)

        hypotheses = [
            ("linear layer weakly monotone", lambda: check_weak_monotone(cert.interp_a)),
            ("max/plus layer weakly monotone", lambda: check_weak_monotone(cert.interp_b)),
        ]
    elif template == "mgwpo-direct":
        ta = triple_from_algebra(cert.interp_a)
        tb = triple_from_algebra(cert.interp_b)
        gt = gwpo_comparator(ta.pair, tb.pair)

        def checker(s: Term, t: Term) -> bool:
            return ta.ge(s, t) and tb.ge(s, t) and gt(s, t)

        def explain(s: Term, t: Term):
            return explain_gwpo_gt(s, t, ta.pair, tb.pair)

        hypotheses = [
            ("core weakly monotone", lambda: check_weak_monotone(cert.interp_a)),
            ("refinement weakly monotone", lambda: check_weak_monotone(cert.interp_b)),
            (
                "core simple at every position",
                lambda: check_simple(cert.interp_a, None, symbols),
            ),
        ]
    else:  # kbo-like
        ta = triple_from_algebra(cert.interp_a)
        tb = triple_from_precedence(cert.precedence)
        fast = fast_comparator(ta.pair, tb.pair)

        def checker(s: Term, t: Term) -> bool:
            return ta.ge(s, t) and fast(s, t)

        def explain(s: Term, t: Term):
            return explain_fast_gt(s, t, ta.pair, tb.pair)

        hypotheses = [
            ("weights weakly monotone", lambda: check_weak_monotone(cert.interp_a)),
            (
                "weights strictly simple",
                lambda: check_strictly_simple(cert.interp_a, symbols),
            ),
            (
                "weights simple at every position",
                lambda: check_simple(cert.interp_a, None, symbols),
            ),
        ]
    return checker, explain, hypotheses


def verify_certificate(problem: Obligation, cert: Certificate) -> VerifyReport:
    """Re-derive every claim a certificate makes against ``problem``.

    Raises CertificateError if the certificate cannot even be
    interpreted (wrong template/kind, missing parameter entries).
    Otherwise re-runs each template hypothesis and each orientation and
    reports them all, succeeding only when everything holds.
    """
    symbols = _validate(problem, cert)
    checker, explain, hypotheses = _assemble(cert, symbols)

    lines: list[str] = []
    ok = True
    for name, check in hypotheses:
        good = check()
        ok = ok and good
        lines.append(f"hypothesis {name}: {'ok' if good else 'FAILED'}")

    if problem.kind == "direct":
        report = check_direct(problem.trs, checker, explain)
    else:
        report = check_dp(
            problem.trs, checker, explain, pairs=list(problem.strict_rules)
        )
    ok = ok and report.ok
    for entry in report.entries:
        verdict = "ok" if entry.holds else "FAILED"
        lines.append(f"{entry.required} {entry.rule}: {verdict}")
    return VerifyReport(ok, tuple(lines), tuple(report.entries))


# -- the search itself --------------------------------------------------


class _Expired(Exception):
    """Internal: the search deadline passed."""


class _Search:
    def __init__(self, problem: Obligation, space: SearchSpace, deadline: float | None):
        self.problem = problem
        self.space = space
        self.symbols = problem_symbols(problem)
        self.weak_rules = problem.weak_rules
        self.strict_rules = problem.strict_rules
        self.started = time.monotonic()
        self.deadline_at = None if deadline is None else self.started + deadline
        self.tried = 0

    # - bookkeeping -

    def _check_deadline(self) -> None:
        if self.deadline_at is not None and time.monotonic() >= self.deadline_at:
            raise _Expired

    def _finish(self, **params) -> Certificate:
        cert = Certificate(
            template=self.space.template, kind=self.problem.kind, **params
        )
        report = verify_certificate(self.problem, cert)
        if not report.ok:
            failed = [line for line in report.lines if line.endswith("FAILED")]
            raise RuntimeError(
                "search accepted a candidate its own verifier rejects: "
                + "; ".join(failed)
            )
        cert.obligations = report.entries
        return cert

    # - necessary-condition prunes -

    def _holds_everywhere(self, rel) -> bool:
        return all(
            rel(rule.lhs, rule.rhs)
            for rule in itertools.chain(self.weak_rules, self.strict_rules)
        )

    def _holds_on_rules(self, rel) -> bool:
        return all(rel(rule.lhs, rule.rhs) for rule in self.weak_rules)

    # - candidate checks -

    def _orients_dp(self, pair_fn) -> bool:
        self.tried += 1
        if self.tried % 64 == 0:
            self._check_deadline()
        for rule in self.strict_rules:
            if not pair_fn(rule.lhs, rule.rhs)[1]:
                return False
        return all(pair_fn(rule.lhs, rule.rhs)[0] for rule in self.weak_rules)

    def _orients_direct(self, gt) -> bool:
        self.tried += 1
        if self.tried % 64 == 0:
            self._check_deadline()
        return all(gt(rule.lhs, rule.rhs) for rule in self.strict_rules)

    # - per-template grids -

    def _linear_grid(self) -> Iterator[dict]:
        choices = [_linear_choices(sym, self.space) for sym in self.symbols]
        for combo in itertools.product(*choices):
            yield dict(zip(self.symbols, combo))

    def _marked_maxplus_grid(self) -> Iterator[MaxPlusInterpretation]:
        choices = [_maxplus_choices(sym, self.space) for sym in self.symbols]
        for combo in itertools.product(*choices):
            entries = _with_inherited_marks(dict(zip(self.symbols, combo)))
            yield MaxPlusInterpretation(entries)

    def _plain_maxplus_survivors(self) -> list[tuple[MaxPlusInterpretation, ReductionTriple]]:
        """Max/plus layer candidates whose weak comparison covers every
        rule — a conjunct of the final order, so anything else is dead."""
        out = []
        choices = [_maxplus_choices(sym, self.space) for sym in self.symbols]
        for n, combo in enumerate(itertools.product(*choices)):
            if n % 256 == 0:
                self._check_deadline()
            interp = MaxPlusInterpretation(dict(zip(self.symbols, combo)))
            tb = triple_from_algebra(interp)
            if self._holds_everywhere(tb.ge):
                out.append((interp, tb))
        return out

    def _marked_maxplus_survivors(self) -> list[tuple[MaxPlusInterpretation, ReductionTriple]]:
        """Marked max/plus candidates whose plain weak comparison covers
        the (non-strict) rules."""
        out = []
        for n, interp in enumerate(self._marked_maxplus_grid()):
            if n % 256 == 0:
                self._check_deadline()
            tb = marked_triple(interp)
            if self._holds_on_rules(tb.ge):
                out.append((interp, tb))
        return out

    # - templates -

    def _run_wpo(self) -> Certificate | None:
        statuses = _status_choices(self.symbols, self.space)
        precedences = [
            (prec, triple_from_precedence(prec))
            for prec in _precedence_choices(self.symbols)
        ]
        for plain in self._linear_grid():
            self._check_deadline()
            algebra = LinearPolyInterpretation(plain)
            ta = triple_from_algebra(algebra)
            if not self._holds_everywhere(ta.ge):
                continue
            usable = [
                st for st in statuses if check_simple(algebra, st.entries, self.symbols)
            ]
            for status in usable:
                for prec, tb in precedences:
                    pair_fn = mgwpo_pair_comparator(status, ta, tb)
                    if self._orients_dp(pair_fn):
                        return self._finish(
                            interp_a=algebra, precedence=prec, status=status
                        )
        return None

    def _run_gwpo(self) -> Certificate | None:
        statuses = _status_choices(self.symbols, self.space)
        refinements: list | None = None
        for plain in self._linear_grid():
            self._check_deadline()
            algebra = LinearPolyInterpretation(plain)
            ta = triple_from_algebra(algebra)
            if not self._holds_everywhere(ta.ge):
                continue
            usable = [
                st for st in statuses if check_simple(algebra, st.entries, self.symbols)
            ]
            if not usable:
                continue
            if refinements is None:
                refinements = self._marked_maxplus_survivors()
            for refinement, tb in refinements:
                for status in usable:
                    pair_fn = mgwpo_pair_comparator(status, ta, tb)
                    if self._orients_dp(pair_fn):
                        return self._finish(
                            interp_a=algebra, interp_b=refinement, status=status
                        )
        return None

    def _run_spo(self) -> Certificate | None:
        statuses = _status_choices(self.symbols, self.space)
        mark_axes = [
            (sym, bang_symbol(sym)) for sym in self.symbols if sym.arity > 0
        ]
        for refinement in self._marked_maxplus_grid():
            self._check_deadline()
            tb = marked_triple(refinement)
            if not self._holds_on_rules(tb.ge):
                continue
            for plain in self._linear_grid():
                self._check_deadline()
                plain_interp = LinearPolyInterpretation(plain)
                if not self._holds_on_rules(triple_from_algebra(plain_interp).ge):
                    continue
                variant_axes = [
                    [(bang, entry) for entry in _mark_variants(sym, plain[sym])]
                    for sym, bang in mark_axes
                ]
                for marks in itertools.product(*variant_axes):
                    entries = _with_inherited_marks(plain)
                    entries.update(dict(marks))
                    linear = LinearPolyInterpretation(entries)
                    combined = combine_triples(marked_triple(linear), tb)
                    for status in statuses:
                        pair_fn = mspo_pair_comparator(status, combined)
                        if self._orients_dp(pair_fn):
                            return self._finish(
                                interp_a=linear, interp_b=refinement, status=status
                            )
        return None

    def _run_mgwpo_direct(self) -> Certificate | None:
        refinements: list | None = None
        for plain in self._linear_grid():
            self._check_deadline()
            algebra = LinearPolyInterpretation(plain)
            if not check_simple(algebra, None, self.symbols):
                continue
            ta = triple_from_algebra(algebra)
            if not self._holds_everywhere(ta.ge):
                continue
            if refinements is None:
                refinements = self._plain_maxplus_survivors()
            for refinement, tb in refinements:
                gt = gwpo_comparator(ta.pair, tb.pair)
                if self._orients_direct(gt):
                    return self._finish(interp_a=algebra, interp_b=refinement)
        return None

    def _run_kbo_like(self) -> Certificate | None:
        precedences = [
            (prec, triple_from_precedence(prec))
            for prec in _precedence_choices(self.symbols)
        ]
        choices = [_weight_choices(sym, self.space) for sym in self.symbols]
        for combo in itertools.product(*choices):
            self._check_deadline()
            algebra = LinearPolyInterpretation(dict(zip(self.symbols, combo)))
            ta = triple_from_algebra(algebra)
            if not self._holds_everywhere(ta.ge):
                continue
            for prec, tb in precedences:
                gt = fast_comparator(ta.pair, tb.pair)
                if self._orients_direct(gt):
                    return self._finish(interp_a=algebra, precedence=prec)
        return None

    def run(self) -> SearchResult:
        runner = {
            "wpo": self._run_wpo,
            "gwpo": self._run_gwpo,
            "spo": self._run_spo,
            "mgwpo-direct": self._run_mgwpo_direct,
            "kbo-like": self._run_kbo_like,
        }[self.space.template]
        try:
            cert = runner()
        except _Expired:
            return SearchResult(
                "timeout", None, self.tried, time.monotonic() - self.started
            )
        outcome = "found" if cert is not None else "exhausted"
        return SearchResult(outcome, cert, self.tried, time.monotonic() - self.started)


def find_certificate(
    problem: Obligation, space: SearchSpace, deadline: float | None = None
) -> SearchResult:
    """Enumerate ``space`` in canonical order until a certificate
    discharges ``problem``.

    ``deadline`` is a wall-clock budget in seconds; it is consulted
    between candidates, never inside one, so a result is always based on
    completed checks.  The outcome distinguishes a genuinely exhausted
    space from one the deadline cut short.
    """
    expected = "dp" if space.template in DP_TEMPLATES else "direct"
    if problem.kind != expected:
        raise ValueError(
            f"template {space.template} expects a {expected} obligation,"
            f" got {problem.kind}"
        )
    return _Search(problem, space, deadline).run()
