"""Exhaustive ground-truth checks over small term universes.

Every claimed relationship between the orders in this package can be
probed on a finite universe of terms: enumerate all terms up to a size
bound, compare every ordered pair under both constructions, and report
the first disagreement.  The checks here were written before the orders
were tuned, and they stay in the package so any later change can be
re-validated from scratch.

The checks are small-step honest: preconditions are tested and violations
raise ``PreconditionError`` rather than silently returning "no
counterexample found".  All randomness is seeded, so every reported
counterexample is replayable.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

from .algebra import LinearPolyInterpretation, MaxPlusInterpretation
from .orders import (
    Status,
    fast_comparator,
    gwpo_comparator,
    mgwpo_comparator,
    mgwpo_pair_comparator,
    mspo_pair_comparator,
    spo_comparator,
)
from .terms import (
    App,
    Signature,
    Symbol,
    Term,
    Var,
    apply_substitution,
    enumerate_terms,
    proper_subterms,
    replace_at,
)
from .triples import (
    OrderPair,
    Precedence,
    ReductionTriple,
    combine_triples,
    triple_from_algebra,
    triple_from_precedence,
)

TermRel = Callable[[Term, Term], bool]
PairFn = Callable[[Term, Term], tuple[bool, bool]]

DEFAULT_VARS = ("x", "y")
_SEED = 0x5EED


class PreconditionError(ValueError):
    """A check's hypothesis does not hold for the supplied parameters."""


def default_signature() -> Signature:
    """The stock universe signature: one binary, one unary, two constants."""
    return Signature(
        [Symbol("f", 2), Symbol("g", 1), Symbol("a", 0), Symbol("b", 0)]
    )


def enum_terms(
    sig: Signature, vars_: Sequence[str], max_size: int
) -> list[Term]:
    """All terms over ``sig`` and the given variable names, size-ordered."""
    return enumerate_terms(sig.symbols, vars_, max_size)


def is_simple_for(
    rel: TermRel, symbols: Iterable[Symbol], status: Status | None = None
) -> bool:
    """Does ``rel`` relate ``f(x1..xn)`` to ``xi`` at every status position?

    Checked on fresh variables, so for stable relations the result lifts
    to arbitrary argument terms.  With ``status=None`` every argument
    position is required (the total case).
    """
    for sym in symbols:
        args = [Var(f"_{i + 1}") for i in range(sym.arity)]
        if status is None:
            positions: Sequence[int] = range(1, sym.arity + 1)
        else:
            positions = status.positions(sym)
        top = App(sym, args)
        for p in positions:
            if not rel(top, args[p - 1]):
                return False
    return True


# -- agreement of the two recursive constructions ----------------------


def check_mgwpo_mspo_agreement(
    triple_a: ReductionTriple,
    triple_b: ReductionTriple,
    sig: Signature,
    max_size: int,
    vars_: Sequence[str] = DEFAULT_VARS,
) -> tuple[Term, Term] | None:
    """Compare the two-triple order with the one-triple order it folds into.

    The nested construction over ``triple_a`` and ``triple_b`` should
    order exactly the same pairs as the single-layer construction over
    their lexicographic combination.  Requires the weak side of
    ``triple_a`` to relate every term to each of its arguments;
    otherwise the equivalence has no reason to hold and we refuse to
    report anything.

    Returns the first disagreeing pair, or ``None``.
    """
    if not is_simple_for(triple_a.weak, sig.symbols):
        raise PreconditionError(
            "weak side of the first triple is not simple: "
            "f(..., xi, ...) must be weakly greater than xi"
        )
    combined = combine_triples(triple_a, triple_b)
    universe = enum_terms(sig, vars_, max_size)
    nested_gt = gwpo_comparator(triple_a.pair, triple_b.pair)
    folded_gt = spo_comparator(combined.pair)
    for s in universe:
        for t in universe:
            nested = triple_a.ge(s, t) and triple_b.ge(s, t) and nested_gt(s, t)
            folded = combined.ge(s, t) and folded_gt(s, t)
            if nested != folded:
                return (s, t)
    return None


# -- inclusion of the status-filtered pairs -----------------------------


@dataclass
class InclusionReport:
    """Outcome of comparing the one-triple pair against the two-triple pair.

    ``inclusion_witness`` is the first pair ordered by the one-triple
    construction but not by the two-triple one (a genuine violation).
    ``difference`` is the first pair where the two constructions differ
    at all; with a total status this is also a violation, with a partial
    status it documents where the two-triple pair is strictly stronger.
    """

    inclusion_ok: bool
    inclusion_witness: tuple[Term, Term, str] | None
    identical: bool
    difference: tuple[Term, Term, str] | None


def check_pair_inclusion(
    triple_a: ReductionTriple,
    triple_b: ReductionTriple,
    status: Status,
    sig: Signature,
    max_size: int,
    vars_: Sequence[str] = DEFAULT_VARS,
) -> InclusionReport:
    """Every pair ordered via the combined triple must be ordered by the
    two-triple construction; with a total status the two must coincide.

    Requires the weak side of ``triple_a`` to be simple at the status
    positions (checked on fresh variables).
    """
    if not is_simple_for(triple_a.weak, sig.symbols, status):
        raise PreconditionError(
            "weak side of the first triple is not simple at the status "
            "positions"
        )
    combined = combine_triples(triple_a, triple_b)
    universe = enum_terms(sig, vars_, max_size)
    one = mspo_pair_comparator(status, combined)
    two = mgwpo_pair_comparator(status, triple_a, triple_b)
    witness: tuple[Term, Term, str] | None = None
    difference: tuple[Term, Term, str] | None = None
    for s in universe:
        for t in universe:
            w1, s1 = one(s, t)
            w2, s2 = two(s, t)
            if witness is None:
                if w1 and not w2:
                    witness = (s, t, "weak")
                elif s1 and not s2:
                    witness = (s, t, "strict")
            if difference is None:
                if w1 != w2:
                    difference = (s, t, "weak")
                elif s1 != s2:
                    difference = (s, t, "strict")
            if witness is not None and difference is not None:
                break
        if witness is not None and difference is not None:
            break
    return InclusionReport(
        inclusion_ok=witness is None,
        inclusion_witness=witness,
        identical=difference is None,
        difference=difference,
    )


# -- agreement of the flat comparison with the recursive one ------------


def check_fast_agreement(
    pair_a: OrderPair,
    pair_b: OrderPair,
    sig: Signature,
    max_size: int,
    vars_: Sequence[str] = DEFAULT_VARS,
) -> tuple[Term, Term] | None:
    """The flat comparison may replace the recursive one only when both
    sides of the first pair are simple; under that hypothesis the two
    must agree on every pair of terms.

    Returns the first disagreeing pair, or ``None``.
    """
    if not is_simple_for(pair_a.strict, sig.symbols):
        raise PreconditionError(
            "strict side of the first pair is not simple: "
            "f(..., xi, ...) must be strictly greater than xi"
        )
    if not is_simple_for(pair_a.weak, sig.symbols):
        raise PreconditionError("weak side of the first pair is not simple")
    universe = enum_terms(sig, vars_, max_size)
    recursive = gwpo_comparator(pair_a, pair_b)
    flat = fast_comparator(pair_a, pair_b)
    for s in universe:
        for t in universe:
            if recursive(s, t) != flat(s, t):
                return (s, t)
    return None


# -- order laws ---------------------------------------------------------


@dataclass
class LawViolation:
    """A failed law together with the terms that witness the failure."""

    law: str
    witness: tuple[Term, ...]

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        inside = ", ".join(map(repr, self.witness))
        return f"LawViolation({self.law}: {inside})"


def _strict_rows(universe: Sequence[Term], rel: TermRel) -> list[int]:
    """Adjacency bitmask per universe index: bit j set iff rel(u_i, u_j)."""
    rows = []
    for s in universe:
        row = 0
        for j, t in enumerate(universe):
            if rel(s, t):
                row |= 1 << j
        rows.append(row)
    return rows


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _has_cycle(rows: list[int]) -> list[int] | None:
    """Find a cycle in the bitmask digraph; returns its indices or None.

    Kahn's algorithm: repeatedly strip nodes without incoming edges;
    whatever survives lies on or downstream of a cycle.
    """
    n = len(rows)
    indeg = [0] * n
    for row in rows:
        for j in _bits(row):
            indeg[j] += 1
    queue = [i for i in range(n) if indeg[i] == 0]
    seen = 0
    while queue:
        i = queue.pop()
        seen += 1
        for j in _bits(rows[i]):
            indeg[j] -= 1
            if indeg[j] == 0:
                queue.append(j)
    if seen == n:
        return None
    return [i for i in range(n) if indeg[i] > 0]


def _sample_substitution(
    rng: random.Random, vars_: Sequence[str], universe: Sequence[Term]
) -> dict[str, Term]:
    return {v: rng.choice(universe) for v in vars_}


def _substitution_violation(
    rel: TermRel,
    kind: str,
    universe: Sequence[Term],
    vars_: Sequence[str],
    related: list[tuple[Term, Term]],
    subst_budget: int,
    rng: random.Random,
) -> LawViolation | None:
    """Sampled check that ``rel`` survives instantiation."""
    if not related:
        return None
    for k in range(subst_budget):
        sigma = _sample_substitution(rng, vars_, universe)
        s, t = related[k % len(related)]
        if not rel(apply_substitution(s, sigma), apply_substitution(t, sigma)):
            witness = (s, t) + tuple(sigma[v] for v in vars_)
            return LawViolation(f"{kind}-substitution-closure", witness)
    return None


def _context_violation(
    rel: TermRel,
    kind: str,
    universe: Sequence[Term],
    related: list[tuple[Term, Term]],
    rng: random.Random,
) -> LawViolation | None:
    """Check that ``rel`` survives wrapping in every one-hole context
    over the universe, probing two seeded-random related pairs per
    context (random pairing defeats accidental alignment between the
    context walk and the pair list)."""
    if not related:
        return None
    for u in universe:
        for pos, _ in proper_subterms(u):
            for _probe in range(2):
                s, t = related[rng.randrange(len(related))]
                if not rel(replace_at(u, pos, s), replace_at(u, pos, t)):
                    return LawViolation(
                        f"{kind}-context-closure", (s, t, replace_at(u, pos, s))
                    )
    return None


def check_reduction_order_laws(
    gt: TermRel,
    sig: Signature,
    max_size: int,
    subst_budget: int = 200,
    vars_: Sequence[str] = DEFAULT_VARS,
) -> LawViolation | None:
    """Probe the laws a strict reduction order must satisfy.

    Irreflexivity, transitivity and acyclicity are exhaustive over the
    universe; closure under substitutions is sampled with a seeded
    generator (``subst_budget`` draws); closure under contexts walks
    every one-hole context over the universe.  Returns the first
    violation found, or ``None``.
    """
    universe = enum_terms(sig, vars_, max_size)
    for t in universe:
        if gt(t, t):
            return LawViolation("irreflexivity", (t,))
    rows = _strict_rows(universe, gt)
    for i, row in enumerate(rows):
        for j in _bits(row):
            if rows[j] & ~row:
                k = next(iter(_bits(rows[j] & ~row)))
                return LawViolation(
                    "transitivity", (universe[i], universe[j], universe[k])
                )
    cycle = _has_cycle(rows)
    if cycle is not None:
        return LawViolation("acyclicity", tuple(universe[i] for i in cycle[:4]))
    related = [
        (universe[i], universe[j]) for i, row in enumerate(rows) for j in _bits(row)
    ]
    rng = random.Random(_SEED)
    violation = _substitution_violation(
        gt, "strict", universe, vars_, related, subst_budget, rng
    )
    if violation is not None:
        return violation
    return _context_violation(gt, "strict", universe, related, rng)


def check_reduction_pair_laws(
    pair_fn: PairFn,
    sig: Signature,
    max_size: int,
    subst_budget: int = 200,
    vars_: Sequence[str] = DEFAULT_VARS,
    strict_entails_weak: bool = False,
) -> LawViolation | None:
    """Probe the laws a reduction pair must satisfy.

    The weak relation must be reflexive, transitive, and closed under
    substitutions and contexts; the strict relation must be
    irreflexive, transitive, acyclic on the universe, and closed under
    substitutions — but, unlike a reduction order, it owes no context
    closure.  The two must compose without ever closing a loop.

    ``strict_entails_weak`` additionally demands strict ⊆ weak.  The
    status-filtered comparators promise that between their own two
    components, but a composed pair whose weak side intersects extra
    relations does not, so the check is opt-in.  Returns the first
    violation, or ``None``.
    """
    universe = enum_terms(sig, vars_, max_size)
    n = len(universe)

    weak_rows = [0] * n
    strict_rows = [0] * n
    for i, s in enumerate(universe):
        wrow = 0
        srow = 0
        for j, t in enumerate(universe):
            w, st = pair_fn(s, t)
            if strict_entails_weak and st and not w:
                return LawViolation("strict-implies-weak", (s, t))
            if w:
                wrow |= 1 << j
            if st:
                srow |= 1 << j
        weak_rows[i] = wrow
        strict_rows[i] = srow

    for i, t in enumerate(universe):
        if not (weak_rows[i] >> i) & 1:
            return LawViolation("weak-reflexivity", (t,))
        if (strict_rows[i] >> i) & 1:
            return LawViolation("strict-irreflexivity", (t,))

    for name, rows in (("weak", weak_rows), ("strict", strict_rows)):
        for i, row in enumerate(rows):
            for j in _bits(row):
                if rows[j] & ~row:
                    k = next(iter(_bits(rows[j] & ~row)))
                    return LawViolation(
                        f"{name}-transitivity",
                        (universe[i], universe[j], universe[k]),
                    )

    cycle = _has_cycle(strict_rows)
    if cycle is not None:
        return LawViolation(
            "strict-acyclicity", tuple(universe[i] for i in cycle[:4])
        )

    # strict(s, t) and weak(t, u) must never be answered by weak(u, s):
    # that loop would let a decrease be undone.
    for i in range(n):
        for j in _bits(strict_rows[i]):
            for k in _bits(weak_rows[j]):
                if (weak_rows[k] >> i) & 1:
                    return LawViolation(
                        "compatibility", (universe[i], universe[j], universe[k])
                    )

    rng = random.Random(_SEED)
    weak_related = [
        (universe[i], universe[j])
        for i, row in enumerate(weak_rows)
        for j in _bits(row)
        if i != j
    ]
    strict_related = [
        (universe[i], universe[j])
        for i, row in enumerate(strict_rows)
        for j in _bits(row)
    ]

    def weak_rel(s: Term, t: Term) -> bool:
        return pair_fn(s, t)[0]

    def strict_rel(s: Term, t: Term) -> bool:
        return pair_fn(s, t)[1]

    for check in (
        lambda: _substitution_violation(
            weak_rel, "weak", universe, vars_, weak_related, subst_budget, rng
        ),
        lambda: _context_violation(weak_rel, "weak", universe, weak_related, rng),
        lambda: _substitution_violation(
            strict_rel, "strict", universe, vars_, strict_related, subst_budget, rng
        ),
    ):
        violation = check()
        if violation is not None:
            return violation
    return None


# -- canned configurations ----------------------------------------------
#
# The CLI and the acceptance suite run the checks below by name.  Each
# builds its parameters from scratch so a report names everything needed
# to replay it.


@dataclass
class OracleOutcome:
    name: str
    ok: bool
    lines: list[str]


def _identity_stretch_triples() -> tuple[ReductionTriple, ReductionTriple, Signature]:
    """The worked two-triple example: one layer counts nothing but keeps
    order, the next layer separates by a predecessor/successor stretch."""
    p = Symbol("p", 1)
    s = Symbol("s", 1)
    f = Symbol("f", 1)
    algebra_a = LinearPolyInterpretation(
        {p: (0, [1]), s: (1, [1]), f: (0, [1])}
    )
    algebra_b = MaxPlusInterpretation(
        {p: (0, [(1, -1)]), s: (1, [(1, 1)]), f: (1, [(1, 1)])}
    )
    sig = Signature([p, s, f])
    return triple_from_algebra(algebra_a), triple_from_algebra(algebra_b), sig


def _random_simple_triples(
    rng: random.Random, sig: Signature
) -> tuple[ReductionTriple, ReductionTriple]:
    """Draw a simple first layer and an arbitrary second layer."""
    entries = {}
    for sym in sig.symbols:
        # Argument coefficient 1 makes the layer simple by construction;
        # the assertion below keeps us honest about that.
        entries[sym] = (rng.randrange(0, 3), [1] * sym.arity)
    first = triple_from_algebra(LinearPolyInterpretation(entries))
    assert is_simple_for(first.weak, sig.symbols)
    if rng.random() < 0.5:
        ranks = {sym: rng.randrange(0, len(sig.symbols)) for sym in sig.symbols}
        second = triple_from_precedence(Precedence(ranks))
    else:
        entries_b = {}
        for sym in sig.symbols:
            arg_rows = [
                (rng.randrange(0, 2), rng.randrange(-1, 2))
                for _ in range(sym.arity)
            ]
            entries_b[sym] = (rng.randrange(0, 3), arg_rows)
        second = triple_from_algebra(MaxPlusInterpretation(entries_b))
    return first, second


def run_agreement_check(size: int = 5) -> OracleOutcome:
    lines = []
    ok = True
    triple_a, triple_b, sig = _identity_stretch_triples()
    found = check_mgwpo_mspo_agreement(triple_a, triple_b, sig, size)
    lines.append(
        "identity/stretch triples over {p/1, s/1, f/1}: "
        + ("agree" if found is None else f"DISAGREE at {found}")
    )
    ok &= found is None
    rng = random.Random(_SEED)
    sig = default_signature()
    for k in range(3):
        ta, tb = _random_simple_triples(rng, sig)
        found = check_mgwpo_mspo_agreement(ta, tb, sig, size)
        lines.append(
            f"random simple triples #{k + 1}: "
            + ("agree" if found is None else f"DISAGREE at {found}")
        )
        ok &= found is None
    return OracleOutcome("mgwpo-mspo-agreement", ok, lines)


def run_inclusion_check(size: int = 4) -> OracleOutcome:
    lines = []
    ok = True

    # Total status: the two constructions must coincide.
    triple_a, triple_b, sig = _identity_stretch_triples()
    status = Status.total_for(sig.symbols)
    report = check_pair_inclusion(triple_a, triple_b, status, sig, size)
    lines.append(
        "total status over {p/1, s/1, f/1}: "
        + ("identical" if report.identical else f"DIFFER at {report.difference}")
    )
    ok &= report.identical and report.inclusion_ok

    # Empty status over a single unary symbol: inclusion must hold, and
    # the first extra pair of the two-triple construction is pinned.
    f = Symbol("f", 1)
    sig = Signature([f])
    algebra = LinearPolyInterpretation({f: (1, [1])})
    triple = triple_from_algebra(algebra)
    status = Status({f: []})
    report = check_pair_inclusion(triple, triple, status, sig, size)
    lines.append(
        "empty status over {f/1}: inclusion "
        + ("holds" if report.inclusion_ok else f"FAILS at {report.inclusion_witness}")
    )
    ok &= report.inclusion_ok
    x = Var("x")
    expected = (App(f, (x,)), x)
    gap = report.difference
    gap_ok = gap is not None and (gap[0], gap[1]) == expected
    lines.append(
        f"first extra pair: {None if gap is None else (gap[0], gap[1])} "
        + ("(as expected)" if gap_ok else f"(expected {expected})")
    )
    ok &= gap_ok
    return OracleOutcome("pair-inclusion", ok, lines)


def run_fast_agreement_check(size: int = 5) -> OracleOutcome:
    lines = []
    ok = True
    sig = default_signature()
    entries = {sym: (1, [1] * sym.arity) for sym in sig.symbols}
    pair_a = triple_from_algebra(LinearPolyInterpretation(entries)).pair
    ranks = {sym: i for i, sym in enumerate(sig.symbols)}
    pair_b = triple_from_precedence(Precedence(ranks)).pair
    found = check_fast_agreement(pair_a, pair_b, sig, size)
    lines.append(
        "unit-weight layer with precedence tie-break: "
        + ("flat and recursive agree" if found is None else f"DISAGREE at {found}")
    )
    ok &= found is None

    # Negative control: an identity interpretation is not strictly
    # simple, so the hypothesis check must refuse.
    p = Symbol("p", 1)
    weak_only = LinearPolyInterpretation({p: (0, [1])})
    try:
        check_fast_agreement(
            triple_from_algebra(weak_only).pair, pair_b, Signature([p]), 3
        )
    except PreconditionError:
        lines.append("identity layer: hypothesis violation detected")
    else:
        lines.append("identity layer: hypothesis violation MISSED")
        ok = False
    return OracleOutcome("fast-agreement", ok, lines)


def run_law_check(size: int = 4) -> OracleOutcome:
    lines = []
    ok = True

    triple_a, triple_b, sig = _identity_stretch_triples()
    gt = mgwpo_comparator(triple_a, triple_b)
    violation = check_reduction_order_laws(gt, sig, size)
    lines.append(
        "two-layer order, identity/stretch: "
        + ("laws hold" if violation is None else f"VIOLATION {violation}")
    )
    ok &= violation is None

    status = Status.total_for(sig.symbols)
    pair_fn = mgwpo_pair_comparator(status, triple_a, triple_b)
    violation = check_reduction_pair_laws(pair_fn, sig, size)
    lines.append(
        "two-layer pair, total status: "
        + ("laws hold" if violation is None else f"VIOLATION {violation}")
    )
    ok &= violation is None

    # Negative control: the bare superterm relation is not closed under
    # contexts, and the suite has to notice.
    def superterm(s: Term, t: Term) -> bool:
        return any(t == u for _, u in proper_subterms(s))

    violation = check_reduction_order_laws(superterm, sig, 3)
    caught = violation is not None and violation.law == "strict-context-closure"
    lines.append(
        "superterm relation: "
        + (f"violation caught ({violation.law})" if caught else "violation MISSED")
    )
    ok &= caught
    return OracleOutcome("order-laws", ok, lines)


_CHECKS: dict[str, Callable[[int], OracleOutcome]] = {
    "mgwpo-mspo-agreement": run_agreement_check,
    "pair-inclusion": run_inclusion_check,
    "fast-agreement": run_fast_agreement_check,
    "order-laws": run_law_check,
}

# Compact aliases accepted on the command line.
CHECK_ALIASES = {
    "thm2.5": "mgwpo-mspo-agreement",
    "thm3.6": "pair-inclusion",
    "prop2.6": "fast-agreement",
    "laws": "order-laws",
}


def check_names() -> list[str]:
    return sorted(_CHECKS) + sorted(CHECK_ALIASES)


def run_named_check(name: str, size: int | None = None) -> OracleOutcome:
    """Run one canned check by name or alias."""
    resolved = CHECK_ALIASES.get(name, name)
    if resolved not in _CHECKS:
        raise KeyError(name)
    runner = _CHECKS[resolved]
    if size is None:
        return runner()  # type: ignore[call-arg]
    return runner(size)
