"""The path orders themselves.

Two families are implemented on top of order pairs / reduction triples
(see ``triples``):

* recursive comparators in the reduction-*order* style — ``gwpo_gt`` (two
  order pairs, with the case-1 shortcut through the strict base relation),
  ``spo_gt`` (a single pair), their monotonic intersections ``mgwpo_gt`` /
  ``mspo_gt``, and ``gwpo_fast_gt``, the flat variant that is equivalent
  whenever both base relations of the first pair have the subterm
  property and needs only linearly many base comparisons;

* reduction-*pair* comparators parameterized by a partial argument status
  — ``gwpo_pair`` / ``spo_pair`` return (weak, strict) verdicts, and
  ``mgwpo_pair`` / ``mspo_pair`` intersect the weak side with the triple
  preorders.

Every comparator has an ``explain_*`` companion that reports the chain of
definition cases justifying a verdict; proofs print those chains.  Base
relation usage is observable through ``ComparisonStats``.
"""

from __future__ import annotations

from typing import Callable, Mapping, Sequence

from .terms import App, Signature, Symbol, Term, Var, enumerate_terms
from .triples import OrderPair, ReductionTriple


class Status:
    """Partial argument selection: per symbol, a strictly increasing list
    of argument positions the recursive comparisons may use."""

    __slots__ = ("entries",)

    def __init__(self, entries: Mapping[Symbol, Sequence[int]]):
        self.entries: dict[Symbol, tuple[int, ...]] = {}
        for sym, positions in entries.items():
            positions = tuple(positions)
            for p in positions:
                if not 1 <= p <= sym.arity:
                    raise ValueError(f"position {p} out of range for {sym.name}")
            if any(a >= b for a, b in zip(positions, positions[1:])):
                raise ValueError(f"positions for {sym.name} must strictly increase")
            self.entries[sym] = positions

    def positions(self, sym: Symbol) -> tuple[int, ...]:
        return self.entries[sym]

    def select(self, sym: Symbol, items: Sequence) -> list:
        return [items[i - 1] for i in self.entries[sym]]

    def is_total(self, symbols: Sequence[Symbol] | None = None) -> bool:
        syms = tuple(symbols) if symbols is not None else tuple(self.entries)
        return all(
            self.entries.get(s) == tuple(range(1, s.arity + 1)) for s in syms
        )

    @classmethod
    def total_for(cls, symbols: Sequence[Symbol]) -> "Status":
        return cls({s: range(1, s.arity + 1) for s in symbols})

    @classmethod
    def empty_for(cls, symbols: Sequence[Symbol]) -> "Status":
        return cls({s: () for s in symbols})

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Status) and other.entries == self.entries

    def __hash__(self) -> int:
        return hash(tuple(sorted((s.name, p) for s, p in self.entries.items())))

    def __repr__(self) -> str:
        inner = ", ".join(
            f"{s.name}:{list(p)}" for s, p in self.entries.items()
        )
        return f"Status({inner})"


class ComparisonStats:
    """Counts calls issued to the base relations during one comparison.

    Only order-pair consultations are counted (the weak/strict relations
    of pairs A and B); the preorder conjuncts of the monotonic variants
    are not base comparisons in this sense.  Memoized comparators issue
    each call at most once per term pair.
    """

    __slots__ = ("weak_a", "strict_a", "weak_b", "strict_b")

    def __init__(self) -> None:
        self.weak_a = 0
        self.strict_a = 0
        self.weak_b = 0
        self.strict_b = 0

    def total(self) -> int:
        return self.weak_a + self.strict_a + self.weak_b + self.strict_b

    def __repr__(self) -> str:
        return (
            f"ComparisonStats(weak_a={self.weak_a}, strict_a={self.strict_a}, "
            f"weak_b={self.weak_b}, strict_b={self.strict_b})"
        )


def lex_strict(xs: Sequence[Term], ys: Sequence[Term], gt) -> bool:
    """Lexicographic extension of a single strict order.

    Positions before the deciding one must be syntactically equal; a
    longer list with an equal shared prefix beats a shorter one.
    """
    for x, y in zip(xs, ys):
        if x == y:
            continue
        return gt(x, y)
    return len(xs) > len(ys)


def pair_lex(xs: Sequence[Term], ys: Sequence[Term], ge, gt) -> tuple[bool, bool]:
    """Lexicographic extension of a weak/strict pair.

    Strict: weakly related on a prefix, strictly at the first deciding
    position — or ``xs`` longer with the shared prefix weakly related.
    Weak: strict, or equal lengths with all positions weakly related.
    """
    for x, y in zip(xs, ys):
        if gt(x, y):
            return (True, True)
        if not ge(x, y):
            return (False, False)
    if len(xs) > len(ys):
        return (True, True)
    if len(xs) == len(ys):
        return (True, False)
    return (False, False)


_MISS = object()


class _GtSession:
    """One top-level recursive comparison: memo table plus stats."""

    __slots__ = ("pa", "pb", "stats", "memo")

    def __init__(self, pa: OrderPair, pb: OrderPair, stats: ComparisonStats | None):
        self.pa = pa
        self.pb = pb
        self.stats = stats if stats is not None else ComparisonStats()
        self.memo: dict[tuple[Term, Term], bool] = {}

    # -- counted base-relation calls ------------------------------------
    def strict_a(self, s: Term, t: Term) -> bool:
        self.stats.strict_a += 1
        return self.pa.strict(s, t)

    def weak_a(self, s: Term, t: Term) -> bool:
        self.stats.weak_a += 1
        return self.pa.weak(s, t)

    def strict_b(self, s: Term, t: Term) -> bool:
        self.stats.strict_b += 1
        return self.pb.strict(s, t)

    def weak_b(self, s: Term, t: Term) -> bool:
        self.stats.weak_b += 1
        return self.pb.weak(s, t)

    def gt(self, s: Term, t: Term) -> bool:
        key = (s, t)
        hit = self.memo.get(key, _MISS)
        if hit is not _MISS:
            return hit
        out = self._compute(s, t)
        self.memo[key] = out
        return out

    def _compute(self, s: Term, t: Term) -> bool:
        # case 1
        if self.strict_a(s, t):
            return True
        # case 2 requires an application on the left
        if isinstance(s, App) and self.weak_a(s, t):
            # case 2a
            for si in s.args:
                if si == t or self.gt(si, t):
                    return True
            # case 2b
            if isinstance(t, App) and all(self.gt(s, tj) for tj in t.args):
                if self.strict_b(s, t):  # 2b(i)
                    return True
                if self.weak_b(s, t) and lex_strict(s.args, t.args, self.gt):
                    return True  # 2b(ii)
        return False


def gwpo_gt(
    s: Term,
    t: Term,
    pair_a: OrderPair,
    pair_b: OrderPair,
    stats: ComparisonStats | None = None,
) -> bool:
    """Recursive comparator over two order pairs.

    Holds if (1) the strict A relation does, or (2) ``s`` is an
    application weakly A-related to ``t`` and either (a) some argument
    of ``s`` equals or dominates ``t``, or (b) ``s`` dominates all
    arguments of the application ``t`` and beats it by the strict B
    relation (i) or by the weak B relation plus a lexicographic descent
    through the argument lists (ii).
    """
    return _GtSession(pair_a, pair_b, stats).gt(s, t)


def mgwpo_gt(
    s: Term, t: Term, triple_a: ReductionTriple, triple_b: ReductionTriple
) -> bool:
    """``gwpo_gt`` intersected with both triple preorders."""
    return (
        triple_a.ge(s, t)
        and triple_b.ge(s, t)
        and gwpo_gt(s, t, triple_a.pair, triple_b.pair)
    )


class _SpoGtSession:
    __slots__ = ("pair", "memo")

    def __init__(self, pair: OrderPair):
        self.pair = pair
        self.memo: dict[tuple[Term, Term], bool] = {}

    def gt(self, s: Term, t: Term) -> bool:
        key = (s, t)
        hit = self.memo.get(key, _MISS)
        if hit is not _MISS:
            return hit
        out = self._compute(s, t)
        self.memo[key] = out
        return out

    def _compute(self, s: Term, t: Term) -> bool:
        if not isinstance(s, App):
            return False
        # case a
        for si in s.args:
            if si == t or self.gt(si, t):
                return True
        # case b
        if isinstance(t, App) and all(self.gt(s, tj) for tj in t.args):
            if self.pair.strict(s, t):  # b(i)
                return True
            if self.pair.weak(s, t) and lex_strict(s.args, t.args, self.gt):
                return True  # b(ii)
        return False


def spo_gt(s: Term, t: Term, pair: OrderPair) -> bool:
    """Recursive comparator over a single order pair; no shortcut case."""
    return _SpoGtSession(pair).gt(s, t)


def mspo_gt(s: Term, t: Term, triple: ReductionTriple) -> bool:
    """``spo_gt`` intersected with the triple preorder."""
    return triple.ge(s, t) and spo_gt(s, t, triple.pair)


class _FastSession:
    """Flat comparator; sound when both A relations have the subterm
    property.  No memo: the recursion follows a single lexicographic
    spine, so the number of base comparisons is linear in the sizes."""

    __slots__ = ("pa", "pb", "stats")

    def __init__(self, pa: OrderPair, pb: OrderPair, stats: ComparisonStats | None):
        self.pa = pa
        self.pb = pb
        self.stats = stats if stats is not None else ComparisonStats()

    def gt(self, s: Term, t: Term) -> bool:
        # case 1
        self.stats.strict_a += 1
        if self.pa.strict(s, t):
            return True
        # case 2
        if isinstance(s, App) and isinstance(t, App):
            self.stats.weak_a += 1
            if self.pa.weak(s, t):
                self.stats.strict_b += 1
                if self.pb.strict(s, t):  # 2(i)
                    return True
                self.stats.weak_b += 1
                if self.pb.weak(s, t) and lex_strict(s.args, t.args, self.gt):
                    return True  # 2(ii)
        return False


def gwpo_fast_gt(
    s: Term,
    t: Term,
    pair_a: OrderPair,
    pair_b: OrderPair,
    stats: ComparisonStats | None = None,
) -> bool:
    """Flat variant of ``gwpo_gt``: no argument case, no all-arguments
    premise.  Equivalent to ``gwpo_gt`` whenever the weak and strict A
    relations both have the subterm property (the caller's obligation;
    for interpretation-induced pairs use ``check_strictly_simple``)."""
    return _FastSession(pair_a, pair_b, stats).gt(s, t)


class _GwpoPairSession:
    """Simultaneous weak/strict comparison with a partial status."""

    __slots__ = ("status", "pa", "pb", "memo")

    def __init__(self, status: Status, pa: OrderPair, pb: OrderPair):
        self.status = status
        self.pa = pa
        self.pb = pb
        self.memo: dict[tuple[Term, Term], tuple[bool, bool]] = {}

    def compare(self, s: Term, t: Term) -> tuple[bool, bool]:
        key = (s, t)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        out = self._compute(s, t)
        self.memo[key] = out
        return out

    def _compute(self, s: Term, t: Term) -> tuple[bool, bool]:
        # case 1
        if self.pa.strict(s, t):
            return (True, True)
        # every case-2 branch sits under the weak A guard
        if not self.pa.weak(s, t):
            return (False, False)
        if isinstance(s, App):
            # case 2a: a selected argument weakly reaches t
            for i in self.status.positions(s.sym):
                if self.compare(s.args[i - 1], t)[0]:
                    return (True, True)
            # case 2b
            if isinstance(t, App):
                if all(
                    self.compare(s, tj)[1]
                    for tj in self.status.select(t.sym, t.args)
                ):
                    if self.pb.strict(s, t):  # 2b(i)
                        return (True, True)
                    if self.pb.weak(s, t):  # 2b(ii)
                        lw, ls = pair_lex(
                            self.status.select(s.sym, s.args),
                            self.status.select(t.sym, t.args),
                            lambda x, y: self.compare(x, y)[0],
                            lambda x, y: self.compare(x, y)[1],
                        )
                        if ls:
                            return (True, True)
                        if lw:
                            return (True, False)
        # case 2c: identical variables are weakly related (still guarded)
        if isinstance(s, Var) and s == t:
            return (True, False)
        return (False, False)


def gwpo_pair(
    s: Term, t: Term, status: Status, pair_a: OrderPair, pair_b: OrderPair
) -> tuple[bool, bool]:
    """(weak, strict) verdicts of the status-filtered two-pair order."""
    return _GwpoPairSession(status, pair_a, pair_b).compare(s, t)


def mgwpo_pair(
    s: Term,
    t: Term,
    status: Status,
    triple_a: ReductionTriple,
    triple_b: ReductionTriple,
) -> tuple[bool, bool]:
    """Weak side intersected with both triple preorders; strict unchanged."""
    w, st = gwpo_pair(s, t, status, triple_a.pair, triple_b.pair)
    return (w and triple_a.ge(s, t) and triple_b.ge(s, t), st)


class _SpoPairSession:
    """Simultaneous weak/strict comparison over a single pair."""

    __slots__ = ("status", "pair", "memo")

    def __init__(self, status: Status, pair: OrderPair):
        self.status = status
        self.pair = pair
        self.memo: dict[tuple[Term, Term], tuple[bool, bool]] = {}

    def compare(self, s: Term, t: Term) -> tuple[bool, bool]:
        key = (s, t)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        out = self._compute(s, t)
        self.memo[key] = out
        return out

    def _compute(self, s: Term, t: Term) -> tuple[bool, bool]:
        if isinstance(s, App):
            # case 1
            for i in self.status.positions(s.sym):
                if self.compare(s.args[i - 1], t)[0]:
                    return (True, True)
            # case 2
            if isinstance(t, App):
                if all(
                    self.compare(s, tj)[1]
                    for tj in self.status.select(t.sym, t.args)
                ):
                    if self.pair.strict(s, t):  # 2a
                        return (True, True)
                    if self.pair.weak(s, t):  # 2b
                        lw, ls = pair_lex(
                            self.status.select(s.sym, s.args),
                            self.status.select(t.sym, t.args),
                            lambda x, y: self.compare(x, y)[0],
                            lambda x, y: self.compare(x, y)[1],
                        )
                        if ls:
                            return (True, True)
                        if lw:
                            return (True, False)
            return (False, False)
        # case 3: identical variables, no guard
        if isinstance(s, Var) and s == t:
            return (True, False)
        return (False, False)


def spo_pair(
    s: Term, t: Term, status: Status, pair: OrderPair
) -> tuple[bool, bool]:
    """(weak, strict) verdicts of the status-filtered single-pair order."""
    return _SpoPairSession(status, pair).compare(s, t)


def mspo_pair(
    s: Term, t: Term, status: Status, triple: ReductionTriple
) -> tuple[bool, bool]:
    """Weak side intersected with the triple preorder; strict unchanged."""
    w, st = spo_pair(s, t, status, triple.pair)
    return (w and triple.ge(s, t), st)


def ground_totality(gt, sig: Signature, size_bound: int) -> tuple[Term, Term] | None:
    """Check that ``gt`` relates every pair of distinct ground terms.

    Enumerates all ground terms over ``sig`` up to ``size_bound`` and
    returns the first incomparable pair, or None when all are comparable.
    Raises ValueError if the signature admits no ground terms.
    """
    terms = enumerate_terms(sig.symbols, [], size_bound)
    if not terms:
        raise ValueError("signature admits no ground terms")
    for i, s in enumerate(terms):
        for t in terms[i + 1 :]:
            if not (gt(s, t) or gt(t, s)):
                return (s, t)
    return None


# -- reusable comparators ----------------------------------------------
#
# The one-shot functions above open a fresh memo per call.  Exhaustive
# checks and certificate search compare huge families of term pairs
# against fixed parameters, where sharing one session across all calls
# changes the complexity class.  These factories return plain callables
# backed by a single session.


def gwpo_comparator(
    pair_a: OrderPair, pair_b: OrderPair, stats: ComparisonStats | None = None
):
    """A ``gt(s, t)`` callable sharing one memo across calls."""
    return _GtSession(pair_a, pair_b, stats).gt


def mgwpo_comparator(triple_a: ReductionTriple, triple_b: ReductionTriple):
    gt = _GtSession(triple_a.pair, triple_b.pair, None).gt

    def compare(s: Term, t: Term) -> bool:
        return triple_a.ge(s, t) and triple_b.ge(s, t) and gt(s, t)

    return compare


def spo_comparator(pair: OrderPair):
    """A ``gt(s, t)`` callable sharing one memo across calls."""
    return _SpoGtSession(pair).gt


def mspo_comparator(triple: ReductionTriple):
    gt = _SpoGtSession(triple.pair).gt

    def compare(s: Term, t: Term) -> bool:
        return triple.ge(s, t) and gt(s, t)

    return compare


def fast_comparator(
    pair_a: OrderPair, pair_b: OrderPair, stats: ComparisonStats | None = None
):
    """A flat-variant ``gt(s, t)`` callable (see ``gwpo_fast_gt``)."""
    return _FastSession(pair_a, pair_b, stats).gt


def gwpo_pair_comparator(status: Status, pair_a: OrderPair, pair_b: OrderPair):
    """A ``compare(s, t) -> (weak, strict)`` callable with a shared memo."""
    return _GwpoPairSession(status, pair_a, pair_b).compare


def mgwpo_pair_comparator(
    status: Status, triple_a: ReductionTriple, triple_b: ReductionTriple
):
    compare = _GwpoPairSession(status, triple_a.pair, triple_b.pair).compare

    def pair_fn(s: Term, t: Term) -> tuple[bool, bool]:
        w, st = compare(s, t)
        return (w and triple_a.ge(s, t) and triple_b.ge(s, t), st)

    return pair_fn


def spo_pair_comparator(status: Status, pair: OrderPair):
    """A ``compare(s, t) -> (weak, strict)`` callable with a shared memo."""
    return _SpoPairSession(status, pair).compare


def mspo_pair_comparator(status: Status, triple: ReductionTriple):
    compare = _SpoPairSession(status, triple.pair).compare

    def pair_fn(s: Term, t: Term) -> tuple[bool, bool]:
        w, st = compare(s, t)
        return (w and triple.ge(s, t), st)

    return pair_fn


# -- explanations ------------------------------------------------------
#
# Each explainer re-runs a comparison, then walks the first case (in
# definition order) that justifies the verdict, descending into the
# distinguished sub-comparison of that case: the witness argument for the
# argument cases, the first strictly decreasing position for the
# lexicographic cases.  The result is the tuple of case labels along that
# spine, or None when the comparison does not hold.


def explain_gwpo_gt(
    s: Term, t: Term, pair_a: OrderPair, pair_b: OrderPair
) -> tuple[str, ...] | None:
    session = _GtSession(pair_a, pair_b, None)
    if not session.gt(s, t):
        return None
    chain: list[str] = []
    cur: tuple[Term, Term] | None = (s, t)
    while cur is not None:
        label, cur = _gt_case(session, *cur)
        chain.append(label)
    return tuple(chain)


def _gt_case(session: _GtSession, s: Term, t: Term):
    if session.pa.strict(s, t):
        return ("1", None)
    assert isinstance(s, App)  # a true verdict needs case 1 or an application
    for si in s.args:
        if si == t:
            return ("2a", None)
        if session.gt(si, t):
            return ("2a", (si, t))
    if session.pb.strict(s, t):
        return ("2b(i)", None)
    for x, y in zip(s.args, t.args):
        if x == y:
            continue
        return ("2b(ii)", (x, y))
    return ("2b(ii)", None)  # decided by the length of the argument lists


def explain_fast_gt(
    s: Term, t: Term, pair_a: OrderPair, pair_b: OrderPair
) -> tuple[str, ...] | None:
    session = _FastSession(pair_a, pair_b, None)
    if not session.gt(s, t):
        return None
    chain: list[str] = []
    cur: tuple[Term, Term] | None = (s, t)
    while cur is not None:
        s_, t_ = cur
        if session.pa.strict(s_, t_):
            chain.append("1")
            cur = None
        elif session.pb.strict(s_, t_):
            chain.append("2(i)")
            cur = None
        else:
            chain.append("2(ii)")
            cur = None
            for x, y in zip(s_.args, t_.args):
                if x != y:
                    cur = (x, y)
                    break
    return tuple(chain)


def explain_gwpo_pair(
    s: Term,
    t: Term,
    status: Status,
    pair_a: OrderPair,
    pair_b: OrderPair,
    want_strict: bool,
) -> tuple[str, ...] | None:
    session = _GwpoPairSession(status, pair_a, pair_b)
    w, st = session.compare(s, t)
    if not (st if want_strict else w):
        return None
    chain: list[str] = []
    cur: tuple[Term, Term, bool] | None = (s, t, want_strict)
    while cur is not None:
        label, cur = _gwpo_pair_case(session, *cur)
        chain.append(label)
    return tuple(chain)


def _gwpo_pair_case(session: _GwpoPairSession, s: Term, t: Term, want_strict: bool):
    if session.pa.strict(s, t):
        return ("1", None)
    if isinstance(s, App):
        for i in session.status.positions(s.sym):
            if session.compare(s.args[i - 1], t)[0]:
                return ("2a", (s.args[i - 1], t, False))
        # cases 1 and 2a are out, so for an application the verdict came
        # from 2b; only the subcase needs to be identified
        if isinstance(t, App):
            if session.pb.strict(s, t):
                return ("2b(i)", None)
            return (
                "2b(ii)",
                _lex_witness(
                    session,
                    session.status.select(s.sym, s.args),
                    session.status.select(t.sym, t.args),
                ),
            )
    return ("2c", None)


def explain_spo_pair(
    s: Term, t: Term, status: Status, pair: OrderPair, want_strict: bool
) -> tuple[str, ...] | None:
    session = _SpoPairSession(status, pair)
    w, st = session.compare(s, t)
    if not (st if want_strict else w):
        return None
    chain: list[str] = []
    cur: tuple[Term, Term, bool] | None = (s, t, want_strict)
    while cur is not None:
        label, cur = _spo_pair_case(session, *cur)
        chain.append(label)
    return tuple(chain)


def _spo_pair_case(session: _SpoPairSession, s: Term, t: Term, want_strict: bool):
    if isinstance(s, App):
        for i in session.status.positions(s.sym):
            if session.compare(s.args[i - 1], t)[0]:
                return ("1", (s.args[i - 1], t, False))
        # case 1 is out, so the verdict came from case 2 (t must be an
        # application); only the subcase needs to be identified
        if session.pair.strict(s, t):
            return ("2a", None)
        return (
            "2b",
            _lex_witness(
                session,
                session.status.select(s.sym, s.args),
                session.status.select(t.sym, t.args),
            ),
        )
    return ("3", None)


def _lex_witness(session, xs: list, ys: list):
    """First strictly decreasing position of a successful pair lex, as a
    continuation triple, or None when length or equal-length weakness
    decided it."""
    for x, y in zip(xs, ys):
        w, st = session.compare(x, y)
        if st:
            return (x, y, True)
        if not w:
            return None
    return None
