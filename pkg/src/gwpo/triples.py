"""Order pairs, reduction triples, and the constructions that produce them.

An order pair is a weak/strict pair of term relations (written here as
``weak`` for the compatible quasi-order and ``strict`` for the
well-founded part).  A reduction triple adds a rewrite preorder ``ge``
that the pair is harmonious with: whenever an argument weakly decreases
under ``ge``, replacing it under any function symbol weakly decreases the
whole term under ``weak``.

Provided constructions:

* ``triple_from_algebra`` — all three relations by symbolic comparison of
  interpreted terms;
* ``triple_from_precedence`` — ``ge`` universal, pair by comparing root
  symbol ranks;
* ``triple_from_reduction_pair`` — reuse a weak/strict pair as a triple;
* ``trivial_triple`` — everything weakly related, nothing strictly;
* ``marked_triple`` — pair comparisons act on copies of the terms whose
  root symbols are replaced by their root-marker counterparts, letting
  the root be weighed differently from inner occurrences;
* ``lex_combine`` — lexicographic combination of two order pairs.

Harmony is a semantic property, so ``sample_harmony`` validates it on an
enumerated universe instead of assuming it for foreign comparators.
"""

from __future__ import annotations

from typing import Callable, Mapping

from .algebra import Interpretation, abstract, cmp_strict, cmp_weak
from .terms import App, Signature, Term, Var, bang_root, enumerate_terms

TermRel = Callable[[Term, Term], bool]

_MISS = object()


def _memoized(rel: TermRel) -> TermRel:
    cache: dict[tuple[Term, Term], bool] = {}

    def wrapped(s: Term, t: Term) -> bool:
        key = (s, t)
        hit = cache.get(key, _MISS)
        if hit is _MISS:
            hit = cache[key] = rel(s, t)
        return hit

    return wrapped


class OrderPair:
    """A weak/strict pair of term relations."""

    __slots__ = ("weak", "strict", "label")

    def __init__(self, weak: TermRel, strict: TermRel, label: str = "pair"):
        self.weak = weak
        self.strict = strict
        self.label = label

    def __repr__(self) -> str:
        return f"OrderPair({self.label})"


class ReductionTriple:
    """A rewrite preorder ``ge`` together with a compatible order pair."""

    __slots__ = ("ge", "pair", "label")

    def __init__(self, ge: TermRel, pair: OrderPair, label: str = "triple"):
        self.ge = ge
        self.pair = pair
        self.label = label

    @property
    def weak(self) -> TermRel:
        return self.pair.weak

    @property
    def strict(self) -> TermRel:
        return self.pair.strict

    def __repr__(self) -> str:
        return f"ReductionTriple({self.label})"


class Precedence:
    """A total preorder on symbols given by natural-valued ranks."""

    __slots__ = ("ranks",)

    def __init__(self, ranks: Mapping):
        for sym, rank in ranks.items():
            if rank < 0:
                raise ValueError(f"negative rank for {sym.name}")
        self.ranks = dict(ranks)

    def rank(self, sym) -> int:
        return self.ranks[sym]

    def __repr__(self) -> str:
        inner = ", ".join(f"{s.name}:{r}" for s, r in self.ranks.items())
        return f"Precedence({inner})"


def triple_from_algebra(interp: Interpretation) -> ReductionTriple:
    """All three relations decided by symbolic comparison under ``interp``.

    ``ge`` and ``weak`` coincide; ``strict`` is the strict comparison.
    """

    @_memoized
    def weak(s: Term, t: Term) -> bool:
        return cmp_weak(abstract(interp, s), abstract(interp, t))

    @_memoized
    def strict(s: Term, t: Term) -> bool:
        return cmp_strict(abstract(interp, s), abstract(interp, t))

    return ReductionTriple(weak, OrderPair(weak, strict, "algebra"), "algebra")


def triple_from_precedence(prec: Precedence) -> ReductionTriple:
    """``ge`` relates everything; the pair compares root-symbol ranks.

    Variables have no root symbol, so the pair never relates them.
    """

    def weak(s: Term, t: Term) -> bool:
        return (
            isinstance(s, App)
            and isinstance(t, App)
            and prec.rank(s.sym) >= prec.rank(t.sym)
        )

    def strict(s: Term, t: Term) -> bool:
        return (
            isinstance(s, App)
            and isinstance(t, App)
            and prec.rank(s.sym) > prec.rank(t.sym)
        )

    return ReductionTriple(
        lambda s, t: True, OrderPair(weak, strict, "precedence"), "precedence"
    )


def triple_from_reduction_pair(weak: TermRel, strict: TermRel) -> ReductionTriple:
    """View a reduction pair as the triple (weak, weak, strict)."""
    return ReductionTriple(weak, OrderPair(weak, strict, "pair"), "pair")


def trivial_triple() -> ReductionTriple:
    """Everything weakly related, nothing strictly related."""
    return ReductionTriple(
        lambda s, t: True,
        OrderPair(lambda s, t: True, lambda s, t: False, "trivial"),
        "trivial",
    )


def marked_triple(interp: Interpretation) -> ReductionTriple:
    """Pair comparisons on root-marked copies, ``ge`` on the plain terms.

    Two terms are weakly related if they are the same variable, or both
    are applications whose root-marked copies compare weakly under
    ``interp``; strictly related only in the latter shape with a strict
    comparison.  ``interp`` must cover the root-marker symbols alongside
    the plain ones.
    """
    banged: dict[Term, Term] = {}

    def bang(t: Term) -> Term:
        out = banged.get(t)
        if out is None:
            out = banged[t] = bang_root(t)
        return out

    @_memoized
    def ge(s: Term, t: Term) -> bool:
        return cmp_weak(abstract(interp, s), abstract(interp, t))

    @_memoized
    def weak(s: Term, t: Term) -> bool:
        if isinstance(s, Var) or isinstance(t, Var):
            return s == t and isinstance(s, Var)
        return cmp_weak(abstract(interp, bang(s)), abstract(interp, bang(t)))

    @_memoized
    def strict(s: Term, t: Term) -> bool:
        if isinstance(s, Var) or isinstance(t, Var):
            return False
        return cmp_strict(abstract(interp, bang(s)), abstract(interp, bang(t)))

    return ReductionTriple(ge, OrderPair(weak, strict, "marked"), "marked")


def lex_combine(pa: OrderPair, pb: OrderPair) -> OrderPair:
    """Lexicographic combination of two order pairs.

    Strict: strict in the first pair, or weak in the first and strict in
    the second.  Weak: strict in the first, or weak in both.
    """

    def strict(s: Term, t: Term) -> bool:
        return pa.strict(s, t) or (pa.weak(s, t) and pb.strict(s, t))

    def weak(s: Term, t: Term) -> bool:
        return pa.strict(s, t) or (pa.weak(s, t) and pb.weak(s, t))

    return OrderPair(weak, strict, f"lex({pa.label},{pb.label})")


def combine_triples(ta: ReductionTriple, tb: ReductionTriple) -> ReductionTriple:
    """Intersect the rewrite preorders and lex-combine the pairs."""

    def ge(s: Term, t: Term) -> bool:
        return ta.ge(s, t) and tb.ge(s, t)

    return ReductionTriple(ge, lex_combine(ta.pair, tb.pair), f"{ta.label};{tb.label}")


def sample_harmony(
    triple: ReductionTriple,
    sig: Signature,
    budget: int = 2000,
    max_size: int = 3,
) -> tuple[Term, Term] | None:
    """Search for a harmony violation on an enumerated universe.

    For every function symbol ``f``, argument position ``i`` and universe
    pair ``a >= b`` under ``ge``, the terms ``f(.., a, ..)`` and
    ``f(.., b, ..)`` (other positions filled with fresh variables) must be
    related by ``weak``.  Returns the first violating pair of terms, or
    None if no violation is found within ``budget`` checks.
    """
    universe = enumerate_terms(sig.symbols, ["x", "y"], max_size)
    checked = 0
    for sym in sig.symbols:
        for i in range(sym.arity):
            frame = [Var(f"w{k}") for k in range(1, sym.arity + 1)]
            for big in universe:
                for small in universe:
                    if checked >= budget:
                        return None
                    if not triple.ge(big, small):
                        continue
                    checked += 1
                    args_s = list(frame)
                    args_t = list(frame)
                    args_s[i] = big
                    args_t[i] = small
                    s = App(sym, args_s)
                    t = App(sym, args_t)
                    if not triple.weak(s, t):
                        return (s, t)
    return None
