"""Weakly monotone interpretations over the naturals and a symbolic
abstraction for comparing interpreted terms.

Two interpretation shapes are supported:

* linear polynomials  ``f(x1..xn) = a0 + a1*x1 + ... + an*xn`` with natural
  coefficients, and
* max/plus functions  ``f(x1..xn) = max(c0, b1*x1 + c1, ..., bn*xn + cn)``
  with ``bi`` in {0, 1}, ``c0 >= 0`` and possibly negative offsets ``ci``.

A term interpreted by either shape denotes a max of finitely many affine
branches in its variables.  ``SymbolicValue`` captures exactly that: a
normalized set of branches ``(constant, coefficient map)`` where all
coefficients are natural and at least one branch has a non-negative
constant, which keeps the overall value a natural for every assignment.
Branch-wise dominance then gives a sound (not complete) comparison of two
interpreted terms for *all* natural assignments at once.
"""

from __future__ import annotations

from typing import Iterable, Mapping, Sequence

from .terms import App, Symbol, Term, Var

# A branch is (constant, ((var, coeff), ...)) with coeff >= 1 and the
# variable entries sorted by name.
Branch = tuple[int, tuple[tuple[str, int], ...]]


class InterpretationError(ValueError):
    pass


def _branch(const: int, coeffs: Mapping[str, int]) -> Branch:
    return (const, tuple(sorted((v, c) for v, c in coeffs.items() if c != 0)))


def _dominates(b1: Branch, b2: Branch, strictly: bool) -> bool:
    """Does branch ``b1`` reach at least (resp. above) ``b2`` everywhere?"""
    c1, v1 = b1
    c2, v2 = b2
    if c1 < c2 or (strictly and c1 == c2):
        return False
    if not v2:
        return True
    d1 = dict(v1)
    return all(d1.get(name, 0) >= k for name, k in v2)


class SymbolicValue:
    """A max of affine branches over named variables.

    The branch set is normalized: duplicates and branches dominated by
    another branch are removed.  Construction keeps the invariant that
    some branch has a non-negative constant (all coefficients are natural
    by construction), so the denoted value is a natural for every natural
    assignment.
    """

    __slots__ = ("branches",)

    def __init__(self, branches: Iterable[Branch]):
        pool = sorted(set(branches))
        if not pool:
            raise InterpretationError("a symbolic value needs at least one branch")
        kept = [
            b
            for b in pool
            if not any(o != b and _dominates(o, b, strictly=False) for o in pool)
        ]
        # Mutually dominating branches are equal and already deduplicated,
        # so ``kept`` is never empty.
        self.branches = tuple(kept)
        if all(c < 0 for c, _ in self.branches):
            raise InterpretationError("no branch with a non-negative constant")

    def value(self, assignment: Mapping[str, int]) -> int:
        """Evaluate under an assignment of naturals to variables."""
        return max(
            c + sum(k * assignment[v] for v, k in coeffs)
            for c, coeffs in self.branches
        )

    def __eq__(self, other: object) -> bool:
        return isinstance(other, SymbolicValue) and other.branches == self.branches

    def __hash__(self) -> int:
        return hash(self.branches)

    def __repr__(self) -> str:
        parts = []
        for c, coeffs in self.branches:
            terms = [f"{k}*{v}" if k != 1 else v for v, k in coeffs]
            if c or not terms:
                terms.append(str(c))
            parts.append(" + ".join(terms))
        return "max{" + ", ".join(parts) + "}"


def cmp_weak(u: SymbolicValue, v: SymbolicValue) -> bool:
    """True only if ``u`` is at least ``v`` under every natural assignment.

    Every branch of ``v`` must be dominated by some branch of ``u``.  The
    check is sound but not complete.
    """
    return all(
        any(_dominates(bu, bv, strictly=False) for bu in u.branches)
        for bv in v.branches
    )


def cmp_strict(u: SymbolicValue, v: SymbolicValue) -> bool:
    """True only if ``u`` is strictly above ``v`` under every assignment."""
    return all(
        any(_dominates(bu, bv, strictly=True) for bu in u.branches)
        for bv in v.branches
    )


class Interpretation:
    """Base class mapping symbols to weakly monotone functions."""

    def __init__(self) -> None:
        self._cache: dict[Term, SymbolicValue] = {}

    def symbols(self) -> tuple[Symbol, ...]:
        raise NotImplementedError

    def value(self, sym: Symbol, args: Sequence[int]) -> int:
        raise NotImplementedError

    def symbolic(self, sym: Symbol, args: Sequence[SymbolicValue]) -> SymbolicValue:
        raise NotImplementedError


class LinearPolyInterpretation(Interpretation):
    """``f(x1..xn) = a0 + a1*x1 + ... + an*xn`` with natural coefficients.

    Entries map each symbol to ``(a0, (a1, .., an))``.
    """

    def __init__(self, entries: Mapping[Symbol, tuple[int, Sequence[int]]]):
        super().__init__()
        self.entries: dict[Symbol, tuple[int, tuple[int, ...]]] = {}
        for sym, (const, coeffs) in entries.items():
            coeffs = tuple(coeffs)
            if len(coeffs) != sym.arity:
                raise InterpretationError(
                    f"{sym.name}: expected {sym.arity} coefficients, got {len(coeffs)}"
                )
            if const < 0 or any(c < 0 for c in coeffs):
                raise InterpretationError(
                    f"{sym.name}: linear coefficients must be naturals"
                )
            self.entries[sym] = (const, coeffs)

    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(self.entries)

    def value(self, sym: Symbol, args: Sequence[int]) -> int:
        const, coeffs = self._entry(sym)
        return const + sum(c * a for c, a in zip(coeffs, args))

    def symbolic(self, sym: Symbol, args: Sequence[SymbolicValue]) -> SymbolicValue:
        const, coeffs = self._entry(sym)
        acc: list[Branch] = [(const, ())]
        for coeff, arg in zip(coeffs, args):
            if coeff == 0:
                continue
            acc = [
                _add_branches(b, _scale_branch(br, coeff))
                for b in acc
                for br in arg.branches
            ]
        return SymbolicValue(acc)

    def _entry(self, sym: Symbol) -> tuple[int, tuple[int, ...]]:
        try:
            return self.entries[sym]
        except KeyError:
            raise InterpretationError(f"no interpretation for {sym.name}") from None


class MaxPlusInterpretation(Interpretation):
    """``f(x1..xn) = max(c0, b1*x1 + c1, .., bn*xn + cn)``.

    Entries map each symbol to ``(c0, ((b1, c1), .., (bn, cn)))`` with each
    ``bi`` in {0, 1} and ``c0 >= 0``; the offsets ``ci`` may be negative.
    """

    def __init__(
        self, entries: Mapping[Symbol, tuple[int, Sequence[tuple[int, int]]]]
    ):
        super().__init__()
        self.entries: dict[Symbol, tuple[int, tuple[tuple[int, int], ...]]] = {}
        for sym, (base, argspecs) in entries.items():
            argspecs = tuple((b, c) for b, c in argspecs)
            if len(argspecs) != sym.arity:
                raise InterpretationError(
                    f"{sym.name}: expected {sym.arity} argument entries"
                )
            if base < 0:
                raise InterpretationError(f"{sym.name}: base constant must be >= 0")
            if any(b not in (0, 1) for b, _ in argspecs):
                raise InterpretationError(
                    f"{sym.name}: argument multipliers must be 0 or 1"
                )
            self.entries[sym] = (base, argspecs)

    def symbols(self) -> tuple[Symbol, ...]:
        return tuple(self.entries)

    def value(self, sym: Symbol, args: Sequence[int]) -> int:
        base, argspecs = self._entry(sym)
        return max([base] + [b * a + c for (b, c), a in zip(argspecs, args)])

    def symbolic(self, sym: Symbol, args: Sequence[SymbolicValue]) -> SymbolicValue:
        base, argspecs = self._entry(sym)
        branches: list[Branch] = [(base, ())]
        for (b, c), arg in zip(argspecs, args):
            if b == 0:
                branches.append((c, ()))
            else:
                branches.extend((bc + c, coeffs) for bc, coeffs in arg.branches)
        return SymbolicValue(branches)

    def _entry(self, sym: Symbol) -> tuple[int, tuple[tuple[int, int], ...]]:
        try:
            return self.entries[sym]
        except KeyError:
            raise InterpretationError(f"no interpretation for {sym.name}") from None


def _scale_branch(b: Branch, k: int) -> Branch:
    const, coeffs = b
    if k == 1:
        return b
    return (k * const, tuple((v, k * c) for v, c in coeffs))


def _add_branches(b1: Branch, b2: Branch) -> Branch:
    c1, v1 = b1
    c2, v2 = b2
    if not v2:
        return (c1 + c2, v1)
    joined = dict(v1)
    for name, k in v2:
        joined[name] = joined.get(name, 0) + k
    return _branch(c1 + c2, joined)


def evaluate(interp: Interpretation, t: Term, assignment: Mapping[str, int]) -> int:
    """The natural number denoted by ``t`` under ``interp`` and an
    assignment of naturals to its variables."""
    if isinstance(t, Var):
        val = assignment[t.name]
        if val < 0:
            raise InterpretationError(f"negative value for {t.name}")
        return val
    return interp.value(t.sym, [evaluate(interp, a, assignment) for a in t.args])


def abstract(interp: Interpretation, t: Term) -> SymbolicValue:
    """The symbolic value of ``t`` under ``interp``.

    Evaluating the result pointwise coincides with ``evaluate``.  Results
    are cached on the interpretation.
    """
    cached = interp._cache.get(t)
    if cached is not None:
        return cached
    if isinstance(t, Var):
        out = SymbolicValue([(0, ((t.name, 1),))])
    else:
        out = interp.symbolic(t.sym, [abstract(interp, a) for a in t.args])
    interp._cache[t] = out
    return out


def check_weak_monotone(interp: Interpretation) -> bool:
    """Weak monotonicity in every argument.

    Both supported shapes are weakly monotone by construction (negative
    coefficients and multipliers outside {0, 1} are rejected up front), so
    this re-walks the entries and confirms the constraints hold.
    """
    if isinstance(interp, LinearPolyInterpretation):
        return all(
            const >= 0 and all(c >= 0 for c in coeffs)
            for const, coeffs in interp.entries.values()
        )
    if isinstance(interp, MaxPlusInterpretation):
        return all(
            base >= 0 and all(b in (0, 1) for b, _ in argspecs)
            for base, argspecs in interp.entries.values()
        )
    raise InterpretationError(f"unknown interpretation shape: {type(interp).__name__}")


_SIMPLE_VARS = "abcdefghijklmnopqrstuvwxyz"


def _fresh_args(arity: int) -> list[Term]:
    return [Var(f"_{i}") for i in range(1, arity + 1)]


def check_simple(
    interp: Interpretation,
    status: Mapping[Symbol, Sequence[int]] | None = None,
    symbols: Sequence[Symbol] | None = None,
) -> bool:
    """Is ``f(x1..xn)`` always at least ``xi`` for the selected positions?

    With ``status`` None every argument position of every interpreted
    symbol is checked; otherwise only the positions listed for each
    symbol.  The test compares symbolic values on fresh variables, which
    by stability settles the property for all argument terms.
    """
    syms = tuple(symbols) if symbols is not None else interp.symbols()
    for sym in syms:
        args = _fresh_args(sym.arity)
        positions = (
            range(1, sym.arity + 1) if status is None else status.get(sym, ())
        )
        if not positions:
            continue
        whole = abstract(interp, App(sym, args))
        for i in positions:
            if not cmp_weak(whole, abstract(interp, args[i - 1])):
                return False
    return True


def check_strictly_simple(
    interp: Interpretation, symbols: Sequence[Symbol] | None = None
) -> bool:
    """Is ``f(x1..xn)`` strictly above every ``xi``?"""
    syms = tuple(symbols) if symbols is not None else interp.symbols()
    for sym in syms:
        if sym.arity == 0:
            continue
        args = _fresh_args(sym.arity)
        whole = abstract(interp, App(sym, args))
        for a in args:
            if not cmp_strict(whole, abstract(interp, a)):
                return False
    return True
