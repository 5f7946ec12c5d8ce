"""First-order terms, signatures, rewrite rules, and dependency pairs.

Terms are immutable trees of function applications over a signature, with
named variables at the leaves.  Hashes and sizes are computed once at
construction so that terms can be used as dictionary keys in the hot
comparison loops of the path orders.

Two families of generated symbols exist alongside the plain ones declared
in an input system:

* dependency-pair root symbols, written with a ``#`` suffix (``f#``), and
* evaluation-time root markers, written with a ``!`` suffix (``f!``).

Both families carry ``marked=True``; the suffix characters are reserved and
rejected by the input parser, so generated names can never collide with
declared ones.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping, Sequence

TUPLE_MARK = "#"
BANG_MARK = "!"
RESERVED_MARKS = TUPLE_MARK + BANG_MARK

Position = tuple[int, ...]


class TermError(ValueError):
    """Invalid term, rule, or position; ``code`` is a short machine tag."""

    def __init__(self, code: str, message: str):
        super().__init__(message)
        self.code = code


@dataclass(frozen=True)
class Symbol:
    """A function symbol with a fixed arity.

    ``marked`` is True for generated symbols (dependency-pair roots and
    root markers); those never appear in parsed input.
    """

    name: str
    arity: int
    marked: bool = False

    def __str__(self) -> str:
        return self.name


class Term:
    """Base class for terms; a term is either a ``Var`` or an ``App``."""

    __slots__ = ()


class Var(Term):
    """A named variable."""

    __slots__ = ("name", "_hash")

    size = 1

    def __init__(self, name: str):
        self.name = name
        self._hash = hash(("var", name))

    def __eq__(self, other: object) -> bool:
        return self is other or (type(other) is Var and other.name == self.name)

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        return self.name


class App(Term):
    """An application of a symbol to exactly ``symbol.arity`` arguments."""

    __slots__ = ("sym", "args", "size", "_hash")

    def __init__(self, sym: Symbol, args: Sequence[Term] = ()):
        args = tuple(args)
        if len(args) != sym.arity:
            raise TermError(
                "arity",
                f"symbol {sym.name} has arity {sym.arity}, got {len(args)} arguments",
            )
        self.sym = sym
        self.args = args
        self.size = 1 + sum(a.size for a in args)
        self._hash = hash((sym, args))

    def __eq__(self, other: object) -> bool:
        if self is other:
            return True
        return (
            type(other) is App
            and other._hash == self._hash
            and other.sym == self.sym
            and other.args == self.args
        )

    def __hash__(self) -> int:
        return self._hash

    def __repr__(self) -> str:
        if not self.args:
            return self.sym.name
        return f"{self.sym.name}({', '.join(map(repr, self.args))})"


Substitution = Mapping[str, Term]


def variables(t: Term) -> set[str]:
    """The set of variable names occurring in ``t``."""
    out: set[str] = set()
    stack = [t]
    while stack:
        u = stack.pop()
        if isinstance(u, Var):
            out.add(u.name)
        else:
            stack.extend(u.args)
    return out


def apply_substitution(t: Term, sigma: Substitution) -> Term:
    """Replace every variable of ``t`` by its image under ``sigma``.

    Variables without a binding are left in place; unused bindings are
    ignored.
    """
    if isinstance(t, Var):
        return sigma.get(t.name, t)
    new_args = tuple(apply_substitution(a, sigma) for a in t.args)
    if all(n is o for n, o in zip(new_args, t.args)):
        return t
    return App(t.sym, new_args)


def subterm_at(t: Term, pos: Position) -> Term:
    """The subterm of ``t`` at 1-based position ``pos`` (() is the root)."""
    for i in pos:
        if isinstance(t, Var) or not 1 <= i <= len(t.args):
            raise TermError("position", f"no subterm at position {pos}")
        t = t.args[i - 1]
    return t


def replace_at(t: Term, pos: Position, u: Term) -> Term:
    """A copy of ``t`` with the subterm at ``pos`` replaced by ``u``."""
    if not pos:
        return u
    if isinstance(t, Var) or not 1 <= pos[0] <= len(t.args):
        raise TermError("position", f"no subterm at position {pos}")
    i = pos[0] - 1
    args = list(t.args)
    args[i] = replace_at(args[i], pos[1:], u)
    return App(t.sym, args)


def proper_subterms(t: Term) -> list[tuple[Position, Term]]:
    """All proper subterms of ``t`` with their positions, outermost first.

    The order is a left-to-right pre-order walk: position (1,) before its
    descendants, then (2,), and so on.
    """
    out: list[tuple[Position, Term]] = []

    def walk(u: Term, prefix: Position) -> None:
        if isinstance(u, Var):
            return
        for i, a in enumerate(u.args, 1):
            p = prefix + (i,)
            out.append((p, a))
            walk(a, p)

    walk(t, ())
    return out


def subterms(t: Term) -> list[tuple[Position, Term]]:
    """``t`` itself followed by its proper subterms, outermost first."""
    return [((), t)] + proper_subterms(t)


def tuple_symbol(sym: Symbol) -> Symbol:
    """The dependency-pair root symbol for a plain symbol."""
    if sym.marked:
        raise TermError("marked", f"{sym.name} is already a generated symbol")
    return Symbol(sym.name + TUPLE_MARK, sym.arity, marked=True)


def bang_symbol(sym: Symbol) -> Symbol:
    """The evaluation-time root marker for a symbol.

    Markers exist for plain and for dependency-pair symbols alike; marking
    is applied at most once per comparison, so markers of markers never
    arise in practice.
    """
    return Symbol(sym.name + BANG_MARK, sym.arity, marked=True)


def mark_root(t: Term) -> Term:
    """Replace the root of ``t`` by its dependency-pair symbol."""
    if isinstance(t, Var):
        raise TermError("variable", "cannot mark a variable")
    return App(tuple_symbol(t.sym), t.args)


def bang_root(t: Term) -> Term:
    """Replace the root of ``t`` by its root marker symbol."""
    if isinstance(t, Var):
        raise TermError("variable", "cannot mark a variable")
    return App(bang_symbol(t.sym), t.args)


class Rule:
    """A rewrite rule ``lhs -> rhs``.

    The left-hand side must not be a variable and the right-hand side may
    only use variables of the left-hand side.
    """

    __slots__ = ("lhs", "rhs")

    def __init__(self, lhs: Term, rhs: Term):
        if isinstance(lhs, Var):
            raise TermError("variable-lhs", f"left-hand side is a variable: {lhs!r}")
        fresh = variables(rhs) - variables(lhs)
        if fresh:
            names = ", ".join(sorted(fresh))
            raise TermError(
                "fresh-rhs-variable",
                f"right-hand side introduces fresh variables: {names}",
            )
        self.lhs = lhs
        self.rhs = rhs

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Rule) and other.lhs == self.lhs and other.rhs == self.rhs
        )

    def __hash__(self) -> int:
        return hash((self.lhs, self.rhs))

    def __repr__(self) -> str:
        return f"{self.lhs!r} -> {self.rhs!r}"


class Signature:
    """An ordered collection of symbols with unique names."""

    __slots__ = ("symbols", "_by_name")

    def __init__(self, symbols: Iterable[Symbol] = ()):
        self.symbols = tuple(symbols)
        self._by_name: dict[str, Symbol] = {}
        for sym in self.symbols:
            if sym.name in self._by_name:
                raise TermError("duplicate-fun", f"duplicate symbol: {sym.name}")
            self._by_name[sym.name] = sym

    def __contains__(self, name: str) -> bool:
        return name in self._by_name

    def __iter__(self) -> Iterator[Symbol]:
        return iter(self.symbols)

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Signature) and other.symbols == self.symbols

    def __hash__(self) -> int:
        return hash(self.symbols)

    def symbol(self, name: str) -> Symbol:
        try:
            return self._by_name[name]
        except KeyError:
            raise TermError("undeclared", f"undeclared symbol: {name}") from None

    def __repr__(self) -> str:
        inner = ", ".join(f"{s.name}/{s.arity}" for s in self.symbols)
        return f"Signature({inner})"


class TRS:
    """A term rewrite system: a signature plus an ordered list of rules."""

    __slots__ = ("signature", "rules")

    def __init__(self, signature: Signature, rules: Iterable[Rule] = ()):
        self.signature = signature
        self.rules = tuple(rules)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, TRS)
            and other.signature == self.signature
            and other.rules == self.rules
        )

    def __hash__(self) -> int:
        return hash((self.signature, self.rules))

    def __repr__(self) -> str:
        return f"TRS({self.signature!r}, {len(self.rules)} rules)"


def defined_symbols(trs: TRS) -> set[Symbol]:
    """Root symbols of left-hand sides."""
    out = set()
    for rule in trs.rules:
        assert isinstance(rule.lhs, App)
        out.add(rule.lhs.sym)
    return out


def dependency_pairs(trs: TRS) -> list[Rule]:
    """The dependency pairs of ``trs``.

    For each rule ``l -> r`` and each subterm ``u`` of ``r`` whose root is a
    defined symbol and which is not a proper subterm of ``l``, the pair
    ``mark_root(l) -> mark_root(u)`` is produced.  Order follows the rules
    and, within a rule, the outermost-leftmost subterm order; duplicates
    are dropped.
    """
    defined = defined_symbols(trs)
    pairs: list[Rule] = []
    seen: set[Rule] = set()
    for rule in trs.rules:
        excluded = {u for _, u in proper_subterms(rule.lhs)}
        for _, u in subterms(rule.rhs):
            if not isinstance(u, App) or u.sym not in defined or u in excluded:
                continue
            pair = Rule(mark_root(rule.lhs), mark_root(u))
            if pair not in seen:
                seen.add(pair)
                pairs.append(pair)
    return pairs


def enumerate_terms(
    symbols: Sequence[Symbol], vars_: Sequence[str], max_size: int
) -> list[Term]:
    """All terms over ``symbols`` and ``vars_`` with at most ``max_size``
    symbol or variable occurrences, smallest first.

    Within one size, variables come first in the given order, then the
    symbols in the given order with argument tuples enumerated
    lexicographically by this same ordering.  The result is deterministic.
    """
    by_size: list[list[Term]] = [[]]  # index 0 unused
    by_size.append([Var(v) for v in vars_])
    by_size[1].extend(App(s) for s in symbols if s.arity == 0)
    for size in range(2, max_size + 1):
        layer: list[Term] = []
        for sym in symbols:
            if sym.arity == 0 or sym.arity >= size:
                continue
            for split in _compositions(size - 1, sym.arity):
                pools = [by_size[k] for k in split]
                layer.extend(App(sym, combo) for combo in _product(pools))
        by_size.append(layer)
    out: list[Term] = []
    for size in range(1, max_size + 1):
        out.extend(by_size[size])
    return out


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Ways of writing ``total`` as an ordered sum of ``parts`` positives."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for head in range(1, total - parts + 2):
        for rest in _compositions(total - head, parts - 1):
            yield (head,) + rest


def _product(pools: Sequence[Sequence[Term]]) -> Iterator[tuple[Term, ...]]:
    if not pools:
        yield ()
        return
    for head in pools[0]:
        for rest in _product(pools[1:]):
            yield (head,) + rest
