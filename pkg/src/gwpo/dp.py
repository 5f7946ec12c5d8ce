"""Termination obligations: direct orientation and the dependency-pair
method in its basic form.

A direct proof orients every rule strictly by a reduction order.  A
dependency-pair proof orients every rule weakly and every dependency pair
strictly by a reduction pair.  ``scc_split`` offers an optional, purely
conservative refinement: pairs that cannot reach themselves in an
over-approximated dependency graph need no strict orientation.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Optional

from .terms import App, Rule, TRS, defined_symbols, dependency_pairs


@dataclass
class Obligation:
    """What a certificate has to establish.

    ``weak_rules`` must be oriented weakly, ``strict_rules`` strictly.
    Direct obligations have no weak part; dependency-pair obligations
    carry marked roots in the strict part only.
    """

    kind: str  # "direct" | "dp"
    trs: TRS
    weak_rules: tuple[Rule, ...]
    strict_rules: tuple[Rule, ...]


def direct_obligation(trs: TRS) -> Obligation:
    return Obligation("direct", trs, (), tuple(trs.rules))


def dp_obligation(trs: TRS, use_scc: bool = False) -> Obligation:
    pairs = dependency_pairs(trs)
    if use_scc:
        pairs = cyclic_pairs(trs, pairs)
    return Obligation("dp", trs, tuple(trs.rules), tuple(pairs))


@dataclass
class ObligationResult:
    rule: Rule
    required: str  # "weak" | "strict"
    holds: bool
    chain: Optional[tuple[str, ...]] = None


@dataclass
class CheckReport:
    ok: bool
    entries: list[ObligationResult] = field(default_factory=list)

    @property
    def first_failure(self) -> Optional[ObligationResult]:
        return next((e for e in self.entries if not e.holds), None)


def check_direct(
    trs: TRS,
    gt: Callable,
    explain: Optional[Callable] = None,
) -> CheckReport:
    """Is every rule strictly oriented by ``gt``?

    ``explain(lhs, rhs)`` may supply a case chain for satisfied rules.
    """
    entries = []
    for rule in trs.rules:
        holds = gt(rule.lhs, rule.rhs)
        chain = explain(rule.lhs, rule.rhs) if explain and holds else None
        entries.append(ObligationResult(rule, "strict", holds, chain))
    return CheckReport(all(e.holds for e in entries), entries)


def check_dp(
    trs: TRS,
    pair: Callable,
    explain: Optional[Callable] = None,
    pairs: Optional[list[Rule]] = None,
) -> CheckReport:
    """Are all rules weakly and all dependency pairs strictly oriented?

    ``pair(s, t)`` returns (weak, strict) verdicts; ``pairs`` overrides
    the extracted dependency pairs (e.g. with a cyclic subset).
    ``explain(s, t, want_strict)`` may supply case chains.
    """
    if pairs is None:
        pairs = dependency_pairs(trs)
    entries = []
    for rule in trs.rules:
        weak, _ = pair(rule.lhs, rule.rhs)
        chain = explain(rule.lhs, rule.rhs, False) if explain and weak else None
        entries.append(ObligationResult(rule, "weak", weak, chain))
    for dp in pairs:
        _, strict = pair(dp.lhs, dp.rhs)
        chain = explain(dp.lhs, dp.rhs, True) if explain and strict else None
        entries.append(ObligationResult(dp, "strict", strict, chain))
    return CheckReport(all(e.holds for e in entries), entries)


def _connects(u: Rule, v: Rule, defined: set) -> bool:
    """Over-approximation: can an instance of ``u``'s right-hand side
    rewrite to an instance of ``v``'s left-hand side?

    Connected when the root symbols agree and no argument position shows
    a depth-1 clash of distinct roots where the right-hand root is a
    constructor (a constructor-rooted term keeps its root under
    rewriting, so such a clash can never be repaired).
    """
    ru, lv = u.rhs, v.lhs
    if not isinstance(ru, App) or not isinstance(lv, App) or ru.sym != lv.sym:
        return False
    for a, b in zip(ru.args, lv.args):
        if (
            isinstance(a, App)
            and isinstance(b, App)
            and a.sym != b.sym
            and a.sym not in defined
        ):
            return False
    return True


def scc_split(trs: TRS, pairs: list[Rule]) -> list[list[Rule]]:
    """Cyclic strongly connected groups of the estimated dependency graph.

    Pairs outside every cycle are discharged (omitted).  Groups and their
    members are ordered by first appearance in ``pairs``.
    """
    defined = defined_symbols(trs)
    n = len(pairs)
    adjacency = [
        [j for j in range(n) if _connects(pairs[i], pairs[j], defined)]
        for i in range(n)
    ]

    # Tarjan's algorithm, iterative to keep deep graphs safe.
    index__ = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    components: list[list[int]] = []

    for root in range(n):
        if index__[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            node, child = work[-1]
            if child == 0:
                index__[node] = low[node] = counter
                counter += 1
                stack.append(node)
                on_stack[node] = True
            advanced = False
            for k in range(child, len(adjacency[node])):
                succ = adjacency[node][k]
                if index__[succ] == -1:
                    work[-1] = (node, k + 1)
                    work.append((succ, 0))
                    advanced = True
                    break
                if on_stack[succ]:
                    low[node] = min(low[node], index__[succ])
            if advanced:
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[node])
            if low[node] == index__[node]:
                component = []
                while True:
                    member = stack.pop()
                    on_stack[member] = False
                    component.append(member)
                    if member == node:
                        break
                components.append(component)

    cyclic = []
    for component in components:
        if len(component) > 1 or component[0] in adjacency[component[0]]:
            cyclic.append(sorted(component))
    cyclic.sort(key=lambda c: c[0])
    return [[pairs[i] for i in component] for component in cyclic]


def cyclic_pairs(trs: TRS, pairs: list[Rule]) -> list[Rule]:
    """The pairs that lie on some cycle, in their original order."""
    keep = {id(p) for group in scc_split(trs, pairs) for p in group}
    return [p for p in pairs if id(p) in keep]
