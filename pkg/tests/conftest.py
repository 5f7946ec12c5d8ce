import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from gwpo import (
    App,
    Certificate,
    LinearPolyInterpretation,
    MaxPlusInterpretation,
    Rule,
    Signature,
    Status,
    Symbol,
    TRS,
    Var,
    bang_symbol,
    tuple_symbol,
    triple_from_algebra,
)

PROBLEMS = Path(__file__).resolve().parent.parent / "problems"


@pytest.fixture(scope="session")
def problems_dir() -> Path:
    return PROBLEMS


@pytest.fixture(scope="session")
def stretch_trs() -> TRS:
    """p(s(x)) -> x together with f(s(x)) -> f(p(s(x)))."""
    p, s, f = Symbol("p", 1), Symbol("s", 1), Symbol("f", 1)
    x = Var("x")
    rules = [
        Rule(App(p, [App(s, [x])]), x),
        Rule(App(f, [App(s, [x])]), App(f, [App(p, [App(s, [x])])])),
    ]
    return TRS(Signature([p, s, f]), rules)


@pytest.fixture(scope="session")
def stretch_triples(stretch_trs):
    """The identity core and the stretch refinement, as reduction triples."""
    p, s, f = stretch_trs.signature.symbols
    core = triple_from_algebra(
        LinearPolyInterpretation({p: (0, [1]), s: (1, [1]), f: (0, [1])})
    )
    refinement = triple_from_algebra(
        MaxPlusInterpretation(
            {p: (0, [(1, -1)]), s: (1, [(1, 1)]), f: (1, [(1, 1)])}
        )
    )
    return core, refinement


@pytest.fixture(scope="session")
def z08_trs() -> TRS:
    a, b, f = Symbol("a", 0), Symbol("b", 0), Symbol("f", 2)
    x = Var("x")

    def fa(u, v):
        return App(f, [u, v])

    A, B = App(a), App(b)
    rules = [
        Rule(fa(A, fa(B, fa(A, x))), fa(A, fa(B, fa(B, fa(A, x))))),
        Rule(fa(B, fa(B, fa(B, x))), fa(B, fa(B, x))),
    ]
    return TRS(Signature([a, b, f]), rules)


def z08_certificate(trs: TRS, tuple_positions=(2,)) -> Certificate:
    """The hand-picked z08 parameters: f projects its first argument,
    the root marker f! its second, a outweighs b, and the tuple symbol
    compares only the positions given (`(2,)` is the one that works)."""
    a = trs.signature.symbol("a")
    b = trs.signature.symbol("b")
    f = trs.signature.symbol("f")
    F = tuple_symbol(f)
    linear = LinearPolyInterpretation({
        f: (0, [1, 0]), F: (0, [1, 0]), a: (1, []), b: (0, []),
        bang_symbol(f): (0, [0, 1]), bang_symbol(F): (0, [1, 0]),
        bang_symbol(a): (1, []), bang_symbol(b): (0, []),
    })
    trivial = {sym: (0, [(0, -1)] * sym.arity) for sym in (f, F, a, b)}
    trivial.update(
        {bang_symbol(sym): entry for sym, entry in list(trivial.items())}
    )
    maxplus = MaxPlusInterpretation(trivial)
    status = Status({f: (), F: tuple(tuple_positions), a: (), b: ()})
    return Certificate(
        "spo", "dp", interp_a=linear, interp_b=maxplus, status=status
    )


@pytest.fixture(scope="session")
def z08_cert(z08_trs) -> Certificate:
    return z08_certificate(z08_trs)
