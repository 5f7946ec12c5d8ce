"""Interpretation layers: symbolic comparison, monotonicity, simplicity.

The comparisons are symbolic over nonnegative variable assignments, so
every claim here is a universally quantified fact, not a sample.
"""

import pytest

from gwpo import (
    App,
    InterpretationError,
    LinearPolyInterpretation,
    MaxPlusInterpretation,
    Symbol,
    Var,
    abstract,
    check_simple,
    check_strictly_simple,
    check_weak_monotone,
    cmp_strict,
    cmp_weak,
    evaluate,
)

p = Symbol("p", 1)
s = Symbol("s", 1)
f = Symbol("f", 1)
x = Var("x")


@pytest.fixture(scope="module")
def stretch_linear():
    return LinearPolyInterpretation({p: (0, [1]), s: (1, [1]), f: (0, [1])})


@pytest.fixture(scope="module")
def stretch_maxplus():
    return MaxPlusInterpretation(
        {p: (0, [(1, -1)]), s: (1, [(1, 1)]), f: (1, [(1, 1)])}
    )


def test_linear_rejects_negative_entries():
    with pytest.raises(InterpretationError):
        LinearPolyInterpretation({p: (-1, [1])})
    with pytest.raises(InterpretationError):
        LinearPolyInterpretation({p: (0, [-2])})


def test_maxplus_shape_validation():
    # argument multipliers must be 0 or 1; offsets may be negative
    MaxPlusInterpretation({p: (0, [(1, -5)])})
    with pytest.raises(InterpretationError):
        MaxPlusInterpretation({p: (0, [(2, 0)])})
    with pytest.raises(InterpretationError):
        MaxPlusInterpretation({p: (-1, [(1, 0)])})


def test_evaluate_matches_abstract(stretch_maxplus):
    term = App(p, [App(s, [App(s, [x])])])
    for n in range(6):
        concrete = evaluate(stretch_maxplus, term, {"x": n})
        assert concrete == max(0, n + 2 - 1)
    # the symbolic value agrees with itself weakly, of course
    val = abstract(stretch_maxplus, term)
    assert cmp_weak(val, val)
    assert not cmp_strict(val, val)


def test_identity_interpretation_cancels(stretch_maxplus):
    # when s is interpreted as the identity too, p(s(x)) and x collapse
    # to the same value: weakly related both ways, never strictly
    ident = LinearPolyInterpretation({p: (0, [1]), s: (0, [1]), f: (0, [1])})
    lhs = App(p, [App(s, [x])])
    u, v = abstract(ident, lhs), abstract(ident, x)
    assert cmp_weak(u, v) and cmp_weak(v, u)
    assert not cmp_strict(u, v)


def test_stretch_layers_on_first_rule(stretch_linear, stretch_maxplus):
    # under the stretch parameters p(s(x)) sits strictly above x in the
    # linear layer, while the clamped max/plus layer matches it exactly
    lhs = App(p, [App(s, [x])])
    assert cmp_strict(abstract(stretch_linear, lhs), abstract(stretch_linear, x))
    mu, mv = abstract(stretch_maxplus, lhs), abstract(stretch_maxplus, x)
    assert cmp_weak(mu, mv) and cmp_weak(mv, mu)
    assert not cmp_strict(mu, mv)


def test_strict_separation_needs_the_second_layer(stretch_maxplus):
    # f(s(x)) against f(p(s(x))): the max/plus layer decides strictly
    lhs = App(f, [App(s, [x])])
    rhs = App(f, [App(p, [App(s, [x])])])
    assert cmp_strict(abstract(stretch_maxplus, lhs), abstract(stretch_maxplus, rhs))


def test_weak_monotonicity(stretch_linear, stretch_maxplus):
    assert check_weak_monotone(stretch_linear)
    assert check_weak_monotone(stretch_maxplus)
    # a dropped argument (coefficient 0) is still weakly monotone
    assert check_weak_monotone(LinearPolyInterpretation({p: (1, [0])}))
    # a max/plus entry ignoring its argument likewise
    assert check_weak_monotone(MaxPlusInterpretation({p: (2, [(0, 0)])}))


def test_simplicity_checks(stretch_linear):
    syms = (p, s, f)
    # identity coefficients are simple but not strictly simple
    assert check_simple(stretch_linear, None, symbols=syms)
    assert not check_strictly_simple(stretch_linear, symbols=syms)
    bumped = LinearPolyInterpretation(
        {p: (1, [1]), s: (1, [1]), f: (1, [1])}
    )
    assert check_strictly_simple(bumped, symbols=syms)
    # with a status, only the listed positions need the subterm bound
    proj = LinearPolyInterpretation({f: (0, [0]), s: (1, [1])})
    assert not check_simple(proj, None, symbols=(f, s))
    assert check_simple(proj, {f: (), s: (1,)}, symbols=(f, s))


def test_missing_symbol_entry_raises(stretch_linear):
    with pytest.raises(InterpretationError):
        abstract(stretch_linear, App(Symbol("q", 1), [x]))
