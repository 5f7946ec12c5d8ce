# The non-recursive comparator and its linear complexity
#
# When the first layer is strictly simple (every proper subterm is
# strictly smaller), the recursive order collapses: either the heads
# already decide, or the comparison walks down exactly one spine.  The
# fast comparator exploits that and issues a number of base comparisons
# linear in the combined size of both terms.

from gwpo import (
    App,
    ComparisonStats,
    LinearPolyInterpretation,
    Precedence,
    Symbol,
    Var,
    fast_comparator,
    gwpo_comparator,
    triple_from_algebra,
    triple_from_precedence,
)

f = Symbol("f", 1)
a = Symbol("a", 0)
b = Symbol("b", 0)

# Unit weights everywhere are strictly simple, and they deliberately
# tie a against b: the weight layer alone never decides, so the
# comparison has to walk the whole spine down to the precedence.
weights = triple_from_algebra(
    LinearPolyInterpretation({f: (1, [1]), a: (1, []), b: (1, [])})
)
ranks = triple_from_precedence(Precedence({f: 0, a: 0, b: 1}))


def tower(base: Symbol, height: int):
    term = App(base, [])
    for _ in range(height):
        term = App(f, [term])
    return term


# Compare f^n(b) against f^n(a) for growing n and watch the counts.
print(" n   size  fast-count  recursive-count")
for n in (1, 2, 4, 8, 16, 32, 64):
    lhs, rhs = tower(b, n), tower(a, n)
    fast_stats = ComparisonStats()
    fast = fast_comparator(weights.pair, ranks.pair, fast_stats)
    assert fast(lhs, rhs)

    rec_stats = ComparisonStats()
    recursive = gwpo_comparator(weights.pair, ranks.pair, rec_stats)
    assert recursive(lhs, rhs)

    size = 2 * (n + 1)
    print(
        f"{n:2d}   {size:4d}  {fast_stats.total():10d}  {rec_stats.total():15d}"
    )

# The fast column grows by a fixed amount per extra layer — linear in
# |s| + |t| — while staying equivalent to the recursive order.
x = Var("x")
fast = fast_comparator(weights.pair, ranks.pair)
recursive = gwpo_comparator(weights.pair, ranks.pair)
probes = [
    (tower(b, 3), tower(a, 3)),
    (tower(a, 3), tower(b, 3)),
    (App(f, [x]), x),
    (x, App(f, [x])),
]
print("agreement on mixed probes:",
      all(fast(s, t) == recursive(s, t) for s, t in probes))
