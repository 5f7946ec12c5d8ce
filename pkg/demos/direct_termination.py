# Direct termination with a two-layer order
#
# The system here is the classic "identity stretch":
#
#     p(s(x)) -> x
#     f(s(x)) -> f(p(s(x)))
#
# Every natural-valued linear interpretation that orients the first rule
# maps p(s(x)) and x to the same value, so the second rule's two sides
# become equal and nothing strict is left.  The fix is a second layer:
# the first layer only has to *not increase*, and a max/plus layer that
# may decrease below zero (clamped) does the strict separation.

from gwpo import (
    App,
    LinearPolyInterpretation,
    MaxPlusInterpretation,
    Rule,
    Signature,
    Symbol,
    TRS,
    Var,
    gwpo_comparator,
    triple_from_algebra,
)

p = Symbol("p", 1)
s = Symbol("s", 1)
f = Symbol("f", 1)
x = Var("x")

rules = [
    Rule(App(p, [App(s, [x])]), x),
    Rule(App(f, [App(s, [x])]), App(f, [App(p, [App(s, [x])])])),
]
trs = TRS(Signature([p, s, f]), rules)
print("system:")
for rule in trs.rules:
    print("   ", rule)

# First layer: everything is the identity except s, which adds one.
core = triple_from_algebra(
    LinearPolyInterpretation({p: (0, [1]), s: (1, [1]), f: (0, [1])})
)

# Second layer: p may subtract one (clamped at zero), s and f add one.
refinement = triple_from_algebra(
    MaxPlusInterpretation(
        {p: (0, [(1, -1)]), s: (1, [(1, 1)]), f: (1, [(1, 1)])}
    )
)

# The order is the intersection of both weak rewrite preorders with the
# recursive strict comparison built from the two layers' pairs.
gt = gwpo_comparator(core.pair, refinement.pair)

for rule in trs.rules:
    strict = (
        core.ge(rule.lhs, rule.rhs)
        and refinement.ge(rule.lhs, rule.rhs)
        and gt(rule.lhs, rule.rhs)
    )
    print(f"strictly oriented: {rule}  ->  {strict}")

# Both rules strict under one order means the system terminates.
# For contrast: with the first layer alone nothing is strict.
only_core = gwpo_comparator(core.pair, core.pair)
lhs, rhs = rules[1].lhs, rules[1].rhs
print("second rule, first layer twice:", only_core(lhs, rhs))
