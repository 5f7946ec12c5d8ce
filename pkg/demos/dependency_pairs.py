# Dependency pairs and partial statuses
#
# z08 resists single-layer orders and, with total argument lists, even
# the two-layer ones.  The way through: move to dependency pairs (only
# the recursive calls need strict decrease), and compare f's arguments
# *partially* — the tuple symbol looks at its second argument only, f
# itself at none.

from pathlib import Path

from gwpo import (
    LinearPolyInterpretation,
    MaxPlusInterpretation,
    Status,
    Symbol,
    bang_symbol,
    check_dp,
    combine_triples,
    dependency_pairs,
    marked_triple,
    mspo_pair_comparator,
    parse_ari,
    tuple_symbol,
)

here = Path(__file__).resolve().parent
trs = parse_ari((here.parent / "problems" / "z08.ari").read_text())
print("rules:")
for rule in trs.rules:
    print("   ", rule)

# Each rule contributes one dependency pair per recursive call in its
# right-hand side; roots get fresh tuple symbols.
pairs = dependency_pairs(trs)
print("dependency pairs:")
for pair in pairs:
    print("   ", pair)

a = trs.signature.symbol("a")
b = trs.signature.symbol("b")
f = trs.signature.symbol("f")
F = tuple_symbol(f)

# The linear layer: f keeps its first argument, the marked variant f!
# keeps the second, and the constants separate a from b.  Marked
# symbols ("!") interpret the root one way and the recursion another —
# that extra freedom is what partial statuses buy us.
linear = LinearPolyInterpretation({
    f: (0, [1, 0]), F: (0, [1, 0]), a: (1, []), b: (0, []),
    bang_symbol(f): (0, [0, 1]), bang_symbol(F): (0, [1, 0]),
    bang_symbol(a): (1, []), bang_symbol(b): (0, []),
})

# The second layer can stay trivial: a constant-zero max/plus algebra.
trivial = {sym: (0, [(0, -1)] * sym.arity) for sym in (f, F, a, b)}
trivial.update({bang_symbol(sym): entry for sym, entry in list(trivial.items())})
maxplus = MaxPlusInterpretation(trivial)

# f compares no arguments at all; the tuple symbol compares only its
# second argument.
status = Status({f: (), F: (2,), a: (), b: ()})

pair_fn = mspo_pair_comparator(
    status, combine_triples(marked_triple(linear), marked_triple(maxplus))
)

report = check_dp(trs, pair_fn, pairs=pairs)
print("all obligations hold:", report.ok)
for entry in report.entries:
    print(f"    {entry.required:6s} {entry.rule}: {entry.holds}")
