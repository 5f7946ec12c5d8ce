# Cross-checking the order constructions against each other
#
# Two claims hold the design together:
#
#   1. building the two-layer monotonic order directly is the same as
#      lexicographically combining two one-layer triples;
#   2. the recursive order and the status-filtered strict pair agree
#      when every argument position is compared, but the recursive
#      order is strictly more when positions are dropped.
#
# Neither claim is taken on faith: both are checked exhaustively on a
# small term universe.  The second check also knows the exact pair it
# expects to separate the two relations.

from gwpo import run_named_check

agreement = run_named_check("mgwpo-mspo-agreement", size=4)
print("two-layer order vs lex-combined pair:", "ok" if agreement.ok else "FAILED")
for line in agreement.lines:
    print("   ", line)

inclusion = run_named_check("pair-inclusion", size=4)
print("recursive order vs filtered pair:", "ok" if inclusion.ok else "FAILED")
for line in inclusion.lines:
    print("   ", line)

# The witness in the second report is a one-symbol signature with an
# empty argument list for f: the recursive order still strictly relates
# f(x) and x through its interpretation layer, while the filtered pair
# has no argument position left to recurse on.
