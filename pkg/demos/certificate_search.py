# Searching for certificates, then distrusting the search
#
# The search enumerates a bounded parameter space in a fixed canonical
# order and returns the first candidate that orients everything.  Found
# certificates are never taken at face value: an independent re-check
# reruns every hypothesis and every orientation before the result is
# reported, and the same re-check is what `gwpo verify` runs on files.

import time
from pathlib import Path

from gwpo import (
    SearchSpace,
    direct_obligation,
    dp_obligation,
    emit_proof,
    find_certificate,
    parse_ari,
    parse_certificate,
    proof_from_search,
    verify_certificate,
)

here = Path(__file__).resolve().parent
problems = here.parent / "problems"


def load(name: str):
    return parse_ari((problems / name).read_text())


# A direct proof: every rule strictly decreases under one order.
trs = load("stretch.ari")
space = SearchSpace(template="mgwpo-direct")
result = find_certificate(direct_obligation(trs), space)
print("stretch:", result.outcome, f"after {result.tried} candidates")

proof = proof_from_search(result, space.template, budget=None)
text = emit_proof(proof)
print(text)

# The rendered proof embeds the certificate; parsing it back and
# re-verifying is exactly the `prove | verify` pipeline.
again = verify_certificate(direct_obligation(trs), parse_certificate(text))
print("re-verified from text:", again.ok)

# A dependency-pair proof needs the larger spo space.
trs = load("z08.ari")
start = time.perf_counter()
result = find_certificate(
    dp_obligation(trs), SearchSpace(template="spo"), deadline=120.0
)
print(f"z08: {result.outcome} after {result.tried} candidates "
      f"({time.perf_counter() - start:.2f}s)")

# And an honest failure: the same problem under the total-status wpo
# template has no certificate at these bounds, and the search can tell
# us that definitively rather than timing out.
result = find_certificate(
    dp_obligation(trs), SearchSpace(template="wpo"), deadline=600.0
)
print(f"z08 under wpo: {result.outcome} after {result.tried} candidates")
