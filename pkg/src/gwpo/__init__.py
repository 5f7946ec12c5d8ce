"""Termination proving for first-order term rewrite systems.

The package revolves around recursively defined term orders built from
two layers of base comparisons (typically a linear-polynomial layer and
a max/plus or precedence layer).  The main entry points:

* :mod:`gwpo.terms` — terms, rules, rewrite systems, dependency pairs;
* :mod:`gwpo.algebra` — weakly monotone interpretations and symbolic
  comparison of interpreted terms;
* :mod:`gwpo.triples` — order pairs and reduction triples;
* :mod:`gwpo.orders` — the recursive comparators and their
  status-filtered weak/strict variants;
* :mod:`gwpo.dp` — direct and dependency-pair proof obligations;
* :mod:`gwpo.search` — bounded certificate search and re-verification;
* :mod:`gwpo.oracle` — exhaustive cross-checks of the equivalence,
  inclusion, and complexity claims the orders are built on;
* :mod:`gwpo.ari` / :mod:`gwpo.proof` / :mod:`gwpo.cli` — problem-file
  parsing, proof rendering, and the command-line front end.
"""

from .algebra import (
    InterpretationError,
    LinearPolyInterpretation,
    MaxPlusInterpretation,
    SymbolicValue,
    abstract,
    check_simple,
    check_strictly_simple,
    check_weak_monotone,
    cmp_strict,
    cmp_weak,
    evaluate,
)
from .ari import ParseError, parse_ari, parse_term, print_ari
from .dp import (
    CheckReport,
    Obligation,
    ObligationResult,
    check_direct,
    check_dp,
    cyclic_pairs,
    dp_obligation,
    direct_obligation,
    scc_split,
)
from .oracle import OracleOutcome, check_names, run_named_check
from .orders import (
    ComparisonStats,
    Status,
    fast_comparator,
    ground_totality,
    gwpo_comparator,
    gwpo_fast_gt,
    gwpo_gt,
    gwpo_pair,
    lex_strict,
    mgwpo_comparator,
    mgwpo_gt,
    mgwpo_pair,
    mgwpo_pair_comparator,
    mspo_gt,
    mspo_pair,
    mspo_pair_comparator,
    pair_lex,
    spo_comparator,
    spo_gt,
    spo_pair,
)
from .proof import Proof, emit_proof, parse_certificate, proof_from_search
from .search import (
    Certificate,
    CertificateError,
    SearchResult,
    SearchSpace,
    VerifyReport,
    find_certificate,
    verify_certificate,
)
from .terms import (
    App,
    Rule,
    Signature,
    Symbol,
    TRS,
    Term,
    TermError,
    Var,
    bang_symbol,
    dependency_pairs,
    enumerate_terms,
    tuple_symbol,
    variables,
)
from .triples import (
    OrderPair,
    Precedence,
    ReductionTriple,
    combine_triples,
    lex_combine,
    marked_triple,
    sample_harmony,
    triple_from_algebra,
    triple_from_precedence,
    triple_from_reduction_pair,
    trivial_triple,
)

__version__ = "0.1.0"

__all__ = [
    "App",
    "Certificate",
    "CertificateError",
    "CheckReport",
    "ComparisonStats",
    "InterpretationError",
    "LinearPolyInterpretation",
    "MaxPlusInterpretation",
    "Obligation",
    "ObligationResult",
    "OracleOutcome",
    "OrderPair",
    "ParseError",
    "Precedence",
    "Proof",
    "ReductionTriple",
    "Rule",
    "SearchResult",
    "SearchSpace",
    "Signature",
    "Status",
    "Symbol",
    "SymbolicValue",
    "TRS",
    "Term",
    "TermError",
    "Var",
    "VerifyReport",
    "abstract",
    "bang_symbol",
    "check_direct",
    "check_dp",
    "check_names",
    "check_simple",
    "check_strictly_simple",
    "check_weak_monotone",
    "cmp_strict",
    "cmp_weak",
    "combine_triples",
    "cyclic_pairs",
    "dependency_pairs",
    "dp_obligation",
    "direct_obligation",
    "emit_proof",
    "enumerate_terms",
    "evaluate",
    "fast_comparator",
    "find_certificate",
    "ground_totality",
    "gwpo_comparator",
    "gwpo_fast_gt",
    "gwpo_gt",
    "gwpo_pair",
    "lex_combine",
    "lex_strict",
    "marked_triple",
    "mgwpo_comparator",
    "mgwpo_gt",
    "mgwpo_pair",
    "mgwpo_pair_comparator",
    "mspo_gt",
    "mspo_pair",
    "mspo_pair_comparator",
    "pair_lex",
    "parse_ari",
    "parse_certificate",
    "parse_term",
    "print_ari",
    "proof_from_search",
    "run_named_check",
    "sample_harmony",
    "scc_split",
    "spo_comparator",
    "spo_gt",
    "spo_pair",
    "triple_from_algebra",
    "triple_from_precedence",
    "triple_from_reduction_pair",
    "tuple_symbol",
    "variables",
    "verify_certificate",
]
