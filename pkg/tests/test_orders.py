"""Recursive path-style comparators and their monotonic variants."""

import pytest

from gwpo import (
    App,
    MaxPlusInterpretation,
    Status,
    Symbol,
    Var,
    enumerate_terms,
    spo_comparator,
    triple_from_algebra,
    trivial_triple,
)
from gwpo.orders import (
    ComparisonStats,
    explain_gwpo_gt,
    explain_spo_pair,
    ground_totality,
    gwpo_gt,
    gwpo_pair,
    lex_strict,
    mgwpo_gt,
    pair_lex,
    spo_gt,
    spo_pair,
)
from gwpo.terms import dependency_pairs
from gwpo.triples import (
    Precedence,
    combine_triples,
    marked_triple,
    triple_from_precedence,
)
from gwpo.algebra import LinearPolyInterpretation


def _size_ge(s, t):
    return s.size >= t.size


def _size_gt(s, t):
    return s.size > t.size


class TestStatus:
    def test_select_picks_positions_in_order(self):
        f = Symbol("f", 3)
        st = Status({f: (1, 3)})
        assert st.positions(f) == (1, 3)
        assert st.select(f, ["a", "b", "c"]) == ["a", "c"]

    def test_positions_validated(self):
        f = Symbol("f", 2)
        with pytest.raises(ValueError):
            Status({f: (0,)})
        with pytest.raises(ValueError):
            Status({f: (3,)})
        with pytest.raises(ValueError):
            Status({f: (2, 1)})
        with pytest.raises(ValueError):
            Status({f: (1, 1)})

    def test_total_and_empty_constructors(self):
        f, a = Symbol("f", 2), Symbol("a", 0)
        total = Status.total_for([f, a])
        empty = Status.empty_for([f, a])
        assert total.positions(f) == (1, 2)
        assert total.positions(a) == ()
        assert total.is_total()
        assert empty.positions(f) == ()
        assert not empty.is_total()
        # a nullary symbol's empty status is also its total status
        assert empty.is_total([a])

    def test_equality_and_hash(self):
        f = Symbol("f", 2)
        assert Status({f: (1,)}) == Status({f: [1]})
        assert Status({f: (1,)}) != Status({f: (2,)})
        assert hash(Status({f: (1,)})) == hash(Status({f: [1]}))


class TestLexicographic:
    def test_empty_lists_are_not_strict(self):
        assert lex_strict([], [], _size_gt) is False
        assert pair_lex([], [], _size_ge, _size_gt) == (True, False)

    def test_length_mismatch_fails_both(self):
        a = App(Symbol("a", 0))
        b = App(Symbol("b", 0))
        assert pair_lex([a], [a, b], _size_ge, _size_gt) == (False, False)

    def test_first_strict_position_decides(self):
        g, a = Symbol("g", 1), Symbol("a", 0)
        ga = App(g, [App(a)])
        assert lex_strict([ga, App(a)], [App(a), ga], _size_gt)
        assert pair_lex([ga, App(a)], [App(a), ga], _size_ge, _size_gt) == (
            True,
            True,
        )
        # equal prefixes only weaken the verdict
        assert pair_lex([App(a), App(a)], [App(a), App(a)], _size_ge, _size_gt) == (
            True,
            False,
        )

    def test_weak_failure_cuts_the_scan(self):
        g, a = Symbol("g", 1), Symbol("a", 0)
        ga = App(g, [App(a)])
        # first position already fails weakly; the strict second never rescues
        assert pair_lex([App(a), ga], [ga, App(a)], _size_ge, _size_gt) == (
            False,
            False,
        )


class TestGwpoOnStretch:
    """Orientations of the two stretch rules under the bundled layers."""

    def test_both_rules_strictly_oriented(self, stretch_trs, stretch_triples):
        core, refinement = stretch_triples
        for rule in stretch_trs.rules:
            assert gwpo_gt(rule.lhs, rule.rhs, core.pair, refinement.pair)
            assert mgwpo_gt(rule.lhs, rule.rhs, core, refinement)

    def test_case_chains(self, stretch_trs, stretch_triples):
        core, refinement = stretch_triples
        first, second = stretch_trs.rules
        assert explain_gwpo_gt(first.lhs, first.rhs, core.pair, refinement.pair) == (
            "1",
        )
        assert explain_gwpo_gt(
            second.lhs, second.rhs, core.pair, refinement.pair
        ) == ("2b(i)",)
        assert explain_gwpo_gt(first.rhs, first.lhs, core.pair, refinement.pair) is None

    def test_refinement_preorder_can_veto(self, stretch_trs, stretch_triples):
        # s(x) beats f(f(x)) on the core layer alone, but the refinement
        # values run the other way, so the monotonic variant refuses.
        core, refinement = stretch_triples
        p, s, f = stretch_trs.signature.symbols
        x = Var("x")
        lhs = App(s, [x])
        rhs = App(f, [App(f, [x])])
        assert gwpo_gt(lhs, rhs, core.pair, refinement.pair)
        assert not refinement.ge(lhs, rhs)
        assert not mgwpo_gt(lhs, rhs, core, refinement)

    def test_irreflexive_on_small_terms(self, stretch_trs, stretch_triples):
        core, refinement = stretch_triples
        terms = enumerate_terms(stretch_trs.signature.symbols, [Var("x")], 4)
        for t in terms:
            assert not gwpo_gt(t, t, core.pair, refinement.pair)
            assert not mgwpo_gt(t, t, core, refinement)

    def test_variable_cases(self, stretch_triples):
        core, refinement = stretch_triples
        x, y = Var("x"), Var("y")
        assert not gwpo_gt(x, x, core.pair, refinement.pair)
        assert not gwpo_gt(x, y, core.pair, refinement.pair)


class TestTrivialCoreCollapse:
    def test_gwpo_with_trivial_core_is_spo(self):
        """With an always-weak, never-strict first layer the two-layer
        comparator and the single-layer one agree everywhere."""
        g, a, b = Symbol("g", 1), Symbol("a", 0), Symbol("b", 0)
        interp = MaxPlusInterpretation(
            {g: (0, [(1, 1)]), a: (1, []), b: (0, [])}
        )
        layer = triple_from_algebra(interp)
        trivial = trivial_triple()
        terms = enumerate_terms([g, a, b], [Var("x")], 4)
        for s in terms:
            for t in terms:
                assert gwpo_gt(s, t, trivial.pair, layer.pair) == spo_gt(
                    s, t, layer.pair
                )

    def test_spo_session_matches_plain_function(self):
        g, a = Symbol("g", 1), Symbol("a", 0)
        layer = triple_from_algebra(
            MaxPlusInterpretation({g: (0, [(1, 1)]), a: (0, [])})
        )
        gt = spo_comparator(layer.pair)
        terms = enumerate_terms([g, a], [Var("x")], 4)
        for s in terms:
            for t in terms:
                assert gt(s, t) == spo_gt(s, t, layer.pair)


class TestStatusFilteredPairs:
    def test_strict_entails_weak_for_raw_pairs(self, z08_trs, z08_cert):
        combined = combine_triples(
            marked_triple(z08_cert.interp_a), marked_triple(z08_cert.interp_b)
        )
        status = z08_cert.status
        a, b, f = z08_trs.signature.symbols
        terms = enumerate_terms([a, b, f], [Var("x")], 4)
        for s in terms[:40]:
            for t in terms[:40]:
                w, st = spo_pair(s, t, status, combined.pair)
                assert w or not st

    def test_z08_pair_chains(self, z08_trs, z08_cert):
        combined = combine_triples(
            marked_triple(z08_cert.interp_a), marked_triple(z08_cert.interp_b)
        )
        dps = dependency_pairs(z08_trs)
        assert len(dps) == 2
        chains = [
            explain_spo_pair(
                dp.lhs, dp.rhs, z08_cert.status, combined.pair, want_strict=True
            )
            for dp in dps
        ]
        assert chains[0] == ("2b", "2a")
        assert chains[1] == ("2a",)

    def test_plain_rules_weak_but_not_strict(self, z08_trs, z08_cert):
        combined = combine_triples(
            marked_triple(z08_cert.interp_a), marked_triple(z08_cert.interp_b)
        )
        for rule in z08_trs.rules:
            w, st = spo_pair(rule.lhs, rule.rhs, z08_cert.status, combined.pair)
            assert w
            assert not st

    def test_status_positions_gate_descent(self):
        # g(a) vs a under the identity layer: only the subterm descent
        # of case 1 can make this strict, and an empty status turns that
        # descent off
        g, a = Symbol("g", 1), Symbol("a", 0)
        interp = LinearPolyInterpretation({g: (0, [1]), a: (0, [])})
        pair = triple_from_algebra(interp).pair
        s = App(g, [App(a)])
        t = App(a)
        empty = Status.empty_for([g, a])
        total = Status.total_for([g, a])
        assert spo_pair(s, t, empty, pair) == (True, False)
        assert spo_pair(s, t, total, pair) == (True, True)

    def test_gwpo_pair_strict_entails_weak(self, stretch_trs, stretch_triples):
        core, refinement = stretch_triples
        status = Status.total_for(stretch_trs.signature.symbols)
        terms = enumerate_terms(stretch_trs.signature.symbols, [Var("x")], 3)
        for s in terms:
            for t in terms:
                w, st = gwpo_pair(s, t, status, core.pair, refinement.pair)
                assert w or not st


class TestGroundTotality:
    def test_strictly_simple_weights_are_ground_total(self):
        a, f = Symbol("a", 0), Symbol("f", 1)
        ta = triple_from_algebra(
            LinearPolyInterpretation({a: (1, []), f: (1, [1])})
        )
        tb = triple_from_precedence(Precedence({a: 0, f: 1}))
        from gwpo import fast_comparator

        fast = fast_comparator(ta.pair, tb.pair)

        def gt(s, t):
            return ta.ge(s, t) and fast(s, t)

        from gwpo.terms import Signature

        assert ground_totality(gt, Signature([a, f]), 6) is None

    def test_trivial_order_yields_a_witness(self):
        a, f = Symbol("a", 0), Symbol("f", 1)
        from gwpo.terms import Signature

        witness = ground_totality(
            lambda s, t: False, Signature([a, f]), 3
        )
        assert witness is not None
        s, t = witness
        assert s != t

    def test_no_ground_terms_is_an_error(self):
        f = Symbol("f", 1)
        from gwpo.terms import Signature

        with pytest.raises(ValueError):
            ground_totality(lambda s, t: True, Signature([f]), 4)


class TestStats:
    def test_total_sums_the_four_counters(self):
        st = ComparisonStats()
        st.weak_a, st.strict_a, st.weak_b, st.strict_b = 1, 2, 3, 4
        assert st.total() == 10
        assert "weak_a=1" in repr(st)
