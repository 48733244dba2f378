import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from chainsweep import (
    Arithmetic,
    FloatRangeError,
    StateVector,
    TraversalConfig,
    TraversalTrace,
    Variant,
    build_graph,
    combinatorial_bfs,
    combinatorial_ccs,
    components_union_find,
    extract_frontier,
    find_all_components,
    find_connected_component,
    gauss_seidel_step,
    initial_state,
    jacobi_step,
    regularize,
    unsigned_step,
    update_mask,
)

JACOBI = TraversalConfig(variant=Variant.JACOBI)
GS = TraversalConfig(variant=Variant.GAUSS_SEIDEL)
UNSIGNED = TraversalConfig(variant=Variant.UNSIGNED_CCS)

# cancellation-free diagonal for signed chain-sweep equivalence checks:
# collisions need chain-count coefficients in exact d-power ratios, so a d
# well above the corpus coefficient scale never cancels (measured clean on
# corpora far larger than these)
SAFE_D = 101


@st.composite
def graphs(draw, max_n=48):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1)]
    if pairs:
        edges = draw(st.lists(st.sampled_from(pairs), max_size=3 * n, unique=True))
    else:
        edges = []
    return build_graph(edges, n)


class TestConfig:
    def test_saturate_needs_unsigned(self):
        with pytest.raises(ValueError, match="unsigned"):
            TraversalConfig(variant=Variant.JACOBI, arithmetic=Arithmetic.SATURATE)

    def test_float_gets_default_period(self):
        cfg = TraversalConfig(arithmetic=Arithmetic.FLOAT)
        assert cfg.regularize_every == 4

    def test_bad_period(self):
        with pytest.raises(ValueError, match="period"):
            TraversalConfig(arithmetic=Arithmetic.FLOAT, regularize_every=0)

    def test_d_below_one_rejected(self):
        with pytest.raises(ValueError, match=">= 1"):
            TraversalConfig(d=0.5, arithmetic=Arithmetic.FLOAT)

    def test_integral_float_d_coerced(self):
        assert TraversalConfig(d=2.0).d == 2

    def test_fractional_d_needs_float_mode(self):
        with pytest.raises(ValueError, match="integer"):
            TraversalConfig(d=2.5)
        assert TraversalConfig(d=2.5, arithmetic=Arithmetic.FLOAT).d == 2.5

    def test_resolve_d_takes_graph_value(self, path5):
        assert GS.resolve_d(path5).d == 2
        assert TraversalConfig(d=3).resolve_d(path5).d == 3


class TestSteps:
    def test_jacobi_worked_values(self, example8):
        x = initial_state(example8, 1, JACOBI)
        assert x.values == (2, 0, 0, 0, 0, 0, 0, 0)
        x = jacobi_step(example8, x, JACOBI)
        assert x.values == (2, -4, 0, 0, 0, 0, 0, 0)
        x = jacobi_step(example8, x, JACOBI)
        assert x.values == (10, -4, 8, 0, 0, 8, 0, 0)

    def test_jacobi_isolated_vertex(self):
        g = build_graph([], 1, d=2)
        x = jacobi_step(g, initial_state(g, 1, JACOBI), JACOBI)
        assert x.values == (2,)
        x2 = jacobi_step(g, x, JACOBI)
        assert extract_frontier(x, x2) == set()

    def test_gauss_seidel_worked_values(self, example8):
        x = initial_state(example8, 1, GS)
        x = gauss_seidel_step(example8, x, GS)
        assert x.values == (2, -4, 8, -16, 0, 8, -32, 64)
        x = gauss_seidel_step(example8, x, GS)
        assert x.values == (10, -52, 200, -400, -16, 200, -928, 1856)

    @pytest.mark.parametrize("d,expected", [(2, -20), (3, -90)])
    def test_sweep_through_revisit_walk(self, d, expected):
        # start mid-path: the value reaching vertex 3 carries -d**2 - d**4
        g = build_graph([(1, 2), (2, 3)], 3, d=d)
        cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL)
        x = gauss_seidel_step(g, initial_state(g, 2, cfg), cfg)
        assert x.values[2] == -(d**2) - d**4 == expected

    def test_unsigned_path_matches_signed_support(self, path5):
        xu = unsigned_step(path5, initial_state(path5, 1, UNSIGNED), UNSIGNED)
        assert xu.values == (2, 4, 8, 16, 32)
        xs = gauss_seidel_step(path5, initial_state(path5, 1, GS), GS)
        assert xs.values == (2, -4, 8, -16, 32)
        assert xu.support() == xs.support()

    def test_unsigned_d1_needs_no_multiplication(self):
        g = build_graph([(1, 2), (2, 3)], 3, d=1)
        x = unsigned_step(g, initial_state(g, 1, UNSIGNED), UNSIGNED)
        assert x.values == (1, 1, 1)

    def test_step_checks_variant(self, path5):
        x = initial_state(path5, 1, GS)
        with pytest.raises(ValueError, match="expected jacobi"):
            jacobi_step(path5, x, GS)
        with pytest.raises(ValueError, match="expected gauss-seidel"):
            gauss_seidel_step(path5, x, JACOBI)
        with pytest.raises(ValueError, match="expected unsigned"):
            unsigned_step(path5, x, GS)

    def test_float_overflow_signals(self):
        g = build_graph([(1, 2)], 2, d=1e200)
        cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL, arithmetic=Arithmetic.FLOAT)
        x = initial_state(g, 1, cfg)
        with pytest.raises(FloatRangeError, match="not finite"):
            gauss_seidel_step(g, x, cfg)

    @given(graphs(max_n=40), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60)
    def test_saturation_keeps_frontiers(self, g, salt):
        s = salt % g.n + 1
        cap = 2**62
        sat = TraversalConfig(
            variant=Variant.UNSIGNED_CCS, arithmetic=Arithmetic.SATURATE, saturation_cap=cap
        )
        _, t_exact = find_connected_component(g, s, UNSIGNED)
        _, t_sat = find_connected_component(g, s, sat)
        assert t_exact.frontiers == t_sat.frontiers

    def test_saturation_clamps_without_wrapping(self):
        g = build_graph([(1, 2), (2, 3)], 3, d=2)
        cfg = TraversalConfig(
            variant=Variant.UNSIGNED_CCS, arithmetic=Arithmetic.SATURATE, saturation_cap=5
        )
        x = unsigned_step(g, initial_state(g, 1, cfg), cfg)
        assert x.values == (2, 4, 5)


class TestFrontierExtraction:
    def test_worked_transition(self):
        a = StateVector(values=(10, -4, 8, 0, 0, 8, 0, 0), iteration=2, start=1)
        b = StateVector(values=(10, -52, 8, -16, -16, 8, -32, 0), iteration=3, start=1)
        assert extract_frontier(a, b) == {4, 5, 7}

    def test_earlier_transition(self):
        a = StateVector(values=(2, -4, 0, 0, 0, 0, 0, 0), iteration=1, start=1)
        b = StateVector(values=(10, -4, 8, 0, 0, 8, 0, 0), iteration=2, start=1)
        assert extract_frontier(a, b) == {3, 6}

    def test_identical_vectors_empty(self):
        a = StateVector(values=(1, 0, 3), iteration=0, start=1)
        assert extract_frontier(a, a) == set()

    def test_length_mismatch(self):
        a = StateVector(values=(1,), iteration=0, start=1)
        b = StateVector(values=(1, 2), iteration=1, start=1)
        with pytest.raises(ValueError):
            extract_frontier(a, b)


class TestRegularize:
    def test_divides_by_power(self):
        cfg = TraversalConfig(
            variant=Variant.GAUSS_SEIDEL, arithmetic=Arithmetic.FLOAT, regularize_every=4, d=2
        )
        x = StateVector(
            values=(106.0, -52.0, 200.0, -16.0, -16.0, 200.0, -32.0, 64.0),
            iteration=4,
            start=1,
        )
        out = regularize(x, cfg)
        assert out.values == (6.625, -3.25, 12.5, -1.0, -1.0, 12.5, -2.0, 4.0)

    def test_all_zero_stays_zero(self):
        cfg = TraversalConfig(
            variant=Variant.GAUSS_SEIDEL, arithmetic=Arithmetic.FLOAT, regularize_every=2, d=2
        )
        x = StateVector(values=(0.0, 0.0), iteration=2, start=1)
        assert regularize(x, cfg).values == (0.0, 0.0)

    def test_underflow_to_zero_signals(self):
        cfg = TraversalConfig(
            variant=Variant.GAUSS_SEIDEL, arithmetic=Arithmetic.FLOAT, regularize_every=4, d=2
        )
        x = StateVector(values=(5e-324, 1.0), iteration=4, start=2)
        with pytest.raises(FloatRangeError, match="underflow"):
            regularize(x, cfg)

    def test_requires_float_mode(self):
        x = StateVector(values=(4, 2), iteration=1, start=1)
        with pytest.raises(ValueError, match="float"):
            regularize(x, TraversalConfig(d=2))

    @given(graphs(max_n=40), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=40)
    def test_float_run_keeps_exact_frontiers(self, g, salt):
        # dyadic float values track the exact integers while mantissas suffice
        s = salt % g.n + 1
        fl = TraversalConfig(
            variant=Variant.GAUSS_SEIDEL, arithmetic=Arithmetic.FLOAT, regularize_every=4
        )
        _, t_float = find_connected_component(g, s, fl)
        _, t_exact = find_connected_component(g, s, GS)
        assert t_float.frontiers == t_exact.frontiers


class TestMasking:
    def test_mask_after_first_sweep(self, example8):
        cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL, masking=True)
        _, trace = find_connected_component(example8, 1, cfg)
        partial = TraversalTrace(n=8, start=1, records=trace.records[:2])
        assert update_mask(partial, cfg) == {1}
        assert set(partial.records[-1].frontier) == {2, 3, 4, 6, 7, 8}

    def test_mask_empty_at_start(self, example8):
        cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL, masking=True)
        trace = TraversalTrace(
            n=8, start=1, records=(next(iter(find_connected_component(example8, 1, cfg)[1].records)),)
        )
        assert update_mask(trace, cfg) == set()

    def test_mask_empty_when_disabled(self, example8):
        _, trace = find_connected_component(example8, 1, GS)
        assert update_mask(trace, GS) == set()

    @given(graphs(max_n=48), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60)
    def test_masking_never_changes_unsigned_frontiers(self, g, salt):
        s = salt % g.n + 1
        masked = TraversalConfig(variant=Variant.UNSIGNED_CCS, masking=True)
        _, t_plain = find_connected_component(g, s, UNSIGNED)
        _, t_masked = find_connected_component(g, s, masked)
        assert t_plain.frontiers == t_masked.frontiers

    @given(graphs(max_n=40), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=40)
    def test_masking_never_changes_signed_frontiers_safe_d(self, g, salt):
        s = salt % g.n + 1
        plain = TraversalConfig(variant=Variant.GAUSS_SEIDEL, d=SAFE_D)
        masked = TraversalConfig(variant=Variant.GAUSS_SEIDEL, d=SAFE_D, masking=True)
        _, t_plain = find_connected_component(g, s, plain)
        _, t_masked = find_connected_component(g, s, masked)
        assert t_plain.frontiers == t_masked.frontiers


class TestDrivers:
    def test_component_worked_jacobi(self, example8):
        comp, trace = find_connected_component(example8, 1, JACOBI)
        assert comp == frozenset(range(1, 9))
        assert trace.iteration_count == 4

    def test_component_worked_gauss_seidel(self, example8):
        comp, trace = find_connected_component(example8, 1, GS)
        assert comp == frozenset(range(1, 9))
        assert trace.iteration_count == 2

    def test_single_vertex(self):
        g = build_graph([], 1)
        comp, trace = find_connected_component(g, 1, GS)
        assert comp == {1}
        assert trace.iteration_count == 0
        assert trace.frontiers == ((1,),)

    def test_trace_invariants(self, example8):
        _, trace = find_connected_component(example8, 1, JACOBI)
        seen = set()
        for r in trace.records:
            assert r.frontier  # nonempty
            assert not (set(r.frontier) & seen)  # pairwise disjoint
            seen |= set(r.frontier)
        assert trace.visited_after(2) == {1, 2, 3, 6}
        assert trace.component == seen

    def test_all_components_two_parts(self):
        g = build_graph([(1, 2)], 3)
        part = find_all_components(g)
        assert part.k == 2
        assert part.members == ((1, 2), (3,))

    def test_all_components_matches_union_find(self):
        from corpus import mixed_corpus

        for g in mixed_corpus(20, seed=5, max_n=80):
            assert find_all_components(g) == components_union_find(g)

    def test_all_components_seed_rule_order(self):
        g = build_graph([(1, 2), (3, 4)], 4)
        part = find_all_components(g, seed_rule=lambda labels: labels[-1])
        assert part.members == ((3, 4), (1, 2))

    def test_seed_rule_must_pick_unvisited(self):
        g = build_graph([(1, 2)], 2)
        with pytest.raises(ValueError, match="seed rule"):
            find_all_components(g, seed_rule=lambda labels: 99)

    @given(graphs(max_n=40), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60)
    def test_unsigned_support_monotone(self, g, salt):
        s = salt % g.n + 1
        x = initial_state(g, s, UNSIGNED)
        for _ in range(min(g.n, 12)):
            nxt = unsigned_step(g, x, UNSIGNED)
            assert x.support() <= nxt.support()
            assert all(v >= 0 for v in nxt.values)
            x = nxt

    @given(graphs(max_n=48), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=80)
    def test_jacobi_equals_combinatorial_bfs(self, g, salt):
        s = salt % g.n + 1
        _, trace = find_connected_component(g, s, JACOBI)
        assert trace.frontiers == combinatorial_bfs(g, s).frontiers

    @given(graphs(max_n=48), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=80)
    def test_gauss_seidel_equals_combinatorial_ccs_safe_d(self, g, salt):
        s = salt % g.n + 1
        cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL, d=SAFE_D)
        _, trace = find_connected_component(g, s, cfg)
        assert trace.frontiers == combinatorial_ccs(g, s).frontiers

    @given(graphs(max_n=48), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=80)
    def test_unsigned_equals_combinatorial_ccs(self, g, salt):
        s = salt % g.n + 1
        _, trace = find_connected_component(g, s, UNSIGNED)
        assert trace.frontiers == combinatorial_ccs(g, s).frontiers

    @given(graphs(max_n=32), st.integers(min_value=0, max_value=10**6))
    @settings(max_examples=60)
    def test_unsigned_and_signed_supports_match_per_iteration(self, g, salt):
        s = salt % g.n + 1
        gs_cfg = TraversalConfig(variant=Variant.GAUSS_SEIDEL, d=SAFE_D)
        un_cfg = TraversalConfig(variant=Variant.UNSIGNED_CCS, d=SAFE_D)
        xs = initial_state(g, s, gs_cfg)
        xu = initial_state(g, s, un_cfg)
        for _ in range(min(g.n, 10)):
            xs = gauss_seidel_step(g, xs, gs_cfg)
            xu = unsigned_step(g, xu, un_cfg)
            assert xs.support() == xu.support()

    def test_known_cancellation_at_d2_delays_a_visit(self):
        # two ascending 2-chains and one 3-chain into vertex 6 cancel: 8+8-16=0
        g = build_graph(
            [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (2, 6), (3, 6)], 6, d=2
        )
        _, trace = find_connected_component(g, 1, GS)
        assert trace.frontiers != combinatorial_ccs(g, 1).frontiers
        # the unsigned sweep is immune on the same instance
        _, unsigned_trace = find_connected_component(g, 1, UNSIGNED)
        assert unsigned_trace.frontiers == combinatorial_ccs(g, 1).frontiers
