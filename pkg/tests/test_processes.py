import math

import pytest

from mexkit.constructions import (
    colex_turan_graph,
    complete_graph,
    critical_edge_gadget,
    turan_graph,
)
from mexkit.extremal import beta
from mexkit.graphs import Graph, count_cliques, graph_from_edges
from mexkit.processes import (
    ProcessConfig,
    default_edge_config,
    default_vertex_config,
    edge_deletion_process,
    proof_constants,
    replay_trace,
    stability_experiment,
    vertex_deletion_process,
)

PAW = graph_from_edges([(1, 2), (1, 3), (2, 3), (3, 4)])


def edge_config(g, coefficient, exponent, budget, s=3):
    return ProcessConfig("edge", s, 3, 0.25, coefficient, exponent, budget)


def vertex_config(g, coefficient, budget):
    return ProcessConfig("vertex", 3, 3, 0.25, coefficient, 0.5, budget)


class TestConfig:
    def test_validation(self):
        with pytest.raises(ValueError):
            ProcessConfig("both", 3, 3, 0.1, 1.0, 0.5, 1)
        with pytest.raises(ValueError):
            ProcessConfig("edge", 3, 3, 1.5, 1.0, 0.5, 1)
        with pytest.raises(ValueError):
            ProcessConfig("edge", 3, 3, 0.1, 0.0, 0.5, 1)
        with pytest.raises(ValueError):
            ProcessConfig("edge", 3, 3, 0.1, 1.0, 0.5, -1)

    def test_defaults(self):
        g = turan_graph(3, 6)
        cfg = default_edge_config(g, 3, 3, 0.5)
        assert cfg.coefficient == pytest.approx(2 * 0.25)
        assert cfg.exponent == 0.5
        assert 0 <= cfg.edge_budget <= g.edge_count
        vcfg = default_vertex_config(g, 3, 3, 0.1)
        assert vcfg.coefficient == pytest.approx(beta(3).float_value * 0.8)
        assert vcfg.edge_budget == math.floor(0.1 * g.edge_count)

    def test_budget_cannot_exceed_edges(self):
        g = complete_graph(3)
        with pytest.raises(ValueError, match="budget"):
            edge_deletion_process(g, edge_config(g, 1.0, 0.0, 4))


class TestEdgeProcess:
    def test_pendant_deleted_first(self):
        trace = edge_deletion_process(PAW, edge_config(PAW, 1.0, 0.0, 4))
        assert len(trace.steps) == 1
        assert trace.steps[0].item == (3, 4)
        assert trace.steps[0].value == 0
        assert trace.final_graph.edge_count == 3
        assert not trace.budget_exhausted

    def test_no_deletions_below_every_value(self):
        g = turan_graph(3, 6)
        trace = edge_deletion_process(g, edge_config(g, 1e-9, 0.0, 5))
        assert trace.steps == () and trace.final_graph == g

    def test_zero_budget(self):
        trace = edge_deletion_process(PAW, edge_config(PAW, 1.0, 0.0, 0))
        assert trace.steps == () and trace.final_graph == PAW

    def test_colex_tie_break(self):
        # two pendant edges both have value 0; colex order picks {3,4} before {3,5}
        g = graph_from_edges([(1, 2), (1, 3), (2, 3), (3, 4), (3, 5)])
        trace = edge_deletion_process(g, edge_config(g, 1.0, 0.0, 1))
        assert trace.steps[0].item == (3, 4)

    def test_budget_exhaustion_flag(self):
        g = graph_from_edges([(1, 2), (3, 4), (5, 6)])
        trace = edge_deletion_process(g, edge_config(g, 1.0, 0.0, 2))
        assert len(trace.steps) == 2
        assert trace.budget_exhausted

    def test_clique_accounting_identity(self):
        for g in (PAW, turan_graph(3, 7), colex_turan_graph(3, 20), complete_graph(5)):
            cfg = default_edge_config(g, 3, 3, 0.4)
            trace = edge_deletion_process(g, cfg)
            removed = sum(step.value for step in trace.steps)
            assert count_cliques(g, 3) - count_cliques(trace.final_graph, 3) == removed

    def test_post_state_threshold(self):
        g = colex_turan_graph(3, 20)
        cfg = default_edge_config(g, 3, 3, 0.4)
        trace = edge_deletion_process(g, cfg)
        if not trace.budget_exhausted:
            final = trace.final_graph
            bound = cfg.coefficient * final.edge_count**cfg.exponent
            from mexkit.graphs import cliques_at_edge

            for e in final.edges():
                assert cliques_at_edge(final, e, cfg.s) >= bound

    def test_replay_and_determinism(self):
        g = colex_turan_graph(3, 18)
        cfg = default_edge_config(g, 3, 3, 0.4)
        t1 = edge_deletion_process(g, cfg)
        t2 = edge_deletion_process(g, cfg)
        assert t1 == t2
        assert replay_trace(g, t1) == t1.final_graph


class TestVertexProcess:
    def test_leaves_go_first(self):
        star_plus_triangle = graph_from_edges(
            [(1, 2), (1, 3), (1, 4), (1, 5), (1, 6), (7, 8), (8, 9), (7, 9)]
        )
        cfg = vertex_config(star_plus_triangle, 100.0, 8)
        trace = vertex_deletion_process(star_plus_triangle, cfg)
        order = [step.item for step in trace.steps]
        # all star vertices (degree <= 1 as the star shrinks) go before any
        # triangle vertex
        assert order[:4] == [2, 3, 4, 5]
        assert set(order[:6]) == {1, 2, 3, 4, 5, 6}
        assert all(item in {7, 8, 9} for item in order[6:])

    def test_regular_graph_above_threshold(self):
        g = turan_graph(3, 9)
        cfg = default_vertex_config(g, 3, 3, 0.1)
        trace = vertex_deletion_process(g, cfg)
        assert trace.steps == ()
        assert not trace.budget_exhausted

    def test_zero_budget(self):
        g = PAW
        cfg = vertex_config(g, 100.0, 0)
        trace = vertex_deletion_process(g, cfg)
        assert trace.steps == () and trace.final_graph == g
        assert trace.budget_exhausted  # a qualifying vertex existed
        assert trace.partial_last_vertex.removed_edges == ()

    def test_partial_final_vertex(self):
        g = complete_graph(4)
        cfg = vertex_config(g, 100.0, 4)
        trace = vertex_deletion_process(g, cfg)
        assert len(trace.steps) == 1
        assert trace.steps[0].value == 3
        assert trace.partial_last_vertex is not None
        assert len(trace.partial_last_vertex.removed_edges) == 1
        assert trace.budget_exhausted
        assert g.edge_count - trace.final_graph.edge_count == 4

    def test_exact_budget_spares_next_vertex(self):
        g = complete_graph(4)
        cfg = vertex_config(g, 100.0, 3)
        trace = vertex_deletion_process(g, cfg)
        assert len(trace.steps) == 1
        # budget met exactly, but a qualifying vertex remains: it is spared
        # with zero trimmed edges so the post-state contract stays honest
        assert trace.partial_last_vertex is not None
        assert trace.partial_last_vertex.removed_edges == ()
        assert trace.budget_exhausted

    def test_post_state_or_partial_always(self):
        for budget in range(7):
            g = graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)])
            cfg = vertex_config(g, 10.0, budget)
            trace = vertex_deletion_process(g, cfg)
            if trace.partial_last_vertex is None:
                removed = {step.item for step in trace.steps}
                final = trace.final_graph
                bound = cfg.coefficient * final.edge_count**cfg.exponent
                for v in g.vertices():
                    if v not in removed:
                        assert final.degree(v) >= bound

    def test_post_state_degree_condition(self):
        g = colex_turan_graph(3, 25)
        cfg = default_vertex_config(g, 3, 3, 0.2)
        trace = vertex_deletion_process(g, cfg)
        if trace.partial_last_vertex is None and not trace.budget_exhausted:
            removed = {step.item for step in trace.steps}
            final = trace.final_graph
            bound = cfg.coefficient * math.sqrt(final.edge_count)
            for v in g.vertices():
                if v not in removed:
                    assert final.degree(v) >= bound

    def test_replay_with_partial(self):
        g = complete_graph(4)
        cfg = vertex_config(g, 100.0, 4)
        trace = vertex_deletion_process(g, cfg)
        assert replay_trace(g, trace) == trace.final_graph

    def test_edge_sum_matches(self):
        for budget in range(6):
            g = graph_from_edges([(1, 2), (2, 3), (3, 4), (4, 5), (1, 5), (2, 5)])
            cfg = vertex_config(g, 10.0, budget)
            trace = vertex_deletion_process(g, cfg)
            removed = sum(step.value for step in trace.steps)
            if trace.partial_last_vertex is not None:
                removed += len(trace.partial_last_vertex.removed_edges)
            assert g.edge_count - trace.final_graph.edge_count == removed


class TestStability:
    def test_colex_turan_is_extremal_and_partite(self):
        report = stability_experiment(colex_turan_graph(3, 25), 3, 3, 0.1)
        assert report.input_clique_free
        assert report.ratio == 1.0
        assert report.edits_to_partite == 0
        assert report.edits_within_epsilon

    def test_balanced_graph(self):
        report = stability_experiment(turan_graph(3, 9), 3, 3, 0.1)
        assert report.ratio is not None and report.ratio <= 1.0
        assert report.edits_to_partite == 0
        assert report.meets_sqrt_degree_bound
        assert report.meets_order_degree_bound

    def test_reporting_only_for_precondition_violations(self):
        g = critical_edge_gadget(3, 24)
        adj = list(g.adjacency)
        adj[1] |= 1 << 4
        adj[4] |= 1 << 1
        broken = Graph(g.vertex_count, tuple(adj))
        report = stability_experiment(broken, 3, 3, 0.1)
        assert not report.input_clique_free
        assert report.edits_to_partite > 0


class TestProofConstants:
    def test_values(self):
        pc = proof_constants(3, 3, 0.1)
        assert 0.0 < pc.rho < 1.0
        assert pc.rho_lower < pc.rho
        assert pc.delta == pytest.approx(3 * 1 * (1 / 27) ** 0.5 * 0.01 / 16)
        assert pc.epsilon_prime == pytest.approx(0.1 / 49)
        assert 0.0 < pc.alpha <= 0.01
        assert pc.eta == pytest.approx(0.01 * pc.alpha)

    def test_validation(self):
        with pytest.raises(ValueError):
            proof_constants(1, 3, 0.1)
        with pytest.raises(ValueError):
            proof_constants(3, 3, 1.5)
