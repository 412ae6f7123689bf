from fractions import Fraction

import pytest

from ffactors.constructions import g0_desk_instance
from ffactors.graph import (
    complete_graph,
    constant_spec,
    cycle,
    empty_graph,
    join,
    path,
    star,
)
from ffactors.theorems import (
    check_corollary_kappa,
    check_main_theorem,
    check_stability_conjecture,
    check_theorem_ab_factor,
    check_theorem_claw_free,
    check_theorem_min_degree,
    check_theorem_regular_connectivity,
    empirical_validate,
    g0_sweep,
    main_bound,
)


def hypothesis_named(report, name):
    return next(h for h in report.hypotheses if h.name == name)


def octahedron():
    return join(empty_graph(2), join(empty_graph(2), empty_graph(2)))


class TestMainBound:
    def test_values(self):
        assert main_bound(1, 3, 12) == Fraction(9, 4)
        assert main_bound(2, 2, 2) == 0


class TestMainTheorem:
    def test_k5_two_factor(self):
        g = complete_graph(5)
        report = check_main_theorem(g, constant_spec(g, 2), 2, 2, confirm=True)
        assert report.hypotheses_met
        assert report.prediction == "f-factor exists"
        assert report.confirmation == "confirmed"

    def test_g0_fails_only_odd_toughness(self):
        built = g0_desk_instance()
        a, b = built.params["a"], built.params["b"]
        report = check_main_theorem(built.graph, built.spec, a, b)
        assert not report.hypotheses_met
        assert hypothesis_named(report, "stability").satisfied
        assert not hypothesis_named(report, "odd_toughness").satisfied
        assert report.prediction == "no prediction"

    def test_min_degree_hypothesis_fails(self):
        g = complete_graph(2)
        report = check_main_theorem(g, constant_spec(g, 1), 1, 2)
        assert not hypothesis_named(report, "min_degree").satisfied
        assert report.prediction == "no prediction"


class TestCorollaryKappa:
    def test_k5(self):
        g = complete_graph(5)
        report = check_corollary_kappa(g, constant_spec(g, 2), 2, 2, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"

    def test_claw_fails(self):
        g = star(3)
        report = check_corollary_kappa(g, constant_spec(g, 1), 1, 1)
        assert not report.hypotheses_met

    def test_g0_kappa_term_fails(self):
        # alpha exceeds a*kappa through the single-vertex cutset
        built = g0_desk_instance()
        a, b = built.params["a"], built.params["b"]
        report = check_corollary_kappa(built.graph, built.spec, a, b)
        assert not hypothesis_named(report, "stability").satisfied


class TestMinDegreeTheorem:
    def test_k6_two_factor(self):
        g = complete_graph(6)
        report = check_theorem_min_degree(g, constant_spec(g, 2), 2, 2, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"

    def test_sparse_cycle_fails(self):
        g = cycle(8)
        report = check_theorem_min_degree(g, constant_spec(g, 1), 1, 1)
        assert not hypothesis_named(report, "min_degree").satisfied

    def test_k2_perfect_matching(self):
        g = complete_graph(2)
        report = check_theorem_min_degree(g, constant_spec(g, 1), 1, 1, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"


class TestRegularConnectivity:
    def test_k6_perfect_matching(self):
        report = check_theorem_regular_connectivity(complete_graph(6), 1, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"

    def test_c6_stability_fails(self):
        report = check_theorem_regular_connectivity(cycle(6), 1)
        assert hypothesis_named(report, "connectivity").satisfied
        assert not hypothesis_named(report, "stability").satisfied

    def test_odd_order_fails(self):
        report = check_theorem_regular_connectivity(complete_graph(5), 1)
        assert not hypothesis_named(report, "even_order").satisfied

    def test_even_r_rejected(self):
        with pytest.raises(ValueError):
            check_theorem_regular_connectivity(complete_graph(6), 2)


class TestABFactorTheorem:
    def test_k4(self):
        report = check_theorem_ab_factor(complete_graph(4), 1, 2, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"

    def test_claw_fails(self):
        report = check_theorem_ab_factor(star(3), 1, 2)
        assert not report.hypotheses_met

    def test_even_a_bound(self):
        report = check_theorem_ab_factor(cycle(6), 2, 3)
        assert not report.hypotheses_met  # alpha = 3 > 3/2

    def test_b_not_above_a_rejected(self):
        with pytest.raises(ValueError):
            check_theorem_ab_factor(complete_graph(4), 2, 2)


class TestClawFree:
    def test_k8(self):
        g = complete_graph(8)
        report = check_theorem_claw_free(g, constant_spec(g, 2), 2, 2, 3, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"

    def test_low_degree_fails(self):
        g = star(3)
        report = check_theorem_claw_free(g, constant_spec(g, 1), 1, 1, 2)
        assert not hypothesis_named(report, "min_degree").satisfied

    def test_octahedron_stability_fails(self):
        g = octahedron()
        report = check_theorem_claw_free(g, constant_spec(g, 2), 2, 2, 3)
        assert hypothesis_named(report, "star_free").satisfied
        assert not hypothesis_named(report, "stability").satisfied

    def test_domain(self):
        g = complete_graph(4)
        with pytest.raises(ValueError):
            check_theorem_claw_free(g, constant_spec(g, 1), 1, 1, 5)


class TestStabilityConjecture:
    def test_refuted_on_g0(self):
        built = g0_desk_instance()
        a, b = built.params["a"], built.params["b"]
        report = check_stability_conjecture(built.graph, built.spec, a, b, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "refuted"

    def test_holds_on_k5(self):
        g = complete_graph(5)
        report = check_stability_conjecture(g, constant_spec(g, 2), 2, 2, confirm=True)
        assert report.hypotheses_met
        assert report.confirmation == "confirmed"

    def test_path_irrelevant(self):
        g = path(3)
        report = check_stability_conjecture(g, constant_spec(g, 1), 1, 1)
        assert not report.hypotheses_met


class TestEmpiricalValidate:
    def test_zero_trials(self):
        report = empirical_validate("main", 0, 0)
        assert report.hypotheses_met == 0
        assert report.discrepancies == []

    def test_unknown_theorem(self):
        with pytest.raises(ValueError):
            empirical_validate("nonsense", 1, 0)

    def test_main_campaign_sample(self):
        report = empirical_validate("main", 60, 42)
        assert report.hypotheses_met > 0
        assert report.confirmed == report.hypotheses_met
        assert report.discrepancies == []

    def test_deterministic(self):
        a = empirical_validate("main", 20, 7)
        b = empirical_validate("main", 20, 7)
        assert a.to_dict() == b.to_dict()

    def test_g0_sweep_refutes_every_admissible_instance(self):
        report = g0_sweep(2, 3, k_values=[1], delta_values=[12, 14],
                          p_values=[3, 4, 5])
        assert report.trials > 0
        assert len(report.discrepancies) == report.hypotheses_met > 0
        for record in report.discrepancies:
            assert record.confirmation == "refuted"
