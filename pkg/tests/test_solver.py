import random

import pytest

from conftest import brute_maximum_matching_size, seeded_corpus
from ffactors.graph import (
    DegreeSpec,
    complete_graph,
    constant_spec,
    cycle,
    petersen_graph,
    star,
)
from ffactors.instances import random_graph
from ffactors.solver import (
    FactorSubgraph,
    brute_force_ab_factor,
    brute_force_f_factor,
    find_f_factor,
    maximum_matching,
    tutte_gadget,
    verify_f_factor,
)
from ffactors.tutte import find_violating_pair


class TestGadget:
    def test_k2(self):
        g = complete_graph(2)
        gadget = tutte_gadget(g, constant_spec(g, 1))
        assert gadget.size == 2
        assert len(gadget.bridges) == 1
        assert all(role[0] == "external" for role in gadget.roles)

    def test_c4_two_factor_all_bridges(self):
        g = cycle(4)
        gadget = tutte_gadget(g, constant_spec(g, 2))
        assert gadget.size == 8
        # no internals: the gadget is exactly the 4 bridge edges
        assert sum(len(a) for a in gadget.adj) // 2 == 4

    def test_k4_size(self):
        g = complete_graph(4)
        gadget = tutte_gadget(g, constant_spec(g, 1))
        assert gadget.size == 4 * (2 * 3 - 1)

    def test_infeasible_target_rejected(self):
        g = cycle(4)
        with pytest.raises(ValueError, match="exceeds degree"):
            tutte_gadget(g, constant_spec(g, 3))


class TestMaximumMatching:
    def test_even_cycle(self):
        assert len(maximum_matching(cycle(6))) == 3

    def test_odd_cycle(self):
        assert len(maximum_matching(cycle(5))) == 2

    def test_petersen_perfect(self):
        assert len(maximum_matching(petersen_graph())) == 5

    def test_is_a_matching(self):
        for g in seeded_corpus(20, 2, 9, seed=41):
            mm = maximum_matching(g)
            seen = set()
            for u, v in mm:
                assert g.has_edge(u, v)
                assert u not in seen and v not in seen
                seen |= {u, v}

    def test_matches_exhaustive(self):
        for g in seeded_corpus(25, 2, 8, seed=43):
            assert len(maximum_matching(g)) == brute_maximum_matching_size(g)

    def test_deterministic(self):
        g = petersen_graph()
        assert maximum_matching(g) == maximum_matching(g)


class TestFindFFactor:
    def test_c4_two_factor_is_cycle(self):
        g = cycle(4)
        factor = find_f_factor(g, constant_spec(g, 2))
        assert factor.edges == g.edges()

    def test_parity_guard(self):
        g = complete_graph(3)
        assert find_f_factor(g, constant_spec(g, 1)) is None

    def test_target_above_degree(self):
        g = cycle(4)
        assert find_f_factor(g, constant_spec(g, 4)) is None

    def test_zero_factor(self):
        g = complete_graph(2)
        factor = find_f_factor(g, constant_spec(g, 0))
        assert factor == FactorSubgraph(())

    def test_agrees_with_oracle_and_tutte(self):
        rng = random.Random(47)
        checked = 0
        for _ in range(200):
            n = rng.randint(2, 7)
            g = random_graph(n, rng.choice([0.3, 0.6, 0.9]), rng.randrange(10**6))
            f = DegreeSpec(tuple(rng.randint(0, 3) for _ in range(n)))
            if f.total() % 2:
                continue
            checked += 1
            fast = find_f_factor(g, f)
            slow = brute_force_f_factor(g, f)
            pair = find_violating_pair(g, f)
            assert (fast is not None) == (slow is not None) == (pair is None)
            if fast is not None:
                assert verify_f_factor(g, f, fast)
        assert checked > 50


class TestVerify:
    def test_valid_two_factor(self):
        g = cycle(4)
        assert verify_f_factor(g, constant_spec(g, 2), FactorSubgraph(g.edges()))

    def test_missing_edge(self):
        g = cycle(4)
        assert not verify_f_factor(
            g, constant_spec(g, 2), FactorSubgraph(g.edges()[:3])
        )

    def test_perfect_matching(self):
        g = complete_graph(4)
        assert verify_f_factor(
            g, constant_spec(g, 1), FactorSubgraph(((0, 1), (2, 3)))
        )

    def test_foreign_edge(self):
        g = cycle(4)
        assert not verify_f_factor(
            g, constant_spec(g, 1), FactorSubgraph(((0, 2), (1, 3)))
        )


class TestBruteForce:
    def test_two_factor_of_k4(self):
        g = complete_graph(4)
        factor = brute_force_f_factor(g, constant_spec(g, 2))
        assert factor is not None and verify_f_factor(g, constant_spec(g, 2), factor)

    def test_empty_factor(self):
        g = complete_graph(2)
        assert brute_force_f_factor(g, constant_spec(g, 0)) == FactorSubgraph(())

    def test_odd_clique_no_perfect_matching(self):
        g = complete_graph(3)
        assert brute_force_f_factor(g, constant_spec(g, 1)) is None

    def test_size_cap(self):
        g = complete_graph(8)
        with pytest.raises(ValueError, match="cap"):
            brute_force_f_factor(g, constant_spec(g, 1))


class TestABFactor:
    def test_cycle_exact(self):
        g = cycle(5)
        factor = brute_force_ab_factor(g, 2, 2)
        assert factor.edges == g.edges()

    def test_k4_perfect_matching_qualifies(self):
        g = complete_graph(4)
        factor = brute_force_ab_factor(g, 1, 2)
        assert factor is not None
        degs = [factor.degree_of(v) for v in range(4)]
        assert all(1 <= d <= 2 for d in degs)

    def test_claw_impossible(self):
        assert brute_force_ab_factor(star(3), 1, 1) is None
