from fractions import Fraction
from math import comb

import pytest

from conftest import random_graph
from fraccover.bounds import (
    BoundRangeError,
    ab_colorable_bound,
    kneser_beta_lower_bound,
    n_colorable_bound,
    verify_hom_bound,
    verify_n_colorable_bound,
)
from fraccover.cover import cover_number
from fraccover.families import FamilyKind, beta_k
from fraccover.graph import chromatic_number, clique_number, complete, cycle, is_ab_colorable, kneser, petersen


class TestKneserLowerBound:
    def test_published_examples(self):
        assert kneser_beta_lower_bound(10, 2, 2) == 17
        assert kneser_beta_lower_bound(6, 2, 2) == 10

    def test_b3(self):
        assert kneser_beta_lower_bound(12, 3, 2) == max(comb(8, 3), comb(12, 3) - comb(10, 3)) == 100

    @pytest.mark.parametrize("k", [1, 3, 5])
    def test_range(self, k):
        with pytest.raises(BoundRangeError):
            kneser_beta_lower_bound(6, 2, k)

    @pytest.mark.parametrize("a,b,k", [(6, 2, 2), (7, 2, 2), (8, 2, 2), (8, 2, 3), (9, 2, 2), (9, 2, 3), (10, 2, 2)])
    def test_is_lower_bound_and_tight_for_pairs(self, a, b, k):
        # b = 2 is the proven case of the matching bound, so equality holds
        assert kneser_beta_lower_bound(a, b, k) == beta_k(kneser(a, b), k)


class TestColourableBounds:
    def test_n_colourable(self):
        assert n_colorable_bound(5, 2) == Fraction(5, 2)

    def test_n_colourable_range(self):
        with pytest.raises(BoundRangeError):
            n_colorable_bound(3, 4)

    def test_ab_cases(self):
        assert ab_colorable_bound(5, 2, 1) == Fraction(5, 2)
        assert ab_colorable_bound(10, 2, 2) == Fraction(45, 17)
        assert ab_colorable_bound(10, 2, 5) == 1

    def test_ab_range(self):
        with pytest.raises(BoundRangeError):
            ab_colorable_bound(10, 2, 6)

    @pytest.mark.parametrize("n", range(1, 9))
    def test_b1_reduces_to_n_colourable(self, n):
        for k in range(1, n + 1):
            assert ab_colorable_bound(n, 1, k) == n_colorable_bound(n, k)

    def test_ab_bound_holds_on_kneser(self):
        for a, b in [(5, 2), (6, 2), (7, 2), (8, 2)]:
            g = kneser(a, b)
            for k in range(1, a // b + 1):
                assert cover_number(g, FamilyKind.clique_free(k)).objective <= ab_colorable_bound(a, b, k)

    def test_clique_number_below_floor(self):
        for g in (cycle(5), cycle(7), petersen(), complete(3), kneser(6, 2)):
            for a, b in [(5, 2), (6, 2), (7, 3), (3, 1), (7, 2)]:
                if is_ab_colorable(g, a, b):
                    assert clique_number(g) <= a // b

    def test_n_colourable_bound_on_random_graphs(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 8), rng.random())
            chi = chromatic_number(g)
            for k in range(1, clique_number(g) + 1):
                rep = verify_n_colorable_bound(g, chi, k)
                assert rep.satisfied


class TestHomBound:
    def test_c5_to_petersen_tight(self):
        rep = verify_hom_bound(cycle(5), kneser(5, 2), 1)
        assert rep.satisfied and rep.computed == rep.bound == Fraction(5, 2)

    def test_c4_to_k2(self):
        rep = verify_hom_bound(cycle(4), complete(2), 1)
        assert rep.satisfied and rep.computed == rep.bound == 2

    def test_no_homomorphism(self):
        rep = verify_hom_bound(complete(4), complete(3), 1)
        assert not rep.applicable and rep.satisfied is None

    def test_into_complete(self, rng):
        for _ in range(20):
            g = random_graph(rng, rng.randint(1, 8), rng.random())
            n = chromatic_number(g)
            for k in range(1, clique_number(g) + 1):
                rep = verify_hom_bound(g, complete(n), k)
                assert rep.satisfied and rep.bound == Fraction(n, k)
