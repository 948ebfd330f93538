from fractions import Fraction

import pytest

from biops.ring import Poly2, ALPHA, BETA, AB
from biops.asep import (all_states, state_index, state_from_index, state_word,
                        mpa_weight, partition_Z, stationary_mpa,
                        build_generator, stationary_oracle, compare)
from biops.errors import DegenerateParameters, SingularSystem


class TestStates:
    def test_roundtrip(self):
        for L in range(1, 6):
            for tau in all_states(L):
                assert state_from_index(state_index(tau), L) == tau

    def test_little_endian(self):
        assert state_index((1, 0, 0)) == 1
        assert state_index((0, 0, 1)) == 4

    def test_word(self):
        assert state_word((1, 0, 1)) == (1, 2, 1)

    def test_bad_length(self):
        with pytest.raises(ValueError):
            all_states(0)


class TestWeights:
    def test_single_site(self):
        assert mpa_weight((1,)) == ALPHA
        assert mpa_weight((0,)) == BETA

    def test_two_sites(self):
        assert mpa_weight((1, 1)) == ALPHA * ALPHA
        assert mpa_weight((0, 0)) == BETA * BETA
        assert mpa_weight((1, 0)) == AB * (ALPHA + BETA)
        assert mpa_weight((0, 1)) == AB

    def test_partition_agrees_and_symmetric(self):
        for L in range(1, 7):
            Z = partition_Z(L)
            swapped = Z.subs(BETA, ALPHA)
            assert Z == swapped, L

    def test_partition_small(self):
        assert partition_Z(1) == ALPHA + BETA


class TestGenerator:
    def test_row_sums_vanish(self):
        g = build_generator(4, Fraction(1, 2), Fraction(1, 3))
        for i in range(g.dim):
            assert g.row_sum(i) == 0

    def test_rates(self):
        g = build_generator(2, Fraction(1, 2), Fraction(1, 3))
        # empty chain: only entry at site 1
        assert g.rates[0] == {1: Fraction(1, 2), 0: Fraction(-1, 2)}
        # (1, 0): hop to (0, 1)
        assert g.rates[1][2] == 1
        # (0, 1): exit at site 2 and entry at site 1
        assert g.rates[2][0] == Fraction(1, 3)
        assert g.rates[2][3] == Fraction(1, 2)

    def test_positive_rates_required(self):
        with pytest.raises(ValueError):
            build_generator(2, 0, Fraction(1, 2))


class TestStationary:
    def test_hand_oracle_L1(self):
        # one site: enter at rate a, leave at rate b; pi(1) = a/(a+b)
        a, b = Fraction(1, 2), Fraction(1, 3)
        pi = stationary_oracle(build_generator(1, a, b))
        assert pi[(1,)] == Fraction(3, 5)
        assert pi[(0,)] == Fraction(2, 5)
        table = stationary_mpa(1, a, b)
        assert table.probabilities[(1,)] == Fraction(3, 5)

    @pytest.mark.parametrize("L", range(1, 8))
    def test_compare(self, L):
        rep = compare(L, Fraction(1, 2), Fraction(1, 3))
        assert not rep.failures
        assert "max discrepancy 0" in " ".join(rep.notes)

    def test_compare_other_points(self):
        for a, b in ((Fraction(2, 3), Fraction(1, 4)),
                     (Fraction(1, 2), Fraction(1, 2)),
                     (Fraction(3), Fraction(2))):
            rep = compare(4, a, b)
            assert not rep.failures, (a, b)

    def test_probabilities_normalize(self):
        table = stationary_mpa(5, Fraction(1, 2), Fraction(2, 3))
        probs = table.probabilities
        assert sum(probs.values()) == 1
        assert all(0 < p < 1 for p in probs.values())

    def test_degenerate_Z(self):
        # alpha = -beta makes Z_1 vanish
        with pytest.raises(DegenerateParameters):
            stationary_mpa(1, Fraction(1, 2), Fraction(-1, 2))

    def test_to_obj(self):
        table = stationary_mpa(2, Fraction(1, 2), Fraction(1, 3))
        obj = table.to_obj()
        assert obj["L"] == 2
        assert len(obj["states"]) == 4
        total = sum(Fraction(r["probability"]) for r in obj["states"])
        assert total == 1
        sym = table.to_obj(symbolic=True)
        assert isinstance(sym["Z"], list)

    def test_singular_guard(self):
        g = build_generator(2, Fraction(1, 2), Fraction(1, 3))
        # zero out everything: rank deficient
        for row in g.rates:
            row.clear()
        with pytest.raises(SingularSystem):
            stationary_oracle(g)
