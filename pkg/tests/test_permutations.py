"""Core symmetric-group arithmetic."""

import pytest

from heckezero.permutations import (
    all_perms, bruhat_leq, compose, conj_adjacent, conj_w0, cycle_string,
    cycle_type, cycles, even_orbits, from_cycles, identity, inverse, length,
    length_delta_conj, left_descents, longest_element, right_descents,
)

from oracles import bruhat_leq_oracle


def perm(*cycs, n):
    return from_cycles(n, cycs)


class TestCompose:
    def test_identity(self):
        assert compose(identity(3), identity(3)) == identity(3)

    def test_involution(self):
        s1 = (2, 1, 3)
        assert compose(s1, s1) == identity(3)

    def test_s1_s2_is_three_cycle(self):
        s1, s2 = (2, 1, 3), (1, 3, 2)
        assert compose(s1, s2) == (2, 3, 1)
        assert cycles(compose(s1, s2)) == ((1, 2, 3),)

    def test_degree_mismatch(self):
        with pytest.raises(ValueError):
            compose(identity(3), identity(4))


class TestInverse:
    def test_identity(self):
        assert inverse(identity(4)) == identity(4)

    def test_five_cycle(self):
        p = perm((1, 5, 2, 4, 3), n=5)
        assert inverse(p) == perm((1, 3, 4, 2, 5), n=5)

    def test_double_inverse_exhaustive(self):
        for n in range(9):
            assert all(inverse(inverse(p)) == p for p in all_perms(n))


class TestLength:
    def test_identity(self):
        assert length(identity(6)) == 0

    def test_s3_examples(self):
        assert length(perm((1, 3), n=3)) == 3
        assert length(perm((1, 2), n=3)) == 1
        assert length(perm((2, 3), n=3)) == 1

    def test_longest_element(self):
        for n in range(11):
            assert length(longest_element(n)) == n * (n - 1) // 2


class TestDescents:
    def test_identity_has_none(self):
        assert left_descents(identity(5)) == set()
        assert right_descents(identity(5)) == set()

    def test_longest_has_all(self):
        assert right_descents(longest_element(3)) == {1, 2}
        assert left_descents(longest_element(3)) == {1, 2}

    @pytest.mark.parametrize("n", range(2, 8))
    def test_right_descent_iff_length_drop(self, n):
        for p in all_perms(n):
            lp = length(p)
            for i in range(1, n):
                ps = p[: i - 1] + (p[i], p[i - 1]) + p[i + 1:]
                assert (i in right_descents(p)) == (length(ps) < lp)


class TestConjAdjacent:
    def test_fixes_identity(self):
        assert conj_adjacent(identity(4), 2) == identity(4)

    def test_three_cycle(self):
        assert conj_adjacent(perm((1, 2, 3), n=3), 1) == perm((1, 3, 2), n=3)

    def test_six_cycle(self):
        p = perm((1, 6, 2, 5, 3, 4), n=6)
        assert conj_adjacent(p, 1) == perm((1, 5, 3, 4, 2, 6), n=6)

    def test_index_range(self):
        with pytest.raises(ValueError):
            conj_adjacent(identity(3), 3)


class TestLengthDeltaConj:
    def test_identity_case(self):
        for i in range(1, 4):
            assert length_delta_conj(identity(4), i) == 0

    def test_stair_six(self):
        p = perm((1, 6, 2, 5, 3, 4), n=6)
        assert length_delta_conj(p, 2) == -2

    @pytest.mark.parametrize("n", range(2, 8))
    def test_matches_direct_computation(self, n):
        for p in all_perms(n):
            lp = length(p)
            for i in range(1, n):
                delta = length_delta_conj(p, i)
                assert delta in (-2, 0, 2)
                assert delta == length(conj_adjacent(p, i)) - lp


class TestConjW0:
    def test_identity(self):
        assert conj_w0(identity(5)) == identity(5)

    def test_generator_flip(self):
        assert conj_w0((2, 1, 3)) == (1, 3, 2)

    def test_cycle_example(self):
        assert conj_w0(perm((1, 4, 2), n=4)) == perm((1, 3, 4), n=4)

    def test_preserves_length(self):
        for n in range(7):
            assert all(length(conj_w0(p)) == length(p) for p in all_perms(n))


class TestW0Laws:
    @pytest.mark.parametrize("n", range(1, 7))
    def test_length_complement(self, n):
        w0 = longest_element(n)
        top = length(w0)
        for w in all_perms(n):
            assert length(compose(w, w0)) == top - length(w)
            assert length(compose(w0, w)) == top - length(w)


class TestCycles:
    def test_identity_trivial_cycles(self):
        assert cycles(identity(3)) == ((1,), (2,), (3,))

    def test_stair_42(self):
        p = perm((1, 6, 2, 5), (3, 4), n=6)
        assert cycles(p) == ((1, 6, 2, 5), (3, 4))

    def test_stair_4531(self):
        p = perm((1, 13, 2, 12), (3, 11, 4, 10, 5), (9, 6, 8), n=13)
        assert cycles(p, include_trivial=False) == (
            (1, 13, 2, 12), (3, 11, 4, 10, 5), (6, 8, 9))

    def test_round_trip(self):
        for n in range(7):
            for p in all_perms(n):
                assert from_cycles(n, cycles(p)) == p

    def test_cycle_string(self):
        assert cycle_string(perm((1, 3), n=3)) == "(1,3)(2)"


class TestCycleType:
    def test_identity(self):
        assert cycle_type(identity(4)) == (1, 1, 1, 1)

    def test_stair_42(self):
        assert cycle_type(perm((1, 6, 2, 5), (3, 4), n=6)) == (4, 2)

    def test_transposition(self):
        assert cycle_type(perm((1, 3), n=3)) == (2, 1)


class TestEvenOrbits:
    def test_identity_empty(self):
        assert even_orbits(identity(5)) == frozenset()

    def test_stair_42(self):
        p = perm((1, 6, 2, 5), (3, 4), n=6)
        assert even_orbits(p) == frozenset(
            {frozenset({1, 2, 5, 6}), frozenset({3, 4})})


class TestBruhat:
    def test_identity_is_minimum(self):
        for w in all_perms(4):
            assert bruhat_leq(identity(4), w)

    def test_w0_is_maximum(self):
        for n in range(1, 6):
            w0 = longest_element(n)
            assert all(bruhat_leq(w, w0) for w in all_perms(n))

    def test_matches_reduced_word_oracle_s4(self):
        for u in all_perms(4):
            for w in all_perms(4):
                assert bruhat_leq(u, w) == bruhat_leq_oracle(u, w)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_bruhat_symmetries(self, n):
        w0 = longest_element(n)
        for u in all_perms(n):
            for w in all_perms(n):
                ref = bruhat_leq(u, w)
                assert ref == bruhat_leq(compose(w, w0), compose(u, w0))
                assert ref == bruhat_leq(compose(w0, w), compose(w0, u))
                assert ref == bruhat_leq(conj_w0(u), conj_w0(w))


class TestLengthProducts:
    @pytest.mark.parametrize("n", range(2, 6))
    def test_subadditive_and_parity_exhaustive(self, n):
        lens = {p: length(p) for p in all_perms(n)}
        for p in lens:
            for q in lens:
                lpq = length(compose(p, q))
                assert lpq <= lens[p] + lens[q]
                assert (lpq - lens[p] - lens[q]) % 2 == 0
