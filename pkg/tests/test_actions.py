"""Letter moves, the toggle action, beta moves, and the alpha bijection."""
import itertools

import pytest

from stirlab.actions import (
    alpha,
    alpha_inverse,
    alpha_inverse_trace,
    beta_move,
    beta_set,
    classify_index,
    descent_bottom_set,
    fs_action,
    fs_move,
    fs_toggle_value,
    index_sets,
    movable_index,
    orbit,
    orbit_members,
)
from stirlab.objects import is_stirling, iter_objects
from stirlab.stats import stirling_stat_record


def word(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


class TestFsMove:
    def test_worked_examples(self):
        sigma = word("2447887332115665")
        assert fs_move(sigma, 1) == word("4478873322115665")
        assert fs_move(sigma, 4) == word("2448877332115665")
        assert fs_move(fs_move(sigma, 1), 9) == sigma
        assert fs_move(fs_move(sigma, 4), 6) == sigma

    def test_rejects_inactive_positions(self):
        with pytest.raises(ValueError):
            fs_move(word("1122"), 1)  # a left ascent-plateau, not movable
        with pytest.raises(ValueError):
            fs_move(word("1221"), 4)
        with pytest.raises(ValueError):
            fs_move(word("1122"), 9)  # out of range

    @pytest.mark.parametrize("n", range(1, 6))
    def test_moves_preserve_validity(self, n):
        for w in iter_objects("stirling", n):
            sets = index_sets(w)
            for i in sets.dasc | sets.dp:
                assert is_stirling(fs_move(w, i))


class TestIndexSets:
    def test_hand_evaluations(self):
        assert index_sets(word("2211")) == index_sets((2, 2, 1, 1))
        s = index_sets(word("2211"))
        assert (s.dasc, s.dp, s.lap) == (frozenset(), {3}, {1})
        s = index_sets(word("1122"))
        assert (s.dasc, s.dp, s.lap) == (frozenset(), frozenset(), {1, 3})
        s = index_sets(word("1221"))
        assert (s.dasc, s.dp, s.lap) == ({1}, frozenset(), {2})

    @pytest.mark.parametrize("n", range(1, 6))
    def test_sets_match_counts(self, n):
        for w in iter_objects("stirling", n):
            s = index_sets(w)
            r = stirling_stat_record(w)
            assert (len(s.dasc), len(s.dp), len(s.lap)) == (r.dasc, r.dp, r.lap)
            assert not (s.dasc & s.dp) and not (s.dasc & s.lap) and not (s.dp & s.lap)

    def test_classify_out_of_range(self):
        with pytest.raises(ValueError):
            classify_index(word("11"), 0)


class TestToggleAction:
    @pytest.mark.parametrize("n", range(1, 6))
    def test_value_toggles_are_involutions(self, n):
        for w in iter_objects("stirling", n):
            for v in range(1, n + 1):
                assert fs_toggle_value(fs_toggle_value(w, v), v) == w

    @pytest.mark.parametrize("n", range(1, 5))
    def test_value_toggles_commute(self, n):
        for w in iter_objects("stirling", n):
            for u, v in itertools.combinations(range(1, n + 1), 2):
                assert fs_toggle_value(fs_toggle_value(w, u), v) == fs_toggle_value(
                    fs_toggle_value(w, v), u
                )

    def test_at_most_one_movable_index_per_value(self):
        for w in iter_objects("stirling", 4):
            sets = index_sets(w)
            active_values = [w[i - 1] for i in sets.dasc | sets.dp]
            assert len(active_values) == len(set(active_values))
            for v in range(1, 5):
                i = movable_index(w, v)
                assert (i in sets.dasc | sets.dp) if i else (
                    v not in active_values
                )

    def test_empty_selection_is_identity(self):
        assert fs_action(word("1221"), ()) == word("1221")
        assert fs_action(word("1221"), {2}) == word("1221")  # inactive position

    def test_full_selection_swaps_dasc_and_dp(self):
        for w in iter_objects("stirling", 5):
            s = index_sets(w)
            moved = fs_action(w, s.dasc | s.dp)
            a, b = stirling_stat_record(w), stirling_stat_record(moved)
            assert (b.lap, b.dasc, b.dp) == (a.lap, a.dp, a.dasc)


class TestOrbits:
    def test_singleton_orbit(self):
        o = orbit(word("1122"))
        assert o.representative == word("1122")
        assert o.free_indices == frozenset()
        assert list(orbit_members(o)) == [word("1122")]

    def test_two_element_orbit(self):
        o = orbit(word("1221"))
        assert o.representative == word("1221")
        assert o.size == 2
        assert set(orbit_members(o)) == {word("1221"), word("2211")}
        assert orbit(word("2211")) == o

    @pytest.mark.parametrize("n", range(7))
    def test_orbit_sizes_sum_to_the_class_size(self, n):
        import math

        reps = {orbit(w).representative for w in iter_objects("stirling", n)}
        total = sum(2 ** len(orbit(rep).free_indices) for rep in reps)
        assert total == math.prod(range(1, 2 * n, 2))

    def test_orbit_members_accepts_a_word(self):
        assert set(orbit_members(word("2211"))) == {word("1221"), word("2211")}

    @pytest.mark.parametrize("n", range(1, 6))
    def test_orbits_partition_the_class(self, n):
        seen: dict[tuple, tuple] = {}
        reps = set()
        for w in iter_objects("stirling", n):
            o = orbit(w)
            assert stirling_stat_record(o.representative).dp == 0
            seen[w] = o.representative
            reps.add((o.representative, o.free_indices))
        # every word reached from exactly one representative
        total = 0
        covered = set()
        for rep, free in reps:
            members = list(orbit_members(orbit(rep)))
            assert len(members) == len(set(members)) == 2 ** len(free)
            total += len(members)
            covered.update(members)
        assert total == len(seen)
        assert covered == set(seen)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_orbit_statistics(self, n):
        # lap constant; dasc drops by the subset size while dp picks it up
        for w in iter_objects("stirling", n):
            o = orbit(w)
            rep_r = stirling_stat_record(o.representative)
            values = sorted(o.representative[i - 1] for i in o.free_indices)
            for r in range(len(values) + 1):
                for subset in itertools.combinations(values, r):
                    m = o.representative
                    for v in subset:
                        m = fs_toggle_value(m, v)
                    mr = stirling_stat_record(m)
                    assert mr.lap == rep_r.lap
                    assert mr.dasc == rep_r.dasc - len(subset)
                    assert mr.dp == len(subset)
            break  # one orbit per order keeps this quick; partition test covers the rest


class TestBetaMoves:
    def test_worked_examples(self):
        sigma = word("3443578876652211")
        assert beta_move(sigma, 1) == word("1344357887665221")
        assert beta_move(sigma, 2) == word("2344357887665211")
        assert beta_move(sigma, 6) == word("3443567887652211")

    def test_beta_set_empty(self):
        assert beta_set(word("2211"), ()) == word("2211")

    def test_raw_moves_need_the_order_convention(self):
        # regression: on 331221 the first 2 is only movable once the 1 has
        # left, so the two orders differ and beta_set fixes increasing order
        w = word("331221")
        assert beta_move(beta_move(w, 1), 2) == word("123321")
        assert beta_move(beta_move(w, 2), 1) == word("133221")
        assert beta_set(w, (2, 1)) == beta_set(w, (1, 2)) == word("123321")

    @pytest.mark.parametrize("n", range(1, 5))
    def test_doubled_words_commute(self, n):
        # on the doubled words fed to the alpha inverse the raw moves do
        # commute pairwise
        for pi in iter_objects("permutation", n):
            w = tuple(v for v in pi for _ in range(2))
            for u, v in itertools.combinations(range(1, n + 1), 2):
                assert beta_move(beta_move(w, u), v) == beta_move(beta_move(w, v), u)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_beta_normalizes(self, n):
        values = range(1, n + 1)
        for w in iter_objects("stirling", n):
            moved = beta_set(w, values)
            r = stirling_stat_record(moved)
            assert r.dp == 0 and r.lap + r.dasc == n
            assert alpha(moved) == alpha(w)
            mr = stirling_stat_record(w)
            if mr.dp == 0 and mr.lap + mr.dasc == n:
                assert moved == w


class TestAlpha:
    def test_worked_example(self):
        assert alpha(word("344355661221")) == (4, 3, 5, 6, 2, 1)

    def test_doubled_identity(self):
        assert alpha(word("1122")) == (1, 2)

    def test_inverse_published_rows(self):
        assert alpha_inverse((1, 2, 3)) == word("112233")
        assert alpha_inverse((1, 3, 2)) == word("112332")
        assert alpha_inverse((3, 1, 2)) == word("133122")

    def test_trace_of_published_rows(self):
        assert alpha_inverse_trace((2, 3, 1)) == (
            word("223311"),
            frozenset({1}),
            word("122331"),
        )
        assert alpha_inverse_trace((3, 2, 1)) == (
            word("332211"),
            frozenset({1, 2}),
            word("123321"),
        )

    def test_descent_bottom_set(self):
        assert descent_bottom_set((4, 3, 5, 6, 2, 1)) == {3, 2, 1}

    @pytest.mark.parametrize("n", range(5))
    def test_round_trip(self, n):
        for pi in iter_objects("permutation", n):
            w = alpha_inverse(pi)
            assert alpha(w) == pi
            r = stirling_stat_record(w)
            assert r.dp == 0 and r.lap + r.dasc == n
