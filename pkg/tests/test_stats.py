"""Statistic definitions against worked examples and cross-statistic laws."""
import pytest

from stirlab.errors import ResourceLimitError
from stirlab.objects import iter_objects
from stirlab.polynomials import QPoly
from stirlab.stats import (
    DEFAULT_BOUNDS,
    distribution,
    matching_stats,
    perm_des,
    signed_stat_record,
    signed_stats,
    stirling_stat_record,
    stirling_stats,
)


def word(s: str) -> tuple[int, ...]:
    return tuple(int(c) for c in s)


class TestStirlingStats:
    def test_worked_example_ascent_plateaus(self):
        r = stirling_stats(word("442332115665"))
        assert (r.ap, r.lap) == (2, 3)

    def test_worked_example_double_ascents(self):
        r = stirling_stats(word("244332115665"))
        assert (r.dasc, r.dp) == (2, 2)

    def test_hand_evaluated_2211(self):
        r = stirling_stats(word("2211"))
        assert r == stirling_stat_record(word("2211"))
        assert (r.asc, r.des, r.plat) == (1, 2, 2)
        assert (r.ap, r.lap, r.fap) == (0, 1, 1)
        assert (r.dasc, r.dp) == (0, 1)

    def test_single_pair_word(self):
        r = stirling_stats(word("11"))
        assert r.fap == 1
        assert (r.asc, r.des, r.plat) == (1, 1, 1)

    def test_empty_word(self):
        r = stirling_stats(())
        assert r == stirling_stat_record(())
        assert r.asc == r.des == r.fap == 0

    def test_invalid_word_rejected(self):
        with pytest.raises(ValueError):
            stirling_stats(word("1212"))

    @pytest.mark.parametrize("n", range(8))
    def test_structural_laws(self, n):
        # asc = lap + dasc, plat = lap + dp, fap = ap + lap,
        # lap = ap + [plateau start], asc + des + plat = 2n + 1 (n >= 1)
        for w in iter_objects("stirling", min(n, 6)):
            r = stirling_stat_record(w)
            assert r.asc == r.lap + r.dasc
            assert r.plat == r.lap + r.dp
            assert r.fap == r.ap + r.lap
            assert r.lap == r.ap + (1 if len(w) >= 2 and w[0] == w[1] else 0)
            if w:
                assert r.asc + r.des + r.plat == len(w) + 1


class TestSignedStats:
    def test_worked_example(self):
        r = signed_stats((4, -3, 1, 5, 2))
        assert (r.desA, r.fdes, r.fasc) == (2, 4, 5)

    def test_one_letter(self):
        assert signed_stats((1,)).fdes == 0
        assert signed_stats((1,)).fasc == 1
        assert signed_stats((-1,)).fdes == 1
        assert signed_stats((-1,)).fasc == 0

    def test_rejects_bad_input(self):
        with pytest.raises(ValueError):
            signed_stats(())
        with pytest.raises(ValueError):
            signed_stats((2, 2))

    @pytest.mark.parametrize("n", range(1, 6))
    def test_structural_laws(self, n):
        for values in iter_objects("signed", n):
            r = signed_stat_record(values)
            assert r.fdes + r.fasc == 2 * n - 1
            assert r.fdes == 2 * r.desA + (1 if values[0] < 0 else 0)
            assert r.desB == r.desA + (1 if values[0] < 0 else 0)


class TestMatchingAndPermutation:
    def test_single_block(self):
        r = matching_stats([(1, 2)])
        assert (r.el, r.ol) == (1, 0)

    def test_crossing(self):
        r = matching_stats([(1, 3), (2, 4)])
        assert (r.el, r.ol) == (1, 1)

    def test_matching_polynomials_n2(self):
        ol = distribution("matching", 2, ["ol"]).poly()
        el = distribution("matching", 2, ["el"]).poly()
        assert ol == QPoly((1, 2))  # 1 + 2x, brute force over the 3 matchings
        assert el == QPoly((0, 2, 1))  # 2x + x^2

    def test_el_plus_ol(self):
        for blocks in iter_objects("matching", 3):
            r = matching_stats(blocks)
            assert r.el + r.ol == 3

    def test_perm_des(self):
        assert perm_des((1, 2, 3)) == 0
        assert perm_des((3, 2, 1)) == 2
        assert perm_des((4, 3, 5, 6, 2, 1)) == 3


class TestDistribution:
    def test_fap_order_2(self):
        table = distribution("stirling", 2, ["fap"])
        assert table.counts == {(1,): 1, (2,): 1, (3,): 1}

    def test_joint_equals_refinement_polynomial(self):
        # the (lap, dasc, dp) distribution at order 3 carries the published
        # coefficients: x(y^2+z^2) + 4x^2(y+z) + 2xyz + 2x^2 + x^3
        tri = distribution("stirling", 3, ["lap", "dasc", "dp"]).tripoly()
        assert tri.coefficient(1, 2, 0) == 1
        assert tri.coefficient(1, 0, 2) == 1
        assert tri.coefficient(2, 1, 0) == 4
        assert tri.coefficient(2, 0, 1) == 4
        assert tri.coefficient(1, 1, 1) == 2
        assert tri.coefficient(2, 0, 0) == 2
        assert tri.coefficient(3, 0, 0) == 1
        assert sum(tri.terms.values()) == 15

    def test_signed_fdes_order_1(self):
        table = distribution("signed", 1, ["fdes"])
        assert table.counts == {(0,): 1, (1,): 1}

    def test_totals_match_cardinalities(self):
        assert distribution("stirling", 4, ["asc"]).total() == 105
        assert distribution("signed", 3, ["fdes"]).total() == 48
        assert distribution("matching", 4, ["el"]).total() == 105
        assert distribution("permutation", 4, ["des"]).total() == 24

    def test_marginal_and_poly(self):
        table = distribution("stirling", 3, ["lap", "dasc", "dp"])
        lap = table.marginal(["lap"])
        assert lap.poly() == distribution("stirling", 3, ["lap"]).poly()
        with pytest.raises(ValueError):
            table.poly()

    def test_bound_errors(self):
        with pytest.raises(ResourceLimitError):
            distribution("stirling", DEFAULT_BOUNDS["stirling"] + 1, ["asc"])
        # an explicit limit unlocks larger orders
        distribution("permutation", 5, ["des"], max_n=5)
        with pytest.raises(ResourceLimitError):
            distribution("permutation", 6, ["des"], max_n=5)

    def test_unknown_names_rejected(self):
        with pytest.raises(ValueError):
            distribution("stirling", 2, ["nope"])
        with pytest.raises(ValueError):
            distribution("widget", 2, ["asc"])

    def test_json_shape(self):
        obj = distribution("stirling", 2, ["fap"]).to_json()
        assert obj["class"] == "stirling"
        assert obj["stats"] == ["fap"]
        assert obj["entries"][0] == {"value": [1], "count": 1}
