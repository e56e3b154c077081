"""Constructive colorings, bound formulas, and the tree classifiers."""

import json
from importlib import resources

import pytest

import locachrom as lc
from locachrom.constructions import ConstructionError
from locachrom.locating import Coloring


def load_g3() -> lc.Graph:
    text = resources.files("locachrom.data").joinpath("g3.txt").read_text()
    return lc.parse_graph(text)


def p2_union_c4() -> lc.Graph:
    return lc.disjoint_union(lc.generate("path", 2), lc.generate("cycle", 4))


class TestCoronaBounds:
    def test_theorem2_pair(self):
        report = lc.corona_bounds(lc.generate("path", 3), p2_union_c4())
        assert report.lower == 5 and report.lower_tag == "join-component-max"
        # chi_L(P3) = 3 by the solver, then 3 + (3-1) + (5-1).
        assert report.upper == 9 and report.upper_tag == "construction-lemma4"

    def test_p2_p2(self):
        report = lc.corona_bounds(lc.generate("path", 2), lc.generate("path", 2))
        assert (report.lower, report.upper) == (3, 4)

    def test_indeterminate_on_tiny_budget(self):
        prod_g = lc.generate("path", 4)
        report = lc.corona_bounds(prod_g, lc.generate("cycle", 4), budget=3)
        assert report.indeterminate

    def test_json_fields(self):
        report = lc.corona_bounds(lc.generate("path", 2), lc.generate("path", 2))
        data = json.loads(report.to_json())
        assert data["tags"] == {"join-component-max": 3, "construction-lemma4": 4}


class TestCoronaUpperColoring:
    def test_p2_p2(self):
        g = h = lc.generate("path", 2)
        result = lc.corona_upper_coloring(
            g, h, Coloring(2, (1, 2)), [Coloring(3, (1, 2, 3))]
        )
        assert result.colors_used == 4 and result.verified

    def test_p3_pendants(self):
        g = lc.generate("path", 3)
        result = lc.corona_upper_coloring(
            g, lc.generate("empty", 1),
            Coloring(3, (1, 2, 3)), [Coloring(2, (1, 2))],
        )
        assert result.colors_used == 4 and result.verified

    def test_p2_two_p2_components(self):
        h = lc.disjoint_union(lc.generate("path", 2), lc.generate("path", 2))
        result = lc.corona_upper_coloring(
            lc.generate("path", 2), h,
            Coloring(2, (1, 2)),
            [Coloring(3, (1, 2, 3)), Coloring(3, (1, 2, 3))],
        )
        assert result.colors_used == 6 and result.verified

    def test_apex_convention_enforced(self):
        g = h = lc.generate("path", 2)
        with pytest.raises(lc.InputError, match="apex"):
            lc.corona_upper_coloring(
                g, h, Coloring(2, (1, 2)), [Coloring(3, (1, 3, 2))]
            )

    def test_non_locating_f_rejected(self):
        g = lc.generate("path", 3)
        with pytest.raises(lc.InputError):
            lc.corona_upper_coloring(
                g, lc.generate("empty", 1),
                Coloring(2, (1, 2, 1)), [Coloring(2, (1, 2))],
            )

    def test_optimal_parts_satisfy_preconditions(self):
        g = lc.generate("path", 3)
        h = p2_union_c4()
        f, c_list = lc.optimal_upper_parts(g, h)
        result = lc.corona_upper_coloring(g, h, f, c_list)
        assert result.verified
        assert result.colors_used == lc.corona_bounds(g, h).upper


class TestTheorem2Fixture:
    def test_codes_match_table(self):
        fx = lc.fixture_theorem2()
        codes = lc.color_codes(fx.graph, fx.result.coloring)
        for v in range(fx.graph.n):
            assert codes[v] == fx.expected_codes[fx.labels[v]], fx.labels[v]

    def test_verified_with_five_colors(self):
        fx = lc.fixture_theorem2()
        assert fx.result.verified and fx.result.colors_used == 5

    def test_shipped_data_files_match(self):
        fx = lc.fixture_theorem2()
        data_dir = resources.files("locachrom.data")
        assert lc.parse_graph(
            data_dir.joinpath("theorem2_graph.txt").read_text()
        ) == fx.graph
        shipped = json.loads(data_dir.joinpath("theorem2_coloring.json").read_text())
        assert Coloring.from_json_dict(shipped) == fx.result.coloring
        table = json.loads(data_dir.joinpath("theorem2_codes.json").read_text())
        assert table["labels"] == list(fx.labels)
        assert {k: tuple(v) for k, v in table["codes"].items()} == fx.expected_codes


class TestEmptyCorona:
    def test_p3_three_pendants(self):
        result = lc.empty_corona_coloring(lc.generate("path", 3), 3)
        assert result.colors_used == 4 and result.verified

    def test_p2_two_pendants(self):
        result = lc.empty_corona_coloring(lc.generate("path", 2), 2)
        assert result.colors_used == 3 and result.verified
        prod, _ = lc.corona(lc.generate("path", 2), lc.generate("empty", 2))
        assert lc.locating_lower_bound(prod)[0] == 3

    def test_order_guard(self):
        with pytest.raises(lc.InputError):
            lc.empty_corona_coloring(lc.generate("path", 3), 1)


class TestStarCorona:
    @pytest.mark.parametrize("n,expected", [(4, 3), (5, 4), (9, 4), (16, 5), (100, 11)])
    def test_closed_form(self, n, expected):
        assert lc.star_corona_chi_L(n) == expected

    def test_n4_exact_colors(self):
        # Frozen from the construction formula, confirmed by verify.
        result = lc.star_corona_coloring(4)
        assert result.verified
        colors = result.coloring.colors
        assert colors[0] == 1 and colors[4] == 3          # x, y
        assert colors[1:4] == (2, 2, 3)                   # x_1..x_3
        assert (colors[5], colors[6], colors[7]) == (3, 1, 2)  # y_1..y_3

    @pytest.mark.parametrize("n", [9, 16])
    def test_verified(self, n):
        result = lc.star_corona_coloring(n)
        assert result.verified
        assert result.colors_used == lc.star_corona_chi_L(n)

    def test_minimum_order(self):
        with pytest.raises(lc.InputError):
            lc.star_corona_coloring(3)


class TestTreeEmptyCoronaBounds:
    def test_p2_m2(self):
        report = lc.tree_empty_corona_bounds(lc.generate("path", 2), 2)
        assert report.lower == 3
        prod, _ = lc.corona(lc.generate("path", 2), lc.generate("empty", 2))
        assert lc.chi_L(prod).value == 3

    def test_p6_m1(self):
        report = lc.tree_empty_corona_bounds(lc.generate("path", 6), 1)
        assert (report.lower, report.upper) == (2, 4)
        assert report.tags == {"m-plus-1": 2, "chiL-plus-m": 4}

    def test_star5_m1(self):
        report = lc.tree_empty_corona_bounds(lc.generate("star", 5), 1)
        assert (report.lower, report.upper) == (2, 6)

    def test_non_tree_rejected(self):
        with pytest.raises(lc.InputError):
            lc.tree_empty_corona_bounds(lc.generate("cycle", 4), 1)


class TestPendantTreeClassifier:
    def test_p3(self):
        assert lc.pendant_tree_classifier(lc.generate("path", 3), load_g3()) == 3

    def test_p6(self):
        assert lc.pendant_tree_classifier(lc.generate("path", 6), load_g3()) == 3

    def test_p7(self):
        assert lc.pendant_tree_classifier(lc.generate("path", 7), load_g3()) == 4

    def test_g3_itself(self):
        g3 = load_g3()
        assert lc.pendant_tree_classifier(g3, g3) == 3

    def test_wrong_chi_rejected(self):
        with pytest.raises(lc.InputError):
            lc.pendant_tree_classifier(lc.generate("star", 4), load_g3())

    def test_bad_g3_detected(self):
        # A g3 that wrongly contains P7 contradicts the exact solver.
        bad_g3 = lc.generate("path", 7)
        with pytest.raises(ConstructionError):
            lc.pendant_tree_classifier(lc.generate("path", 7), bad_g3)
