import pytest

from webloom.planar_map import apply_dihedral, build_map
from webloom.webs import (
    TYPE_WHITES, Web, WebError, admissible_sites, arrows, boundary_whites,
    check_interior_bounds, classify_type, contract_sinks,
    enumerate_arrangement_webs, enumerate_black_webs,
    enumerate_labeled_black_webs, enumerate_labeled_webs,
    enumerate_mixed_webs, expand_sinks, interior_stats, is_non_elliptic,
    labeled_code, normalize_to_type, skein_reduce, validate_web, web_code,
)


def web_from(n, colors, edges, rotation, loops=0):
    return Web(build_map(n, colors, edges, rotation), loops)


def tripod3():
    """The unique web on three black boundary vertices."""
    return web_from(
        3,
        {"1": "black", "2": "black", "3": "black", "X": "white"},
        [("1", "X", 1), ("2", "X", 1), ("3", "X", 1)],
        {"1": [0], "2": [1], "3": [2], "X": [0, 1, 2]})


def two_tripods(legs1=(1, 2, 3), legs2=(4, 5, 6)):
    colors = {str(i): "black" for i in range(1, 7)}
    colors["X"] = colors["Y"] = "white"
    edges = [(str(i), "X", 1) for i in legs1]
    edges += [(str(i), "Y", 1) for i in legs2]
    rotation = {str(i): [] for i in range(1, 7)}
    for k in range(6):
        rotation[edges[k][0]] = [k]
    rotation["X"] = [0, 1, 2]
    rotation["Y"] = [3, 4, 5]
    return web_from(6, colors, edges, rotation)


def doubled_mid():
    """Tripod whose stem is stretched through a doubled edge."""
    colors = {"1": "black", "2": "black", "3": "black",
              "A": "white", "x": "black", "C": "white"}
    edges = [("1", "A", 1), ("A", "x", 2), ("x", "C", 1),
             ("2", "C", 1), ("3", "C", 1)]
    rotation = {"1": [0], "2": [3], "3": [4],
                "A": [0, 1], "x": [1, 2], "C": [2, 3, 4]}
    return web_from(3, colors, edges, rotation)


def square_web():
    """Interior four-cycle w1-b1-w2-b2 with a leg from w1 to boundary 1,
    w2 to 4, and pendant whites on b1 (legs 2, 3) and b2 (legs 5, 6)."""
    colors = {str(i): "black" for i in range(1, 7)}
    colors |= {"w1": "white", "w2": "white", "p1": "white", "p2": "white",
               "b1": "black", "b2": "black"}
    edges = [("1", "w1", 1), ("2", "p1", 1), ("3", "p1", 1),
             ("4", "w2", 1), ("5", "p2", 1), ("6", "p2", 1),
             ("w1", "b1", 1), ("b1", "w2", 1), ("w2", "b2", 1),
             ("b2", "w1", 1), ("b1", "p1", 1), ("b2", "p2", 1)]
    rotation = {"1": [0], "2": [1], "3": [2], "4": [3], "5": [4], "6": [5],
                "w1": [0, 6, 9], "b1": [6, 10, 7], "w2": [7, 3, 8],
                "b2": [9, 8, 11], "p1": [1, 2, 10], "p2": [11, 4, 5]}
    return web_from(6, colors, edges, rotation)


def theta_beside_tripod():
    """Tripod plus a floating two-vertex component joined by a triple edge."""
    colors = {"1": "black", "2": "black", "3": "black",
              "X": "white", "U": "white", "V": "black"}
    edges = [("1", "X", 1), ("2", "X", 1), ("3", "X", 1), ("U", "V", 3)]
    rotation = {"1": [0], "2": [1], "3": [2], "X": [0, 1, 2],
                "U": [3], "V": [3]}
    return web_from(3, colors, edges, rotation)


class TestValidation:
    def test_tripod_ok(self):
        validate_web(tripod3())

    def test_boundary_degree_capped(self):
        with pytest.raises(WebError, match="degree > 1"):
            validate_web(web_from(
                2, {"1": "black", "2": "black", "X": "white"},
                [("1", "X", 2), ("2", "X", 1)],
                {"1": [0], "2": [1], "X": [0, 1]}))

    def test_interior_must_be_trivalent(self):
        with pytest.raises(WebError, match="not trivalent"):
            validate_web(web_from(
                2, {"1": "black", "2": "black", "X": "white"},
                [("1", "X", 1), ("2", "X", 1)],
                {"1": [0], "2": [1], "X": [0, 1]}))

    def test_multiplicity_counts_toward_degree(self):
        validate_web(doubled_mid())


class TestNonElliptic:
    def test_tripod(self):
        assert is_non_elliptic(tripod3())

    def test_loops_disqualify(self):
        assert not is_non_elliptic(Web(tripod3().graph, loops=1))

    def test_doubled_edge_is_a_bigon(self):
        assert not is_non_elliptic(doubled_mid())

    def test_interior_square(self):
        assert not is_non_elliptic(square_web())

    def test_boundary_faces_may_be_small(self):
        # every face of the two-tripod web touches the boundary circle
        assert is_non_elliptic(two_tripods())


class TestArrows:
    def test_no_arrows_on_trees(self):
        assert arrows(two_tripods()) == []

    def test_single_arrow(self):
        (w,) = enumerate_labeled_webs(["black", "white"])
        assert arrows(w) == [(1, 2)]
        assert is_non_elliptic(w)


class TestSkein:
    def test_non_elliptic_fixed(self):
        w = tripod3()
        out = skein_reduce(w)
        assert out.terms == {labeled_code(w): 1}

    def test_loop_factor(self):
        w = tripod3()
        out = skein_reduce(Web(w.graph, loops=2))
        assert out.terms == {labeled_code(w): 9}

    def test_doubled_edge_factor(self):
        out = skein_reduce(doubled_mid())
        assert out.terms == {labeled_code(tripod3()): 2}

    def test_triple_edge_collapses_to_loop(self):
        out = skein_reduce(theta_beside_tripod())
        assert out.terms == {labeled_code(tripod3()): 6}

    def test_square_smooths_both_ways(self):
        out = skein_reduce(square_web())
        expected = {labeled_code(two_tripods()): 1,
                    labeled_code(two_tripods((2, 3, 4), (5, 6, 1))): 1}
        assert out.terms == expected
        assert set(out.webs) == set(out.terms)
        assert all(is_non_elliptic(w) for w in out.webs.values())

    def test_rotating_the_input_rotates_the_output(self):
        base = skein_reduce(square_web())
        rot = skein_reduce(Web(apply_dihedral(square_web().graph, shift=2)))
        expected = {}
        for code, coeff in base.terms.items():
            moved = Web(apply_dihedral(base.webs[code].graph, shift=2))
            expected[labeled_code(moved)] = coeff
        assert rot.terms == expected


class TestEnumerationSmall:
    def test_three_is_the_tripod(self):
        webs = enumerate_labeled_black_webs(3)
        assert len(webs) == 1
        assert labeled_code(webs[0]) == labeled_code(tripod3())

    def test_six(self):
        webs = enumerate_labeled_black_webs(6)
        assert len(webs) == 5
        assert len({labeled_code(w) for w in webs}) == 5
        for w in webs:
            validate_web(w)
            assert is_non_elliptic(w)
            check_interior_bounds(w)

    def test_six_census(self):
        census = enumerate_black_webs(6)
        assert census.total == 5
        assert sorted(orbit for _, orbit in census.classes) == [2, 3]

    def test_nine(self):
        webs = enumerate_labeled_black_webs(9)
        # matches the standard-tableau count of shape 3x3
        assert len(webs) == 42
        for w in webs:
            check_interior_bounds(w)

    def test_size_must_be_multiple_of_three(self):
        with pytest.raises(WebError, match="multiple of 3"):
            enumerate_labeled_black_webs(4)
        with pytest.raises(WebError, match="multiple of 3"):
            enumerate_labeled_black_webs(0)

    def test_mixed_boundary_balance_checked(self):
        with pytest.raises(WebError, match="mod 3"):
            enumerate_labeled_webs(["black", "white", "black"])

    def test_small_mixed_boundary(self):
        webs = enumerate_labeled_webs(["black", "white", "white", "black"])
        # either two nested arrows or an interior edge fanned to all four
        assert len(webs) == 2
        arrow_sets = sorted(arrows(w) for w in webs)
        assert arrow_sets == [[], [(1, 2), (4, 3)]]

    def test_codes_invariant_under_dihedral_action(self):
        for w in enumerate_labeled_black_webs(6):
            for reflect in (False, True):
                for shift in range(6):
                    moved = Web(apply_dihedral(w.graph, shift, reflect))
                    assert web_code(moved) == web_code(w)


class TestInteriorBounds:
    def test_stats_of_two_tripods(self):
        st = interior_stats(two_tripods())
        assert st == {"interior": 2, "white": 2, "black": 0,
                      "components": 2, "cycle_rank": 0}

    def test_fabricated_graph_fails_count(self):
        # hexagon ring hung from only three legs: too much interior
        colors = {"1": "white", "2": "white", "3": "white",
                  "A": "white", "C": "white", "E": "white",
                  "b": "black", "d": "black", "f": "black"}
        edges = [("A", "b", 1), ("b", "C", 1), ("C", "d", 1), ("d", "E", 1),
                 ("E", "f", 1), ("f", "A", 1), ("1", "b", 1), ("2", "d", 1),
                 ("3", "f", 1)]
        rotation = {"1": [6], "2": [7], "3": [8],
                    "A": [0, 5], "b": [6, 1, 0], "C": [1, 2], "d": [7, 3, 2],
                    "E": [3, 4], "f": [8, 5, 4]}
        bad = web_from(3, colors, edges, rotation)
        with pytest.raises(WebError, match="n \\+ 2c - 2m"):
            check_interior_bounds(bad)


class TestContraction:
    def test_sites_need_a_shared_claw(self):
        assert admissible_sites(two_tripods()) == \
            [(1, 2), (2, 3), (4, 5), (5, 6)]

    def test_contract_one_site(self):
        w = contract_sinks(two_tripods(), [(1, 2)])
        assert w.n == 5
        validate_web(w)
        assert boundary_whites(w) == {1}
        # the tripod's third toe becomes an arrow into the sink
        assert arrows(w) == [(2, 1)]

    def test_contract_two_sites(self):
        w = contract_sinks(two_tripods(), [(2, 3), (5, 6)])
        assert w.n == 4
        assert boundary_whites(w) == {2, 4}
        assert arrows(w) == [(1, 2), (3, 4)]

    def test_wraparound_site_lands_on_position_one(self):
        base = two_tripods((6, 1, 2), (3, 4, 5))
        assert (6, 1) in admissible_sites(base)
        w = contract_sinks(base, [(6, 1)])
        assert w.n == 5
        assert boundary_whites(w) == {1}
        assert arrows(w) == [(2, 1)]

    def test_not_contractible_without_shared_neighbor(self):
        with pytest.raises(WebError, match="not claw-contractible"):
            contract_sinks(two_tripods(), [(3, 4)])

    def test_non_adjacent_pair_rejected(self):
        with pytest.raises(WebError, match="adjacent"):
            contract_sinks(two_tripods(), [(1, 3)])

    def test_overlapping_sites_rejected(self):
        with pytest.raises(WebError, match="overlap"):
            contract_sinks(two_tripods(), [(1, 2), (2, 3)])

    def test_expand_inverts_contract(self):
        base = two_tripods()
        for sites in ([(1, 2)], [(2, 3), (5, 6)], [(1, 2), (4, 5)]):
            w = contract_sinks(base, sites)
            back = expand_sinks(w)
            assert labeled_code(back) == labeled_code(base)

    def test_expand_keeps_all_black_webs(self):
        base = two_tripods()
        assert labeled_code(expand_sinks(base)) == labeled_code(base)

    def test_expansion_is_non_elliptic(self):
        for w in enumerate_arrangement_webs(5):
            assert is_non_elliptic(expand_sinks(w))


class TestTypes:
    def test_reference_webs_classify_to_themselves(self):
        for t in TYPE_WHITES:
            w = enumerate_arrangement_webs(t)[0]
            assert classify_type(w) == (t, (0, False))

    def test_reflected_translate(self):
        ref = enumerate_arrangement_webs(5)[0]
        moved = Web(apply_dihedral(ref.graph, shift=5, reflect=True))
        assert boundary_whites(moved) == {2, 3, 6, 8}
        assert classify_type(moved) == (5, (5, True))
        t, norm = normalize_to_type(moved)
        assert t == 5
        assert boundary_whites(norm) == TYPE_WHITES[5]
        assert web_code(norm) == web_code(moved)

    def test_rejects_wrong_boundary(self):
        with pytest.raises(WebError, match="8 boundary"):
            classify_type(two_tripods())

    def test_arrangement_type_must_exist(self):
        with pytest.raises(WebError, match="no boundary type"):
            enumerate_arrangement_webs(9)


class TestArrangements:
    def test_each_arrangement_has_23_webs(self):
        # dim of the sl3 invariant space of four vectors and four covectors
        for t in TYPE_WHITES:
            webs = enumerate_arrangement_webs(t)
            assert len(webs) == 23
            for w in webs:
                validate_web(w)
                assert is_non_elliptic(w)
                assert boundary_whites(w) == TYPE_WHITES[t]
                check_interior_bounds(w)


class TestTwelve:
    def test_count(self):
        assert len(enumerate_labeled_black_webs(12)) == 462

    def test_census(self):
        census = enumerate_black_webs(12)
        assert census.total == 462
        assert len(census.classes) == 32
        assert sum(orbit for _, orbit in census.classes) == 462
        assert sorted(orbit for _, orbit in census.classes) == \
            sorted([24] * 11 + [12] * 14 + [6, 6, 4, 4, 4, 3, 3])

    def test_interior_profile(self):
        stats = [interior_stats(w) for w in enumerate_labeled_black_webs(12)]
        assert max(st["interior"] for st in stats) == 16
        for w in enumerate_labeled_black_webs(12):
            check_interior_bounds(w)


class TestMixedCensus:
    def test_census_matches_direct_enumeration(self):
        census = enumerate_mixed_webs()
        direct = {}
        for t in TYPE_WHITES:
            for w in enumerate_arrangement_webs(t):
                direct.setdefault(web_code(w), w)
        assert {code for _, code, _ in census.entries} == set(direct)
        assert census.classes == 116
        assert census.by_type == {1: 15, 2: 23, 3: 12, 4: 12,
                                  5: 23, 6: 15, 7: 11, 8: 5}

    def test_entries_are_normalized(self):
        census = enumerate_mixed_webs()
        for t, code, norm in census.entries:
            validate_web(norm)
            assert is_non_elliptic(norm)
            assert boundary_whites(norm) == TYPE_WHITES[t]
            assert web_code(norm) == code
