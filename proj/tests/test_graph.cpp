#include <doctest.h>

#include "graph.hpp"
#include "helpers.hpp"

using namespace cbm;
using test_util::make_graph;

TEST_CASE("interval validation") {
    CHECK_NOTHROW(make_graph(5, {{1, 5}, {0, 0}, {3, 3}}));
    CHECK_THROWS_AS(make_graph(5, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(5, {{3, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(5, {{4, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(5, {{1, 6}}), std::invalid_argument);
    CHECK_THROWS_AS(make_graph(5, {{-1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(compact_graph(-1, {}), std::invalid_argument);
}

TEST_CASE("sizes and edge count") {
    compact_graph g = make_graph(6, {{1, 3}, {0, 0}, {6, 6}, {2, 5}});
    CHECK(g.n_u() == 4);
    CHECK(g.n_v() == 6);
    CHECK(g.edge_count() == 3 + 0 + 1 + 4);
    CHECK(g.row(2).empty());
    CHECK(g.row(2).length() == 0);
    CHECK(g.row(4).length() == 4);
    CHECK(g.contains({1, 3}));
    CHECK_FALSE(g.contains({1, 4}));
    CHECK_FALSE(g.contains({2, 1}));
    CHECK_FALSE(g.contains({0, 1}));
    CHECK_FALSE(g.contains({5, 1}));
}

TEST_CASE("zero-size graphs") {
    compact_graph empty;
    CHECK(empty.n_u() == 0);
    CHECK(empty.n_v() == 0);
    CHECK(empty.edge_count() == 0);

    compact_graph no_cols(0, {{0, 0}, {0, 0}});
    CHECK(no_cols.n_u() == 2);
    CHECK(no_cols.edge_count() == 0);
}

TEST_CASE("adjacency round trip") {
    compact_graph g = make_graph(7, {{2, 4}, {0, 0}, {7, 7}});
    auto lists = adjacency_lists(g);
    REQUIRE(lists.size() == 4);
    CHECK(lists[1] == std::vector<v_index>{2, 3, 4});
    CHECK(lists[2].empty());
    CHECK(lists[3] == std::vector<v_index>{7});

    // adjacency_lists pads index 0; from_adjacency expects plain 0-based input
    std::vector<std::vector<v_index>> plain(lists.begin() + 1, lists.end());
    compact_graph back = compact_graph::from_adjacency(7, plain);
    CHECK(back.n_u() == g.n_u());
    for (u_index u = 1; u <= g.n_u(); ++u) {
        CHECK(back.row(u).left == g.row(u).left);
        CHECK(back.row(u).right == g.row(u).right);
    }
}

TEST_CASE("from_adjacency rejects gaps and disorder") {
    std::vector<std::vector<v_index>> gap{{}, {2, 4}};
    try {
        compact_graph::from_adjacency(5, gap);
        FAIL("expected not_convex_error");
    } catch (const not_convex_error& e) {
        CHECK(e.u == 2);
        CHECK(e.gap_position == 3);
    }

    std::vector<std::vector<v_index>> unsorted{{}, {3, 2}};
    CHECK_THROWS_AS(compact_graph::from_adjacency(5, unsorted), std::invalid_argument);
    std::vector<std::vector<v_index>> duplicate{{}, {2, 2}};
    CHECK_THROWS_AS(compact_graph::from_adjacency(5, duplicate), std::invalid_argument);
    std::vector<std::vector<v_index>> out_of_range{{}, {0, 1}};
    CHECK_THROWS_AS(compact_graph::from_adjacency(5, out_of_range), std::invalid_argument);
    std::vector<std::vector<v_index>> too_big{{}, {5, 6}};
    CHECK_THROWS_AS(compact_graph::from_adjacency(5, too_big), std::invalid_argument);
}

TEST_CASE("independence is mutual non-containment") {
    compact_graph g = make_graph(6, {{1, 3}, {3, 6}, {5, 6}});
    CHECK(edges_independent(g, {1, 1}, {2, 4}));
    CHECK(edges_independent(g, {2, 4}, {1, 1}));
    // 3 lies in both intervals
    CHECK_FALSE(edges_independent(g, {1, 1}, {2, 3}));
    CHECK_FALSE(edges_independent(g, {1, 3}, {2, 4}));
    // same row shares the interval with itself
    CHECK_FALSE(edges_independent(g, {1, 1}, {1, 3}));
    // containment in one direction suffices to break independence
    CHECK_FALSE(edges_independent(g, {2, 6}, {3, 5}));
    CHECK(edges_independent(g, {1, 2}, {3, 6}));
}

TEST_CASE("rows sorted by left endpoint") {
    compact_graph g = make_graph(9, {{4, 6}, {0, 0}, {1, 2}, {4, 9}, {2, 2}});
    auto order = rows_sorted_by_left(g);
    REQUIRE(order.size() == 4);
    CHECK(order == std::vector<u_index>{3, 5, 1, 4});
}

TEST_CASE("all_edges enumerates row-major") {
    compact_graph g = make_graph(4, {{3, 4}, {0, 0}, {1, 1}});
    auto edges = all_edges(g);
    REQUIRE(edges.size() == 3);
    CHECK(edges[0] == edge{1, 3});
    CHECK(edges[1] == edge{1, 4});
    CHECK(edges[2] == edge{3, 1});
    CHECK(static_cast<std::int64_t>(edges.size()) == g.edge_count());
}

TEST_CASE("weighted graph accessors") {
    compact_graph g = make_graph(5, {{2, 4}, {0, 0}, {5, 5}});
    weighted_graph wg(g, {7, -2, 9, 4});
    CHECK(wg.weight(1, 2) == 7);
    CHECK(wg.weight(1, 3) == -2);
    CHECK(wg.weight(1, 4) == 9);
    CHECK(wg.weight(3, 5) == 4);
    auto row1 = wg.row_weights(1);
    REQUIRE(row1.size() == 3);
    CHECK(row1[1] == -2);
    CHECK(wg.row_weights(2).empty());

    CHECK_THROWS_AS(weighted_graph(g, {1, 2, 3}), std::invalid_argument);
    CHECK_THROWS_AS(weighted_graph(g, {1, 2, 3, 4, 5}), std::invalid_argument);
}
