#include <doctest.h>

#include <map>
#include <set>

#include "certify.hpp"
#include "chain_cover.hpp"
#include "helpers.hpp"
#include "oracle.hpp"
#include "text_io.hpp"
#include "unweighted.hpp"

using namespace cbm;
using test_util::make_graph;

namespace {

cover_options verified() {
    cover_options opts;
    opts.verify_extension_rule = true;
    return opts;
}

chain_cover cover_of(const compact_graph& g) {
    unweighted_result r = max_cardinality_induced_matching(g);
    return minimum_chain_cover(g, r.colorings, verified());
}

// Full certificate properties: the cover is valid, reaches every edge, and
// its chain count equals the matching size. Chains may overlap: an extended
// entry can reach into columns another entry of the same row already covers.
void check_cover(const compact_graph& g, const unweighted_result& r, const chain_cover& cover) {
    CHECK(cover.chain_count == r.size);
    verdict v = check_chain_cover(g, cover);
    CAPTURE(v.reason);
    CHECK(v.valid);
    CHECK(check_certificate(g, r.edges, cover).valid);

    std::set<std::pair<u_index, v_index>> seen;
    std::int64_t expanded = 0;
    for (const auto& chain : expand_cover_edges(g, cover))
        for (const edge& e : chain) {
            CHECK(g.contains(e));
            seen.emplace(e.u, e.v);
            ++expanded;
        }
    CHECK(static_cast<std::int64_t>(seen.size()) == g.edge_count());
    CHECK(expanded <= 2 * g.edge_count());

    for (const cover_entry& e : cover.entries) {
        CHECK(e.chain >= 1);
        CHECK(e.chain <= cover.chain_count);
    }
    // entries arrive grouped by chain, nested order inside
    for (std::size_t k = 1; k < cover.entries.size(); ++k) {
        const cover_entry& a = cover.entries[k - 1];
        const cover_entry& b = cover.entries[k];
        CHECK(a.chain <= b.chain);
        if (a.chain == b.chain) CHECK(a.end <= b.end);
    }
}

}  // namespace

TEST_CASE("worked example gets three disjoint chains") {
    compact_graph g = test_util::worked_example();
    unweighted_result r = max_cardinality_induced_matching(g);
    chain_cover cover = minimum_chain_cover(g, r.colorings, verified());
    check_cover(g, r, cover);
    CHECK(cover.chain_count == 3);

    // frozen construction: chain 1 collects the three value-1 spans, chain 2
    // pairs row 4 with the tail of row 3, chain 3 is row 5 alone
    CHECK(format_cover(cover) ==
          "3 6\n1 1 1 2\n1 2 2 2\n1 3 2 2\n2 4 3 3\n2 3 3 5\n3 5 5 5\n");
}

TEST_CASE("trivial cases") {
    compact_graph empty;
    chain_cover c = cover_of(empty);
    CHECK(c.chain_count == 0);
    CHECK(c.entries.empty());

    compact_graph blanks = make_graph(3, {{0, 0}});
    c = cover_of(blanks);
    CHECK(c.chain_count == 0);
    CHECK(c.entries.empty());

    compact_graph one = make_graph(3, {{1, 3}});
    unweighted_result r = max_cardinality_induced_matching(one);
    c = minimum_chain_cover(one, r.colorings, verified());
    check_cover(one, r, c);
    CHECK(c.chain_count == 1);
    REQUIRE(c.entries.size() == 1);
    CHECK(c.entries[0].begin == 1);
    CHECK(c.entries[0].end == 3);
}

TEST_CASE("extension reaches left of a row's own span") {
    // row 2's second span starts at 5, but row 4 (whole row, same value,
    // earlier end) starts at 4; nesting forces row 2's entry back to 4,
    // overlapping its own first span at column 4
    compact_graph g = make_graph(8, {{1, 4}, {2, 8}, {3, 3}, {4, 7}});
    unweighted_result r = max_cardinality_induced_matching(g);
    chain_cover cover = minimum_chain_cover(g, r.colorings, verified());
    check_cover(g, r, cover);

    bool extended = false;
    for (const cover_entry& e : cover.entries)
        if (e.chain == 2 && e.row == 2 && e.begin == 4 && e.end == 8) extended = true;
    CHECK(extended);

    std::int64_t expanded = 0;
    for (const auto& chain : expand_cover_edges(g, cover)) expanded += chain.size();
    CHECK(expanded == g.edge_count() + 1);  // edge (2,4) sits in both chains
}

TEST_CASE("chain count equals matching size exhaustively") {
    graph_enumerator all(3, 3);
    while (auto g = all.next()) {
        CAPTURE(format_compact(*g));
        unweighted_result r = max_cardinality_induced_matching(*g);
        chain_cover cover = minimum_chain_cover(*g, r.colorings, verified());
        check_cover(*g, r, cover);
    }
}

TEST_CASE("random instances stay certified") {
    std::mt19937_64 rng(41);
    for (int it = 0; it < 150; ++it) {
        compact_graph g = test_util::random_graph(rng, 70, 50, 10);
        CAPTURE(format_compact(g));
        unweighted_result r = max_cardinality_induced_matching(g);
        chain_cover cover = minimum_chain_cover(g, r.colorings, verified());
        check_cover(g, r, cover);
    }
}

TEST_CASE("colorings that lie about the graph are rejected") {
    compact_graph g = make_graph(5, {{1, 3}, {2, 4}});
    unweighted_result r = max_cardinality_induced_matching(g);

    SUBCASE("unknown row") {
        auto bad = r.colorings;
        bad[0].row = 7;
        CHECK_THROWS_AS(minimum_chain_cover(g, bad), inconsistent_colorings_error);
    }
    SUBCASE("duplicate row") {
        auto bad = r.colorings;
        bad[1].row = bad[0].row;
        CHECK_THROWS_AS(minimum_chain_cover(g, bad), inconsistent_colorings_error);
    }
    SUBCASE("span does not start at the interval") {
        auto bad = r.colorings;
        bad[0].begin1 += 1;
        CHECK_THROWS_AS(minimum_chain_cover(g, bad), inconsistent_colorings_error);
    }
    SUBCASE("span stops early") {
        auto bad = r.colorings;
        if (bad[0].has_second)
            bad[0].end2 -= 1;
        else
            bad[0].end1 -= 1;
        CHECK_THROWS_AS(minimum_chain_cover(g, bad), inconsistent_colorings_error);
    }
    SUBCASE("nonpositive value") {
        auto bad = r.colorings;
        bad[0].value = 0;
        CHECK_THROWS_AS(minimum_chain_cover(g, bad), inconsistent_colorings_error);
    }
    SUBCASE("missing row") {
        auto bad = r.colorings;
        bad.pop_back();
        CHECK_THROWS_AS(minimum_chain_cover(g, bad), inconsistent_colorings_error);
    }
}

TEST_CASE("expanded chains are pairwise nested edge sets") {
    std::mt19937_64 rng(42);
    compact_graph g = test_util::random_graph(rng, 25, 20, 6);
    chain_cover cover = cover_of(g);
    auto chains = expand_cover_edges(g, cover);
    REQUIRE(static_cast<std::int32_t>(chains.size()) == cover.chain_count);

    // inside one chain, the matched column sets per row are totally ordered
    // by containment
    for (const auto& chain : chains) {
        std::map<u_index, std::set<v_index>> per_row;
        for (const edge& e : chain) per_row[e.u].insert(e.v);
        std::vector<std::set<v_index>> sets;
        for (auto& [u, s] : per_row) sets.push_back(s);
        for (std::size_t i = 0; i < sets.size(); ++i)
            for (std::size_t j = i + 1; j < sets.size(); ++j) {
                const auto& small = sets[i].size() <= sets[j].size() ? sets[i] : sets[j];
                const auto& large = sets[i].size() <= sets[j].size() ? sets[j] : sets[i];
                bool contained = true;
                for (v_index v : small)
                    if (!large.count(v)) contained = false;
                CHECK(contained);
            }
    }
}
