#pragma once

#include <initializer_list>
#include <random>
#include <utility>
#include <vector>

#include "certify.hpp"
#include "chain_cover.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "unweighted.hpp"
#include "weighted.hpp"

namespace test_util {

inline cbm::compact_graph make_graph(cbm::v_index n_v,
                                     std::initializer_list<std::pair<int, int>> rows) {
    std::vector<cbm::row_interval> intervals;
    intervals.reserve(rows.size());
    for (auto [l, r] : rows) intervals.push_back({l, r});
    return cbm::compact_graph(n_v, std::move(intervals));
}

inline cbm::weighted_graph unit_weights(const cbm::compact_graph& g) {
    return cbm::weighted_graph(g, std::vector<cbm::weight_t>(static_cast<std::size_t>(g.edge_count()), 1));
}

inline cbm::weighted_graph random_weights(const cbm::compact_graph& g, std::mt19937_64& rng,
                                          cbm::weight_t lo, cbm::weight_t hi) {
    std::vector<cbm::weight_t> w(static_cast<std::size_t>(g.edge_count()));
    for (auto& x : w) x = lo + static_cast<cbm::weight_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    return cbm::weighted_graph(g, std::move(w));
}

inline cbm::weight_t total_of(const cbm::weighted_graph& wg, std::span<const cbm::edge> edges) {
    cbm::weight_t total = 0;
    for (const cbm::edge& e : edges) total += wg.weight(e.u, e.v);
    return total;
}

inline bool pairwise_independent(const cbm::compact_graph& g, std::span<const cbm::edge> edges) {
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = i + 1; j < edges.size(); ++j)
            if (!cbm::edges_independent(g, edges[i], edges[j])) return false;
    return true;
}

// 5x5 instance with a known optimum of 3 whose rows exercise nesting,
// sharing, and a spanning interval all at once.
inline cbm::compact_graph worked_example() {
    return make_graph(5, {{1, 2}, {2, 2}, {2, 5}, {3, 3}, {5, 5}});
}

// Small random instance; interval lengths are clipped so edge counts stay
// oracle-friendly.
inline cbm::compact_graph random_graph(std::mt19937_64& rng, cbm::u_index max_rows,
                                       cbm::v_index max_cols, cbm::v_index max_len,
                                       int empty_per_mille = 100) {
    const auto n_u = static_cast<cbm::u_index>(rng() % static_cast<std::uint64_t>(max_rows + 1));
    const auto n_v = static_cast<cbm::v_index>(1 + rng() % static_cast<std::uint64_t>(max_cols));
    std::vector<cbm::row_interval> rows(static_cast<std::size_t>(n_u));
    for (auto& r : rows) {
        if (static_cast<int>(rng() % 1000) < empty_per_mille) continue;
        const auto left = static_cast<cbm::v_index>(1 + rng() % static_cast<std::uint64_t>(n_v));
        const auto len = static_cast<cbm::v_index>(1 + rng() % static_cast<std::uint64_t>(max_len));
        r = {left, std::min<cbm::v_index>(n_v, left + len - 1)};
    }
    return cbm::compact_graph(n_v, std::move(rows));
}

}  // namespace test_util
