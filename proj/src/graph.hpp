#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace cbm {

using u_index = std::int32_t;
using v_index = std::int32_t;
using weight_t = std::int64_t;

// Neighborhood of one U-vertex: a contiguous run [left, right] of V-indices,
// both 1-based. left == 0 marks a row without edges.
struct row_interval {
    v_index left = 0;
    v_index right = 0;

    bool empty() const { return left == 0; }
    std::int64_t length() const { return empty() ? 0 : std::int64_t(right) - left + 1; }
    bool contains(v_index v) const { return !empty() && left <= v && v <= right; }
};

struct edge {
    u_index u = 0;
    v_index v = 0;

    friend bool operator==(const edge&, const edge&) = default;
};

// Adjacency lists exist but their union is not an interval per row.
class not_convex_error : public std::invalid_argument {
public:
    not_convex_error(u_index u, v_index gap_position)
        : std::invalid_argument("row " + std::to_string(u) + " has a gap at " +
                                std::to_string(gap_position)),
          u(u),
          gap_position(gap_position) {}

    u_index u;
    v_index gap_position;
};

// Bipartite graph over U = {1..n_u}, V = {1..n_v} where every U-vertex's
// neighborhood is an interval of V. Stored as one interval per row, so the
// representation is O(n) regardless of the edge count.
class compact_graph {
public:
    compact_graph() = default;

    // Throws std::invalid_argument if an interval violates
    // 1 <= left <= right <= n_v (rows with left == right == 0 are allowed).
    compact_graph(v_index n_v, std::vector<row_interval> rows);

    // Builds the compact form from 1-based adjacency lists. Lists must be
    // strictly increasing, and each must be contiguous; a gap raises
    // not_convex_error with the first missing V-index.
    static compact_graph from_adjacency(v_index n_v,
                                        const std::vector<std::vector<v_index>>& lists);

    u_index n_u() const { return static_cast<u_index>(rows_.size()); }
    v_index n_v() const { return n_v_; }
    std::int64_t edge_count() const { return edge_count_; }

    // 1-based row access.
    const row_interval& row(u_index u) const {
        assert(u >= 1 && u <= n_u());
        return rows_[static_cast<std::size_t>(u) - 1];
    }
    std::span<const row_interval> rows() const { return rows_; }

    bool contains(edge e) const {
        return e.u >= 1 && e.u <= n_u() && row(e.u).contains(e.v);
    }

private:
    v_index n_v_ = 0;
    std::int64_t edge_count_ = 0;
    std::vector<row_interval> rows_;
};

// Compact graph plus one integer weight per edge, stored row-contiguously.
class weighted_graph {
public:
    weighted_graph() = default;

    // weights holds the concatenated per-row weight runs in row order; its
    // length must equal graph.edge_count().
    weighted_graph(compact_graph graph, std::vector<weight_t> weights);

    const compact_graph& graph() const { return graph_; }

    weight_t weight(u_index u, v_index v) const {
        const row_interval& r = graph_.row(u);
        assert(r.contains(v));
        return weights_[offsets_[static_cast<std::size_t>(u) - 1] +
                        static_cast<std::size_t>(v - r.left)];
    }

    std::span<const weight_t> row_weights(u_index u) const {
        const row_interval& r = graph_.row(u);
        return {weights_.data() + offsets_[static_cast<std::size_t>(u) - 1],
                static_cast<std::size_t>(r.length())};
    }

    std::span<const weight_t> all_weights() const { return weights_; }

private:
    compact_graph graph_;
    std::vector<weight_t> weights_;
    std::vector<std::size_t> offsets_;
};

// Two edges can live in a common induced matching iff neither matched
// V-vertex lies inside the other row's interval. Both edges must be edges
// of g.
bool edges_independent(const compact_graph& g, edge e, edge f);

// Indices of the non-empty rows, stably sorted by left endpoint
// (counting sort; O(n)).
std::vector<u_index> rows_sorted_by_left(const compact_graph& g);

// Materialized adjacency lists (index 0 unused). Intended for small graphs
// and tests; costs O(n + m).
std::vector<std::vector<v_index>> adjacency_lists(const compact_graph& g);

// Every edge in row-major order. Costs O(m); intended for small graphs.
std::vector<edge> all_edges(const compact_graph& g);

}  // namespace cbm
