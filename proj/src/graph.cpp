#include "graph.hpp"

namespace cbm {

compact_graph::compact_graph(v_index n_v, std::vector<row_interval> rows)
    : n_v_(n_v), rows_(std::move(rows)) {
    if (n_v < 0) throw std::invalid_argument("negative n_v");
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        const row_interval& r = rows_[i];
        if (r.left == 0 && r.right == 0) continue;
        if (r.left < 1 || r.right < r.left || r.right > n_v_)
            throw std::invalid_argument("row " + std::to_string(i + 1) +
                                        ": bad interval [" + std::to_string(r.left) + ", " +
                                        std::to_string(r.right) + "] with n_v " +
                                        std::to_string(n_v_));
        edge_count_ += r.length();
    }
}

compact_graph compact_graph::from_adjacency(v_index n_v,
                                            const std::vector<std::vector<v_index>>& lists) {
    std::vector<row_interval> rows;
    rows.reserve(lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        const auto& list = lists[i];
        u_index u = static_cast<u_index>(i + 1);
        if (list.empty()) {
            rows.push_back({0, 0});
            continue;
        }
        if (list.front() < 1 || list.back() > n_v)
            throw std::invalid_argument("row " + std::to_string(u) +
                                        ": V-index out of range");
        for (std::size_t k = 1; k < list.size(); ++k) {
            if (list[k] <= list[k - 1])
                throw std::invalid_argument("row " + std::to_string(u) +
                                            ": adjacency list not strictly increasing");
            if (list[k] != list[k - 1] + 1) throw not_convex_error(u, list[k - 1] + 1);
        }
        rows.push_back({list.front(), list.back()});
    }
    return compact_graph(n_v, std::move(rows));
}

weighted_graph::weighted_graph(compact_graph graph, std::vector<weight_t> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (static_cast<std::int64_t>(weights_.size()) != graph_.edge_count())
        throw std::invalid_argument("weight count " + std::to_string(weights_.size()) +
                                    " does not match edge count " +
                                    std::to_string(graph_.edge_count()));
    offsets_.resize(static_cast<std::size_t>(graph_.n_u()) + 1, 0);
    std::size_t off = 0;
    for (u_index u = 1; u <= graph_.n_u(); ++u) {
        offsets_[static_cast<std::size_t>(u) - 1] = off;
        off += static_cast<std::size_t>(graph_.row(u).length());
    }
    offsets_[static_cast<std::size_t>(graph_.n_u())] = off;
}

bool edges_independent(const compact_graph& g, edge e, edge f) {
    assert(g.contains(e) && g.contains(f));
    return !g.row(e.u).contains(f.v) && !g.row(f.u).contains(e.v);
}

std::vector<u_index> rows_sorted_by_left(const compact_graph& g) {
    std::vector<std::int32_t> count(static_cast<std::size_t>(g.n_v()) + 2, 0);
    std::int32_t nonempty = 0;
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        if (r.empty()) continue;
        ++count[static_cast<std::size_t>(r.left)];
        ++nonempty;
    }
    std::int32_t running = 0;
    for (std::size_t l = 1; l < count.size(); ++l) {
        std::int32_t c = count[l];
        count[l] = running;
        running += c;
    }
    std::vector<u_index> order(static_cast<std::size_t>(nonempty));
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        if (r.empty()) continue;
        order[static_cast<std::size_t>(count[static_cast<std::size_t>(r.left)]++)] = u;
    }
    return order;
}

std::vector<std::vector<v_index>> adjacency_lists(const compact_graph& g) {
    std::vector<std::vector<v_index>> lists(static_cast<std::size_t>(g.n_u()) + 1);
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        if (r.empty()) continue;
        auto& list = lists[static_cast<std::size_t>(u)];
        list.reserve(static_cast<std::size_t>(r.length()));
        for (v_index v = r.left; v <= r.right; ++v) list.push_back(v);
    }
    return lists;
}

std::vector<edge> all_edges(const compact_graph& g) {
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(g.edge_count()));
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        if (r.empty()) continue;
        for (v_index v = r.left; v <= r.right; ++v) edges.push_back({u, v});
    }
    return edges;
}

}  // namespace cbm
