#include "oracle.hpp"

#include <algorithm>
#include <functional>

namespace cbm {

namespace {

// Depth-first enumeration of all pairwise-independent subsets of `edges`,
// extending a set only by edges independent of every chosen one.
template <typename WeightFn>
weight_t enumerate_independent_subsets(const compact_graph& g, const std::vector<edge>& edges,
                                       WeightFn&& weight_of) {
    weight_t best = 0;
    std::vector<edge> chosen;
    std::function<void(std::size_t, weight_t)> walk = [&](std::size_t idx, weight_t sum) {
        best = std::max(best, sum);
        for (std::size_t k = idx; k < edges.size(); ++k) {
            bool ok = true;
            for (const edge& c : chosen) {
                if (!edges_independent(g, c, edges[k])) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            chosen.push_back(edges[k]);
            walk(k + 1, sum + weight_of(edges[k]));
            chosen.pop_back();
        }
    };
    walk(0, 0);
    return best;
}

}  // namespace

weight_t brute_force_weighted(const weighted_graph& wg) {
    const compact_graph& g = wg.graph();
    if (g.edge_count() > 24)
        throw too_large_error("brute force limited to 24 edges, got " +
                              std::to_string(g.edge_count()));
    std::vector<edge> edges = all_edges(g);
    return enumerate_independent_subsets(g, edges,
                                         [&](edge e) { return wg.weight(e.u, e.v); });
}

std::int32_t brute_force_max_cardinality(const compact_graph& g) {
    if (g.edge_count() > 64)
        throw too_large_error("cardinality brute force limited to 64 edges, got " +
                              std::to_string(g.edge_count()));
    std::vector<edge> edges = all_edges(g);
    return static_cast<std::int32_t>(
        enumerate_independent_subsets(g, edges, [](edge) { return weight_t{1}; }));
}

weight_t dense_dp_table::max_value() const {
    weight_t best = 0;
    for (const auto& row : rows)
        for (weight_t w : row) best = std::max(best, w);
    return best;
}

dense_dp_table naive_dp(const weighted_graph& wg) {
    const compact_graph& g = wg.graph();
    dense_dp_table table;
    table.rows.resize(static_cast<std::size_t>(g.n_u()));
    for (u_index u = 1; u <= g.n_u(); ++u)
        table.rows[static_cast<std::size_t>(u) - 1].resize(
            static_cast<std::size_t>(g.row(u).length()), 0);

    // Column by column; a cell's candidates all lie in rows that end strictly
    // to its left, so they are complete when the cell is reached.
    for (v_index j = 1; j <= g.n_v(); ++j) {
        for (u_index i = 1; i <= g.n_u(); ++i) {
            const row_interval& ri = g.row(i);
            if (!ri.contains(j)) continue;
            weight_t incoming = 0;
            for (u_index p = 1; p <= g.n_u(); ++p) {
                const row_interval& rp = g.row(p);
                if (rp.empty() || rp.right >= j) continue;
                const auto& prow = table.rows[static_cast<std::size_t>(p) - 1];
                for (v_index q = rp.left; q <= rp.right; ++q) {
                    if (q >= ri.left) break;
                    incoming = std::max(incoming, prow[static_cast<std::size_t>(q - rp.left)]);
                }
            }
            table.rows[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j - ri.left)] =
                wg.weight(i, j) + incoming;
        }
    }
    return table;
}

dense_dp_table naive_dp_unit(const compact_graph& g) {
    std::vector<weight_t> unit(static_cast<std::size_t>(g.edge_count()), 1);
    return naive_dp(weighted_graph(g, std::move(unit)));
}

dense_dp_table dense_from_colorings(const compact_graph& g,
                                    std::span<const row_coloring> colorings) {
    dense_dp_table table;
    table.rows.resize(static_cast<std::size_t>(g.n_u()));
    for (u_index u = 1; u <= g.n_u(); ++u)
        table.rows[static_cast<std::size_t>(u) - 1].resize(
            static_cast<std::size_t>(g.row(u).length()), 0);
    for (const row_coloring& c : colorings) {
        const row_interval& r = g.row(c.row);
        auto& row = table.rows[static_cast<std::size_t>(c.row) - 1];
        for (v_index v = c.begin1; v <= c.end1; ++v)
            row[static_cast<std::size_t>(v - r.left)] = c.value;
        if (c.has_second)
            for (v_index v = c.begin2; v <= c.end2; ++v)
                row[static_cast<std::size_t>(v - r.left)] = c.value + 1;
    }
    return table;
}

graph_enumerator::graph_enumerator(u_index n_u, v_index n_v)
    : n_v_(n_v), digits_(static_cast<std::size_t>(n_u), 0) {
    choices_.push_back({0, 0});
    for (v_index l = 1; l <= n_v; ++l)
        for (v_index r = l; r <= n_v; ++r) choices_.push_back({l, r});
}

std::optional<compact_graph> graph_enumerator::next() {
    if (done_) return std::nullopt;
    std::vector<row_interval> rows;
    rows.reserve(digits_.size());
    for (std::size_t d : digits_) rows.push_back(choices_[d]);
    compact_graph g(n_v_, std::move(rows));

    std::size_t i = 0;
    for (; i < digits_.size(); ++i) {
        if (++digits_[i] < choices_.size()) break;
        digits_[i] = 0;
    }
    if (i == digits_.size()) done_ = true;
    return g;
}

namespace {

std::int32_t value_at(const row_coloring& c, v_index v) {
    return (c.has_second && v >= c.begin2) ? c.value + 1 : c.value;
}

v_index value_begin(const row_coloring& c, std::int32_t w) {
    if (w == c.value) return c.begin1;
    if (c.has_second && w == c.value + 1) return c.begin2;
    return 0;
}

// Shared skeleton of the two reference sweeps: rows grouped by left endpoint,
// per-column best-so-far folding, colorings recorded as rows are processed.
template <typename ThresholdFn, typename AfterColumnFn>
std::int32_t reference_sweep(const compact_graph& g, ThresholdFn&& threshold_for,
                             AfterColumnFn&& after_column) {
    std::vector<u_index> order = rows_sorted_by_left(g);
    std::vector<std::int32_t> best_ending_at(static_cast<std::size_t>(g.n_v()) + 2, 0);
    std::vector<row_coloring> processed;
    processed.reserve(order.size());
    std::int32_t best = 0;
    std::size_t next_row = 0;
    for (v_index l = 1; l <= g.n_v(); ++l) {
        while (next_row < order.size() && g.row(order[next_row]).left == l) {
            u_index i = order[next_row++];
            const row_interval& r = g.row(i);
            std::int32_t w = best + 1;
            v_index t = threshold_for(processed, w, l);
            row_coloring c;
            c.row = i;
            c.value = w;
            if (t < r.right) {
                c.begin1 = l;
                c.end1 = t;
                c.begin2 = t + 1;
                c.end2 = r.right;
                c.has_second = true;
            } else {
                c.begin1 = l;
                c.end1 = r.right;
            }
            processed.push_back(c);
            auto& q = best_ending_at[static_cast<std::size_t>(r.right)];
            q = std::max(q, c.top_value());
        }
        best = std::max(best, best_ending_at[static_cast<std::size_t>(l)]);
        after_column(processed, l);
    }
    return best;
}

}  // namespace

std::int32_t matching_size_rescan_thresholds(const compact_graph& g) {
    auto threshold = [&](const std::vector<row_coloring>& processed, std::int32_t w,
                         v_index l) -> v_index {
        v_index t = g.n_v() + 1;
        for (const row_coloring& c : processed) {
            v_index b = value_begin(c, w);
            if (b != 0 && b < l) t = std::min(t, g.row(c.row).right);
        }
        return t;
    };
    return reference_sweep(g, threshold, [](const std::vector<row_coloring>&, v_index) {});
}

std::int32_t matching_size_column_scan(const compact_graph& g) {
    // rows_covering[j] lists the rows whose interval contains column j.
    std::vector<std::vector<u_index>> rows_covering(static_cast<std::size_t>(g.n_v()) + 1);
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        if (r.empty()) continue;
        for (v_index v = r.left; v <= r.right; ++v)
            rows_covering[static_cast<std::size_t>(v)].push_back(u);
    }
    std::vector<std::int32_t> position_of_row(static_cast<std::size_t>(g.n_u()) + 1, -1);
    std::vector<v_index> thresholds(static_cast<std::size_t>(std::min(g.n_u(), g.n_v())) + 2,
                                    g.n_v() + 1);
    std::size_t recorded = 0;

    auto threshold = [&](const std::vector<row_coloring>&, std::int32_t w,
                         v_index) -> v_index { return thresholds[static_cast<std::size_t>(w)]; };
    auto after_column = [&](const std::vector<row_coloring>& processed, v_index l) {
        for (; recorded < processed.size(); ++recorded)
            position_of_row[static_cast<std::size_t>(processed[recorded].row)] =
                static_cast<std::int32_t>(recorded);
        for (u_index i : rows_covering[static_cast<std::size_t>(l)]) {
            std::int32_t p = position_of_row[static_cast<std::size_t>(i)];
            if (p < 0) continue;  // row starts right of l, not processed yet
            const row_coloring& c = processed[static_cast<std::size_t>(p)];
            std::int32_t w = value_at(c, l);
            auto& t = thresholds[static_cast<std::size_t>(w)];
            t = std::min(t, g.row(i).right);
        }
    };
    return reference_sweep(g, threshold, after_column);
}

}  // namespace cbm
