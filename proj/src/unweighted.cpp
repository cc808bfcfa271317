#include "unweighted.hpp"

#include <algorithm>

namespace cbm {

namespace {

v_index value_begin(const row_coloring& c, std::int32_t w) {
    if (w == c.value) return c.begin1;
    if (c.has_second && w == c.value + 1) return c.begin2;
    return 0;
}

}  // namespace

sweep_state run_matching_sweep(const compact_graph& g, const sweep_options& opts) {
    const v_index nv = g.n_v();
    // Values are matching sizes, so value-indexed arrays need only
    // min(n_u, n_v) + 2 slots.
    const std::size_t cap = static_cast<std::size_t>(std::min(g.n_u(), nv)) + 2;

    // thresholds[w]: smallest right endpoint among processed rows that carry
    // value w strictly left of the cursor; n_v + 1 when there is none.
    // threshold_edge[w] remembers which entry set it.
    std::vector<v_index> thresholds(cap, nv + 1);
    std::vector<edge> threshold_edge(cap, {0, 0});

    // best_at[r]: largest last-column value among processed rows ending at r,
    // with the row that attained it.
    struct column_best {
        std::int32_t value;
        u_index row;
    };
    std::vector<column_best> best_at(static_cast<std::size_t>(nv) + 2, {0, 0});

    std::int32_t finished = 0;  // best over columns left of the cursor
    u_index finished_row = 0;

    // Threshold updates are deferred to the column where the updating value
    // first appears; one pending update per row, kept in per-column lists.
    struct pending_item {
        std::int32_t next;
        std::int32_t value;
        v_index end;
        u_index row;
    };
    std::vector<std::int32_t> pending_head(static_cast<std::size_t>(nv) + 2, -1);
    std::vector<pending_item> pending;
    auto push_pending = [&](v_index column, std::int32_t value, v_index end, u_index row) {
        pending.push_back({pending_head[static_cast<std::size_t>(column)], value, end, row});
        pending_head[static_cast<std::size_t>(column)] =
            static_cast<std::int32_t>(pending.size()) - 1;
    };

    sweep_state state;
    state.position_of_row.assign(static_cast<std::size_t>(g.n_u()) + 1, 0);
    state.value_witness.assign(cap, {0, 0});

    // Left-sorted copy of the non-empty rows so the hot loop reads intervals
    // sequentially (counting sort, one scattered write per row).
    struct ordered_row {
        v_index left;
        v_index right;
        u_index row;
    };
    std::vector<ordered_row> order;
    {
        std::vector<std::int32_t> starts(static_cast<std::size_t>(nv) + 2, 0);
        for (const row_interval& r : g.rows())
            if (!r.empty()) ++starts[static_cast<std::size_t>(r.left) + 1];
        for (std::size_t l = 1; l < starts.size(); ++l) starts[l] += starts[l - 1];
        order.resize(static_cast<std::size_t>(starts.back()));
        for (u_index u = 1; u <= g.n_u(); ++u) {
            const row_interval& r = g.row(u);
            if (!r.empty())
                order[static_cast<std::size_t>(starts[static_cast<std::size_t>(r.left)]++)] =
                    {r.left, r.right, u};
        }
    }
    pending.reserve(order.size());
    state.colorings.reserve(order.size());
    state.pred_finished.reserve(order.size());
    state.pred_threshold.reserve(order.size());

    std::size_t next = 0;
    for (v_index l = 1; l <= nv; ++l) {
        while (next < order.size() && order[next].left == l) {
            const u_index i = order[next].row;
            const row_interval row = {order[next].left, order[next].right};
            ++next;
            const std::int32_t w = finished + 1;
            const v_index t = thresholds[static_cast<std::size_t>(w)];

            if (opts.verify_thresholds) {
                v_index direct = nv + 1;
                for (const row_coloring& c : state.colorings) {
                    const v_index b = value_begin(c, w);
                    if (b != 0 && b < l) direct = std::min(direct, g.row(c.row).right);
                }
                if (direct != t) throw std::logic_error("threshold check failed");
            }

            row_coloring c;
            c.row = i;
            c.value = w;
            c.begin1 = l;
            if (t < row.right) {
                // Values step from w to w + 1 at column t + 1: some processed
                // row carries w left of here and ends at t, inside this row.
                c.end1 = t;
                c.begin2 = t + 1;
                c.end2 = row.right;
                c.has_second = true;
                state.pred_threshold.push_back(threshold_edge[static_cast<std::size_t>(w)]);
                push_pending(t + 1, w + 1, row.right, i);
            } else {
                c.end1 = row.right;
                state.pred_threshold.push_back({0, 0});
                push_pending(l, w, row.right, i);
            }
            state.pred_finished.push_back(finished_row);
            state.position_of_row[static_cast<std::size_t>(i)] =
                static_cast<std::int32_t>(state.colorings.size()) + 1;
            state.colorings.push_back(c);

            const std::int32_t top = c.top_value();
            auto& q = best_at[static_cast<std::size_t>(row.right)];
            if (top > q.value) {
                q = {top, i};
                state.value_witness[static_cast<std::size_t>(top)] = {i, row.right};
            }
        }

        if (best_at[static_cast<std::size_t>(l)].value > finished) {
            finished = best_at[static_cast<std::size_t>(l)].value;
            finished_row = best_at[static_cast<std::size_t>(l)].row;
        }
        for (std::int32_t p = pending_head[static_cast<std::size_t>(l)]; p >= 0;
             p = pending[static_cast<std::size_t>(p)].next) {
            const pending_item& item = pending[static_cast<std::size_t>(p)];
            auto& t = thresholds[static_cast<std::size_t>(item.value)];
            if (item.end < t) {
                t = item.end;
                threshold_edge[static_cast<std::size_t>(item.value)] = {item.row, l};
            }
        }
    }

    state.size = finished;
    if (finished > 0) state.best = {finished_row, g.row(finished_row).right};
    return state;
}

std::vector<edge> matching_from_witnesses(const compact_graph& g, const sweep_state& state) {
    std::vector<edge> out;
    if (state.size == 0) return out;
    out.reserve(static_cast<std::size_t>(state.size));

    edge cur = state.best;
    for (std::int32_t v = state.size;; --v) {
        if (!g.contains(cur)) throw reconstruction_error("witness edge outside the graph");
        out.push_back(cur);
        if (v == 1) break;

        const std::int32_t pos =
            cur.u >= 1 && cur.u <= g.n_u() ? state.position_of_row[static_cast<std::size_t>(cur.u)]
                                           : 0;
        if (pos <= 0) throw reconstruction_error("witness row was never processed");
        const row_coloring& c = state.colorings[static_cast<std::size_t>(pos) - 1];

        if (v == c.value) {
            const u_index prev = state.pred_finished[static_cast<std::size_t>(pos) - 1];
            if (prev == 0) throw reconstruction_error("missing finished-row witness");
            cur = {prev, g.row(prev).right};
        } else if (c.has_second && v == c.value + 1) {
            cur = state.pred_threshold[static_cast<std::size_t>(pos) - 1];
            if (cur.u == 0) throw reconstruction_error("missing threshold witness");
        } else {
            throw reconstruction_error("witness value does not match its row coloring");
        }
    }

    std::reverse(out.begin(), out.end());
    if (static_cast<std::int32_t>(out.size()) != state.size)
        throw reconstruction_error("witness chain length mismatch");
    return out;
}

unweighted_result max_cardinality_induced_matching(const compact_graph& g,
                                                   const sweep_options& opts) {
    sweep_state state = run_matching_sweep(g, opts);
    unweighted_result result;
    result.size = state.size;
    result.edges = matching_from_witnesses(g, state);
    result.colorings.reserve(state.colorings.size());
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const std::int32_t pos = state.position_of_row[static_cast<std::size_t>(u)];
        if (pos > 0) result.colorings.push_back(state.colorings[static_cast<std::size_t>(pos) - 1]);
    }
    return result;
}

}  // namespace cbm
