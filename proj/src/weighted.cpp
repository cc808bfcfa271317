#include "weighted.hpp"

#include <algorithm>
#include <memory>

namespace cbm {

std::vector<v_index> earliest_starts(const compact_graph& g) {
    std::vector<v_index> start(static_cast<std::size_t>(g.n_v()) + 1);
    for (v_index r = 0; r <= g.n_v(); ++r) start[static_cast<std::size_t>(r)] = r;
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        if (r.empty()) continue;
        auto& s = start[static_cast<std::size_t>(r.right)];
        s = std::min(s, r.left);
    }
    return start;
}

namespace {

// Witness for one computed edge value: the edge plus the witness of the
// incoming maximum its value was formed from (-1 when that maximum was 0).
// Walking pred links from the optimum yields one optimal matching.
struct witness_rec {
    u_index u;
    v_index v;
    std::int32_t pred;
};

// Dense re-evaluation of the incremental maxima, enabled by
// verify_incremental_maxima. Holds full value tables; small instances only.
struct maxima_checker {
    const weighted_graph& wg;
    std::vector<std::vector<weight_t>> dense;
    std::vector<std::vector<u_index>> rows_ending_at;
    weight_t direct = 0;  // direct incoming maximum for the current row scan

    explicit maxima_checker(const weighted_graph& g)
        : wg(g), dense(static_cast<std::size_t>(g.graph().n_u())),
          rows_ending_at(static_cast<std::size_t>(g.graph().n_v()) + 1) {
        for (u_index u = 1; u <= g.graph().n_u(); ++u) {
            const row_interval& r = g.graph().row(u);
            if (r.empty()) continue;
            dense[static_cast<std::size_t>(u) - 1].resize(static_cast<std::size_t>(r.length()));
            rows_ending_at[static_cast<std::size_t>(r.right)].push_back(u);
        }
    }

    static void mismatch(const char* what) {
        throw std::logic_error(std::string("incremental maximum check failed: ") + what);
    }

    // Maximum finished-row value visible to a row starting at l.
    void begin_row(weight_t incremental, v_index l) {
        direct = 0;
        for (v_index r = 1; r < l; ++r)
            for (u_index p : rows_ending_at[static_cast<std::size_t>(r)])
                for (weight_t w : dense[static_cast<std::size_t>(p) - 1])
                    direct = std::max(direct, w);
        if (direct != incremental) mismatch("start-of-row maximum");
    }

    // One incremental step: entries of rows ending at j-1, left of l.
    void step(weight_t incremental, v_index l, v_index j) {
        for (u_index p : rows_ending_at[static_cast<std::size_t>(j) - 1]) {
            const row_interval& rp = wg.graph().row(p);
            const auto& vals = dense[static_cast<std::size_t>(p) - 1];
            for (v_index q = rp.left; q <= rp.right && q < l; ++q)
                direct = std::max(direct, vals[static_cast<std::size_t>(q - rp.left)]);
        }
        if (direct != incremental) mismatch("mid-row maximum");
    }

    void record(u_index i, v_index j, weight_t value) {
        const row_interval& r = wg.graph().row(i);
        dense[static_cast<std::size_t>(i) - 1][static_cast<std::size_t>(j - r.left)] = value;
    }
};

}  // namespace

matching_result max_weight_induced_matching(const weighted_graph& wg,
                                            const weighted_options& opts) {
    const compact_graph& g = wg.graph();
    const v_index nv = g.n_v();

    // Per column r, one bucket of prefix maxima over the values of processed
    // rows ending at r, indexed by column start[r]..r. Rows ending at r never
    // start left of start[r], and a row's lookups use only buckets strictly
    // left of its own end, so bucket sizes total at most m + n_v.
    std::vector<v_index> start = earliest_starts(g);
    std::vector<std::size_t> offset(static_cast<std::size_t>(nv) + 2);
    std::size_t total = 0;
    for (v_index r = 1; r <= nv; ++r) {
        offset[static_cast<std::size_t>(r)] = total;
        total += static_cast<std::size_t>(r - start[static_cast<std::size_t>(r)] + 1);
    }
    offset[static_cast<std::size_t>(nv) + 1] = total;
    std::vector<weight_t> best(total, 0);
    std::vector<std::int32_t> best_wit(total, -1);
    auto cell = [&](v_index r, v_index j) {
        return offset[static_cast<std::size_t>(r)] +
               static_cast<std::size_t>(j - start[static_cast<std::size_t>(r)]);
    };

    std::vector<witness_rec> arena;
    weight_t finished = 0;  // best value among rows ending left of the cursor
    std::int32_t finished_wit = -1;

    std::unique_ptr<maxima_checker> check;
    if (opts.verify_incremental_maxima) check = std::make_unique<maxima_checker>(wg);

    std::vector<u_index> order = rows_sorted_by_left(g);
    std::size_t next = 0;
    for (v_index l = 1; l <= nv; ++l) {
        while (next < order.size() && g.row(order[next]).left == l) {
            const u_index i = order[next++];
            const row_interval& row = g.row(i);
            const std::span<const weight_t> weights = wg.row_weights(i);

            weight_t incoming = finished;
            std::int32_t incoming_wit = finished_wit;
            weight_t prefix = 0;  // running maximum of this row's values
            std::int32_t prefix_wit = -1;

            if (check) check->begin_row(incoming, l);

            for (v_index j = l; j <= row.right; ++j) {
                if (j > l && start[static_cast<std::size_t>(j) - 1] <= l - 1) {
                    const std::size_t c = cell(j - 1, l - 1);
                    if (best[c] > incoming) {
                        incoming = best[c];
                        incoming_wit = best_wit[c];
                    }
                }
                if (check && j > l) check->step(incoming, l, j);

                const weight_t value = weights[static_cast<std::size_t>(j - row.left)] + incoming;
#ifndef NDEBUG
                {
                    weight_t sum_check;
                    assert(!__builtin_add_overflow(weights[static_cast<std::size_t>(j - row.left)],
                                                   incoming, &sum_check));
                }
#endif
                if (check) check->record(i, j, value);
                if (value > prefix) {
                    prefix = value;
                    arena.push_back({i, j, incoming_wit});
                    prefix_wit = static_cast<std::int32_t>(arena.size()) - 1;
                }
                const std::size_t c = cell(row.right, j);
                if (prefix > best[c]) {
                    best[c] = prefix;
                    best_wit[c] = prefix_wit;
                }
            }

            if (check) {
                // Bucket prefix maxima stay nondecreasing along the bucket.
                for (v_index j = start[static_cast<std::size_t>(row.right)]; j < row.right; ++j)
                    if (best[cell(row.right, j)] > best[cell(row.right, j + 1)])
                        maxima_checker::mismatch("bucket monotonicity");
            }
        }
        const std::size_t c = cell(l, l);
        if (best[c] > finished) {
            finished = best[c];
            finished_wit = best_wit[c];
        }
    }

    matching_result result;
    result.total = finished;
    for (std::int32_t idx = finished_wit; idx >= 0; idx = arena[static_cast<std::size_t>(idx)].pred)
        result.edges.push_back({arena[static_cast<std::size_t>(idx)].u,
                                arena[static_cast<std::size_t>(idx)].v});
    std::reverse(result.edges.begin(), result.edges.end());

    weight_t sum = 0;
    for (const edge& e : result.edges) sum += wg.weight(e.u, e.v);
    if (sum != result.total)
        throw std::logic_error("witness chain does not add up to the optimum");

    if (opts.require_nonempty && result.edges.empty() && g.edge_count() > 0) {
        // Optimum is the empty matching; hand back the heaviest single edge.
        edge pick = {0, 0};
        weight_t best_single = 0;
        for (u_index u = 1; u <= g.n_u(); ++u) {
            const row_interval& r = g.row(u);
            if (r.empty()) continue;
            const std::span<const weight_t> weights = wg.row_weights(u);
            for (v_index v = r.left; v <= r.right; ++v) {
                const weight_t w = weights[static_cast<std::size_t>(v - r.left)];
                if (pick.u == 0 || w > best_single) {
                    best_single = w;
                    pick = {u, v};
                }
            }
        }
        result.total = best_single;
        result.edges = {pick};
    }
    return result;
}

}  // namespace cbm
