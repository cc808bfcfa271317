#include "certify.hpp"

#include <algorithm>

namespace cbm {

namespace {

std::string kv(std::string_view key, std::int64_t value) {
    std::string out(" ");
    out += key;
    out += '=';
    out += std::to_string(value);
    return out;
}

// Stable counting sort of `idx` by key(i) in [0, bound].
template <typename KeyFn>
void counting_sort(std::vector<std::int32_t>& idx, std::int64_t bound, KeyFn key) {
    std::vector<std::int32_t> count(static_cast<std::size_t>(bound) + 2, 0);
    for (std::int32_t i : idx) ++count[static_cast<std::size_t>(key(i))];
    std::int32_t running = 0;
    for (auto& c : count) {
        std::int32_t v = c;
        c = running;
        running += v;
    }
    std::vector<std::int32_t> sorted(idx.size());
    for (std::int32_t i : idx)
        sorted[static_cast<std::size_t>(count[static_cast<std::size_t>(key(i))]++)] = i;
    idx.swap(sorted);
}

}  // namespace

verdict check_induced_matching(const compact_graph& g, std::span<const edge> matching) {
    for (std::size_t k = 0; k < matching.size(); ++k) {
        const edge& e = matching[k];
        if (e.u < 1 || e.u > g.n_u() || e.v < 1 || !g.row(e.u).contains(e.v))
            return verdict::fail(fault::edge_not_in_graph,
                                 "EdgeNotInGraph" + kv("edge", static_cast<std::int64_t>(k) + 1) +
                                     kv("u", e.u) + kv("v", e.v));
    }

    std::vector<std::int32_t> seen_at(static_cast<std::size_t>(g.n_v()) + 1, 0);
    for (std::size_t k = 0; k < matching.size(); ++k) {
        auto& slot = seen_at[static_cast<std::size_t>(matching[k].v)];
        if (slot != 0)
            return verdict::fail(fault::duplicate_endpoint,
                                 "DuplicateEndpoint" + kv("v", matching[k].v) +
                                     kv("first", slot) +
                                     kv("second", static_cast<std::int64_t>(k) + 1));
        slot = static_cast<std::int32_t>(k) + 1;
    }

    // Matched V-indices are now distinct; sort by them and test neighbors.
    // Independence of consecutive pairs extends to all pairs, and the
    // converse direction makes the test complete.
    std::vector<std::int32_t> idx(matching.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<std::int32_t>(k);
    counting_sort(idx, g.n_v(), [&](std::int32_t i) { return matching[static_cast<std::size_t>(i)].v; });
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const edge& a = matching[static_cast<std::size_t>(idx[k - 1])];
        const edge& b = matching[static_cast<std::size_t>(idx[k])];
        if (!edges_independent(g, a, b))
            return verdict::fail(fault::dependent_pair,
                                 "DependentPair" + kv("first", idx[k - 1] + 1) +
                                     kv("second", idx[k] + 1));
    }
    return verdict::ok();
}

verdict check_chain_cover(const compact_graph& g, const chain_cover& cover) {
    // Chain indices key bucket sorts below, so their range must stay linear
    // in the graph size. A minimum cover never needs more than min(n_u, n_v)
    // chains; anything past n_u + n_v + 1 is degenerate.
    if (cover.chain_count < 0 ||
        cover.chain_count > static_cast<std::int64_t>(g.n_u()) + g.n_v() + 1)
        return verdict::fail(fault::malformed, "Malformed" + kv("chain_count", cover.chain_count));

    const auto& entries = cover.entries;
    for (std::size_t k = 0; k < entries.size(); ++k) {
        const cover_entry& e = entries[k];
        if (e.chain < 1 || e.chain > cover.chain_count || e.row < 1 || e.row > g.n_u() ||
            e.begin > e.end)
            return verdict::fail(fault::malformed,
                                 "Malformed" + kv("entry", static_cast<std::int64_t>(k) + 1));
        const row_interval& r = g.row(e.row);
        if (r.empty() || e.begin < r.left || e.end > r.right)
            return verdict::fail(fault::outside_graph,
                                 "OutsideGraph" + kv("row", e.row) +
                                     kv("entry", static_cast<std::int64_t>(k) + 1));
    }

    std::vector<std::int32_t> idx(entries.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = static_cast<std::int32_t>(k);

    // Nesting per chain: order by (chain, begin asc, end desc); nested means
    // ends run weakly downward within a chain.
    counting_sort(idx, g.n_v(), [&](std::int32_t i) {
        return g.n_v() - entries[static_cast<std::size_t>(i)].end;
    });
    counting_sort(idx, g.n_v(), [&](std::int32_t i) {
        return entries[static_cast<std::size_t>(i)].begin;
    });
    counting_sort(idx, cover.chain_count, [&](std::int32_t i) {
        return entries[static_cast<std::size_t>(i)].chain;
    });
    for (std::size_t k = 1; k < idx.size(); ++k) {
        const cover_entry& a = entries[static_cast<std::size_t>(idx[k - 1])];
        const cover_entry& b = entries[static_cast<std::size_t>(idx[k])];
        if (a.chain == b.chain && a.end < b.end)
            return verdict::fail(fault::not_nested,
                                 "NotNested" + kv("chain", a.chain) + kv("first", idx[k - 1] + 1) +
                                     kv("second", idx[k] + 1));
    }

    // Coverage per row: order by (row, begin) and grow the covered prefix;
    // entries stay inside the row interval, so exact tiling means no gap and
    // a full reach to the right endpoint.
    counting_sort(idx, g.n_v(), [&](std::int32_t i) {
        return entries[static_cast<std::size_t>(i)].begin;
    });
    counting_sort(idx, g.n_u(), [&](std::int32_t i) {
        return entries[static_cast<std::size_t>(i)].row;
    });
    std::vector<bool> covered(static_cast<std::size_t>(g.n_u()) + 1, false);
    std::size_t k = 0;
    while (k < idx.size()) {
        const u_index row = entries[static_cast<std::size_t>(idx[k])].row;
        const row_interval& r = g.row(row);
        v_index reach = r.left - 1;
        for (; k < idx.size() && entries[static_cast<std::size_t>(idx[k])].row == row; ++k) {
            const cover_entry& e = entries[static_cast<std::size_t>(idx[k])];
            if (e.begin > reach + 1)
                return verdict::fail(fault::coverage_gap,
                                     "CoverageGap" + kv("row", row) + kv("position", reach + 1));
            reach = std::max(reach, e.end);
        }
        if (reach < r.right)
            return verdict::fail(fault::coverage_gap,
                                 "CoverageGap" + kv("row", row) + kv("position", reach + 1));
        covered[static_cast<std::size_t>(row)] = true;
    }
    for (u_index u = 1; u <= g.n_u(); ++u)
        if (!g.row(u).empty() && !covered[static_cast<std::size_t>(u)])
            return verdict::fail(fault::coverage_gap,
                                 "CoverageGap" + kv("row", u) + kv("position", g.row(u).left));
    return verdict::ok();
}

verdict check_certificate(const compact_graph& g, std::span<const edge> matching,
                          const chain_cover& cover) {
    verdict m = check_induced_matching(g, matching);
    if (!m.valid) return m;
    verdict c = check_chain_cover(g, cover);
    if (!c.valid) return c;
    if (static_cast<std::int64_t>(matching.size()) != cover.chain_count)
        return verdict::fail(fault::size_mismatch,
                             "SizeMismatch" + kv("matching", static_cast<std::int64_t>(matching.size())) +
                                 kv("chains", cover.chain_count));
    return verdict::ok();
}

}  // namespace cbm
