#include "chain_cover.hpp"

#include <algorithm>

namespace cbm {

namespace {

struct span_triple {
    std::int32_t value;
    v_index begin;
    v_index end;
    u_index row;
};

void check_colorings(const compact_graph& g, std::span<const row_coloring> colorings) {
    std::vector<bool> seen(static_cast<std::size_t>(g.n_u()) + 1, false);
    for (const row_coloring& c : colorings) {
        if (c.row < 1 || c.row > g.n_u())
            throw inconsistent_colorings_error("coloring references row " + std::to_string(c.row));
        if (seen[static_cast<std::size_t>(c.row)])
            throw inconsistent_colorings_error("row " + std::to_string(c.row) +
                                               " colored twice");
        seen[static_cast<std::size_t>(c.row)] = true;
        const row_interval& r = g.row(c.row);
        const v_index last = c.has_second ? c.end2 : c.end1;
        const bool spans_ok = !r.empty() && c.value >= 1 && c.begin1 == r.left &&
                              c.begin1 <= c.end1 && last == r.right &&
                              (!c.has_second || (c.begin2 == c.end1 + 1 && c.begin2 <= c.end2));
        if (!spans_ok)
            throw inconsistent_colorings_error("row " + std::to_string(c.row) +
                                               ": spans do not tile the row interval");
    }
    std::int64_t needed = 0;
    for (const row_interval& r : g.rows())
        if (!r.empty()) ++needed;
    if (static_cast<std::int64_t>(colorings.size()) != needed)
        throw inconsistent_colorings_error(
            "got " + std::to_string(colorings.size()) + " colorings for " +
            std::to_string(needed) + " non-empty rows");
}

}  // namespace

chain_cover minimum_chain_cover(const compact_graph& g, std::span<const row_coloring> colorings,
                                const cover_options& opts) {
    check_colorings(g, colorings);

    std::int32_t chains = 0;
    for (const row_coloring& c : colorings) chains = std::max(chains, c.top_value());

    // One triple per value span. Stable counting sorts by row, then by end
    // column, give end-sorted buckets with row-index order inside each.
    std::vector<span_triple> triples;
    triples.reserve(2 * colorings.size());
    for (const row_coloring& c : colorings) {
        triples.push_back({c.value, c.begin1, c.end1, c.row});
        if (c.has_second) triples.push_back({c.value + 1, c.begin2, c.end2, c.row});
    }
    auto sort_by = [&](std::int64_t bound, auto key) {
        std::vector<std::int32_t> count(static_cast<std::size_t>(bound) + 1, 0);
        for (const span_triple& t : triples) ++count[static_cast<std::size_t>(key(t))];
        std::int32_t running = 0;
        for (auto& c : count) {
            std::int32_t v = c;
            c = running;
            running += v;
        }
        std::vector<span_triple> sorted(triples.size());
        for (const span_triple& t : triples)
            sorted[static_cast<std::size_t>(count[static_cast<std::size_t>(key(t))]++)] = t;
        triples.swap(sorted);
    };
    sort_by(g.n_u(), [](const span_triple& t) { return t.row; });
    sort_by(g.n_v(), [](const span_triple& t) { return t.end; });

    // greedy_start[w]: smallest raw span start among the chain-w spans that
    // end strictly to the left. Spans sharing an end position all read the
    // state from before any of them folds in, so the two passes per position
    // stay separate.
    std::vector<v_index> greedy_start(static_cast<std::size_t>(chains) + 2, g.n_v() + 1);
    chain_cover cover;
    cover.chain_count = chains;
    cover.entries.reserve(triples.size());
    std::size_t at = 0;
    for (v_index r = 1; r <= g.n_v(); ++r) {
        const std::size_t first = at;
        while (at < triples.size() && triples[at].end == r) {
            const span_triple& t = triples[at];
            cover.entries.push_back(
                {t.value, t.row,
                 std::min(t.begin, greedy_start[static_cast<std::size_t>(t.value)]), t.end});
            ++at;
        }
        for (std::size_t k = first; k < at; ++k) {
            auto& gs = greedy_start[static_cast<std::size_t>(triples[k].value)];
            gs = std::min(gs, triples[k].begin);
        }
    }

    if (opts.verify_extension_rule) {
        // Both direct forms of the extension rule: minimum over raw starts of
        // earlier-ending same-chain spans, and over extended starts.
        std::vector<v_index> direct_raw(triples.size()), direct_ext(triples.size());
        for (std::size_t a = 0; a < triples.size(); ++a) {
            direct_raw[a] = triples[a].begin;
            direct_ext[a] = triples[a].begin;
            for (std::size_t b = 0; b < a; ++b) {
                if (triples[b].value != triples[a].value || triples[b].end >= triples[a].end)
                    continue;
                direct_raw[a] = std::min(direct_raw[a], triples[b].begin);
                direct_ext[a] = std::min(direct_ext[a], direct_ext[b]);
            }
            if (direct_raw[a] != direct_ext[a] || direct_raw[a] != cover.entries[a].begin)
                throw std::logic_error("extension rule check failed");
        }
    }

    // Regroup by chain; entries inside a chain stay in end order.
    std::vector<std::int32_t> count(static_cast<std::size_t>(chains) + 2, 0);
    for (const cover_entry& e : cover.entries) ++count[static_cast<std::size_t>(e.chain)];
    std::int32_t running = 0;
    for (auto& c : count) {
        std::int32_t v = c;
        c = running;
        running += v;
    }
    std::vector<cover_entry> grouped(cover.entries.size());
    for (const cover_entry& e : cover.entries)
        grouped[static_cast<std::size_t>(count[static_cast<std::size_t>(e.chain)]++)] = e;
    cover.entries.swap(grouped);
    return cover;
}

std::vector<std::vector<edge>> expand_cover_edges([[maybe_unused]] const compact_graph& g,
                                                  const chain_cover& cover) {
    std::vector<std::vector<edge>> chains(static_cast<std::size_t>(cover.chain_count));
    for (const cover_entry& e : cover.entries) {
        assert(e.chain >= 1 && e.chain <= cover.chain_count);
        assert(g.contains({e.row, e.begin}) && g.contains({e.row, e.end}));
        auto& chain = chains[static_cast<std::size_t>(e.chain) - 1];
        for (v_index v = e.begin; v <= e.end; ++v) chain.push_back({e.row, v});
    }
    return chains;
}

}  // namespace cbm
