#pragma once

#include <span>

#include "graph.hpp"
#include "unweighted.hpp"

namespace cbm {

// One row's contribution to one chain: the edges (row, begin..end). `begin`
// is the row's span start, possibly extended leftward so the chain stays a
// chain graph (neighborhoods pairwise nested).
struct cover_entry {
    std::int32_t chain = 0;
    u_index row = 0;
    v_index begin = 0;
    v_index end = 0;
};

struct chain_cover {
    std::int32_t chain_count = 0;         // number of chains
    std::vector<cover_entry> entries;     // sorted by (chain, end); <= 2 per row
};

struct cover_options {
    // Cross-check every extended start against the two equivalent direct
    // definitions (min over earlier-ending peers of raw starts, and of
    // extended starts) and throw std::logic_error on mismatch. Quadratic.
    bool verify_extension_rule = false;
};

struct inconsistent_colorings_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Minimum chain cover from the sweep's row colorings in O(n) time. The
// number of chains equals the maximum induced matching size, which makes the
// pair a certificate of optimality for both. Throws
// inconsistent_colorings_error when the colorings do not describe g.
chain_cover minimum_chain_cover(const compact_graph& g,
                                std::span<const row_coloring> colorings,
                                const cover_options& opts = {});

// Explicit per-chain edge lists; O(n + output) and the output is at most 2m
// edges. Intended for tests and small instances.
std::vector<std::vector<edge>> expand_cover_edges(const compact_graph& g,
                                                  const chain_cover& cover);

}  // namespace cbm
