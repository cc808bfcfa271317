#pragma once

#include "graph.hpp"

namespace cbm {

struct matching_result {
    weight_t total = 0;
    std::vector<edge> edges;  // ascending matched V-index
};

struct weighted_options {
    // Re-derive every incremental maximum from its direct definition (a scan
    // over finished rows) and throw std::logic_error on any mismatch. Keeps
    // dense value tables; only affordable on small instances.
    bool verify_incremental_maxima = false;

    // Whenever the optimum is the empty matching but the graph has edges
    // (every edge weight negative, or zero at best), return the single
    // heaviest edge instead.
    bool require_nonempty = false;
};

// For each V-index r, the smallest left endpoint among rows whose interval
// ends at r; r itself when no row ends there. Result is 1-based, size n_v+1.
std::vector<v_index> earliest_starts(const compact_graph& g);

// Maximum-weight induced matching in O(n + m) time and space. Weights may be
// negative; the empty matching (total 0) is always admissible. Overflow of
// weight sums is the caller's responsibility (asserted in debug builds).
matching_result max_weight_induced_matching(const weighted_graph& wg,
                                            const weighted_options& opts = {});

}  // namespace cbm
