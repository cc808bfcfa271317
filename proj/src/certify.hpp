#pragma once

#include <span>

#include "chain_cover.hpp"
#include "graph.hpp"

namespace cbm {

enum class fault {
    none,
    edge_not_in_graph,
    duplicate_endpoint,
    dependent_pair,
    not_nested,
    coverage_gap,
    outside_graph,
    size_mismatch,
    malformed,
};

// Outcome of a certificate check. `reason` is machine-readable:
// "Category key=value ...".
struct verdict {
    bool valid = true;
    fault category = fault::none;
    std::string reason;

    static verdict ok() { return {}; }
    static verdict fail(fault f, std::string reason) {
        return {false, f, std::move(reason)};
    }
};

// All three checks treat their non-graph inputs as untrusted: every index is
// range-checked before use, and malformed data yields a verdict, never a
// crash. Each runs in O(n + input size) using counting sorts only, and shares
// nothing with the solvers beyond the graph types.

// Valid iff every edge is an edge of g, matched V-indices are pairwise
// distinct, and after sorting by V-index every consecutive pair is
// independent (independence of consecutive pairs lifts to all pairs).
verdict check_induced_matching(const compact_graph& g, std::span<const edge> matching);

// Valid iff every entry lies inside its row's interval, each chain's
// intervals are pairwise nested, and per row the entries cover the row's
// whole interval. Overlapping entries are fine, gaps are not.
verdict check_chain_cover(const compact_graph& g, const chain_cover& cover);

// Valid iff both inputs are valid and the matching size equals the chain
// count; equal sizes prove both optimal.
verdict check_certificate(const compact_graph& g, std::span<const edge> matching,
                          const chain_cover& cover);

}  // namespace cbm
