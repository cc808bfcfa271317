#pragma once

#include "graph.hpp"

namespace cbm {

// Value structure of one processed row. Cell values along a row are
// nondecreasing and take at most two distinct values, which are consecutive;
// the row therefore splits into one or two value spans covering [left, right].
struct row_coloring {
    u_index row = 0;
    std::int32_t value = 0;  // value of the first span; second span holds value + 1
    v_index begin1 = 0, end1 = 0;
    v_index begin2 = 0, end2 = 0;
    bool has_second = false;

    std::int32_t top_value() const { return has_second ? value + 1 : value; }
};

struct sweep_options {
    // Recompute each threshold from the colorings of already-processed rows
    // and throw std::logic_error on mismatch. Quadratic; small instances only.
    bool verify_thresholds = false;
};

// Everything the left-to-right sweep leaves behind: the optimum size, the row
// colorings, and the witness links needed to rebuild one optimal matching.
struct sweep_state {
    std::int32_t size = 0;
    edge best = {0, 0};  // attains `size` at its row's last column

    // Indexed by processing position (rows ordered by left endpoint).
    std::vector<row_coloring> colorings;
    std::vector<u_index> pred_finished;  // row of the finished-column witness, 0 if none
    std::vector<edge> pred_threshold;    // witness for the second value span, {0,0} if none

    // row -> processing position + 1; 0 for empty rows.
    std::vector<std::int32_t> position_of_row;

    // Per value v: some edge (row, last column) whose value is v.
    std::vector<edge> value_witness;
};

// Maximum-cardinality sweep over the compact representation. O(n_u + n_v)
// time and space; never touches individual edges.
sweep_state run_matching_sweep(const compact_graph& g, const sweep_options& opts = {});

// Walks the witness links backward from the optimum. Throws
// reconstruction_error on inconsistent state (an internal bug, never
// expected). Returns `size` edges with ascending matched V-index.
std::vector<edge> matching_from_witnesses(const compact_graph& g, const sweep_state& state);

struct reconstruction_error : std::logic_error {
    using std::logic_error::logic_error;
};

struct unweighted_result {
    std::int32_t size = 0;
    std::vector<edge> edges;                // ascending matched V-index
    std::vector<row_coloring> colorings;    // ascending row index
};

// Sweep + reconstruction in one call.
unweighted_result max_cardinality_induced_matching(const compact_graph& g,
                                                   const sweep_options& opts = {});

}  // namespace cbm
