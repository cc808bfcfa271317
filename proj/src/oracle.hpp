#pragma once

#include <optional>
#include <span>

#include "graph.hpp"
#include "unweighted.hpp"

namespace cbm {

struct too_large_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Reference implementations used to validate the linear-time solvers. They
// are deliberately literal and slow; none of them share code with the
// solvers beyond the graph types.

// Exhaustive search over pairwise-independent edge subsets, maximizing total
// weight (the empty subset counts, so the result is >= 0). Throws
// too_large_error when m > 24.
weight_t brute_force_weighted(const weighted_graph& wg);

// Same search with unit weights, maximizing cardinality. The recursion only
// extends independent sets, so a larger cap (m <= 64) stays tractable.
std::int32_t brute_force_max_cardinality(const compact_graph& g);

// Dense dynamic-programming value table, one vector per row (empty rows give
// empty vectors); rows[i][k] is the value of edge (i+1, left+k).
struct dense_dp_table {
    std::vector<std::vector<weight_t>> rows;

    weight_t max_value() const;
};

// Literal evaluation of the value recurrence: each cell's incoming maximum is
// found by scanning every previously computed cell. Theta(m^2); doubles as
// the benchmark baseline.
dense_dp_table naive_dp(const weighted_graph& wg);
dense_dp_table naive_dp_unit(const compact_graph& g);

// Expands row colorings into the dense table they claim to summarize.
dense_dp_table dense_from_colorings(const compact_graph& g,
                                    std::span<const row_coloring> colorings);

// Streams every interval system with exactly n_u rows over n_v columns; each
// row independently takes one of 1 + n_v(n_v+1)/2 values (no edges, or any
// interval). Deterministic order.
class graph_enumerator {
public:
    graph_enumerator(u_index n_u, v_index n_v);

    std::optional<compact_graph> next();

private:
    v_index n_v_;
    std::vector<std::size_t> digits_;
    std::vector<row_interval> choices_;
    bool done_ = false;
};

// Earlier refinements of the cardinality sweep, kept as differential-test
// references. Both compute only the matching size.

// Recomputes each threshold from scratch by scanning the colorings of all
// previously processed rows. O(n_u^2 + n_v).
std::int32_t matching_size_rescan_thresholds(const compact_graph& g);

// Maintains thresholds by scanning all value-table entries in each finished
// column. O(n + m) due to the per-column scans.
std::int32_t matching_size_column_scan(const compact_graph& g);

}  // namespace cbm
