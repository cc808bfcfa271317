#pragma once

#include <span>
#include <string>
#include <string_view>

#include "chain_cover.hpp"
#include "graph.hpp"
#include "unweighted.hpp"

namespace cbm {

struct parse_error : std::runtime_error {
    parse_error(std::int64_t line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message), line(line) {}

    std::int64_t line;
};

struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// All formats are line-oriented ASCII with whitespace-separated integers.
//
// Graph:       "n_u n_v" then n_u rows "L R" ("0 0" = row without edges);
//              weighted rows append the R-L+1 edge weights.
// Matching:    "size" then size lines "u v" (cardinality results), or
//              "total k" then k lines "u v" (weighted results).
// Colorings:   one line per non-empty row, "row value B E" or
//              "row value B E B2 E2".
// Chain cover: "chain_count k" then k lines "chain row begin end".
//
// Parsers are strict: wrong token counts, malformed integers, out-of-range
// indices, or trailing content raise parse_error with a 1-based line number.

compact_graph parse_compact(std::string_view text);
weighted_graph parse_weighted(std::string_view text);
std::string format_compact(const compact_graph& g);
std::string format_weighted(const weighted_graph& wg);

std::vector<edge> parse_matching(std::string_view text);
std::string format_matching(std::span<const edge> matching);
std::string format_weighted_matching(weight_t total, std::span<const edge> matching);

// Emitted sorted by row index regardless of input order.
std::string format_colorings(std::span<const row_coloring> colorings);

chain_cover parse_cover(std::string_view text);
std::string format_cover(const chain_cover& cover);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace cbm
