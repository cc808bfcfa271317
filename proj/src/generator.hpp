#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "graph.hpp"

namespace cbm {

// Random instance families. All draws come from a seeded mt19937_64 reduced
// by modulo, so a (model, sizes, seed) tuple yields the same instance on
// every platform.
enum class gen_model {
    // left/right = min/max of two uniform column draws
    uniform_intervals,
    // every interval has length max(1, floor(sqrt(n_v))), uniform placement
    fixed_length,
    // every interval ends at the last column, uniform start
    shared_endpoint,
    // every interval is the whole column range
    full_intervals,
};

std::optional<gen_model> gen_model_from_name(std::string_view name);
std::string_view gen_model_name(gen_model model);

struct gen_spec {
    gen_model model = gen_model::uniform_intervals;
    u_index n_u = 0;
    v_index n_v = 0;
    std::uint64_t seed = 0;
    // out of 1000; empty rows have interval [0,0]
    int empty_per_mille = 0;
    // weights drawn uniformly from [weight_min, weight_max]
    weight_t weight_min = 1;
    weight_t weight_max = 100;
};

compact_graph generate_graph(const gen_spec& spec);
weighted_graph generate_weighted_graph(const gen_spec& spec);

}  // namespace cbm
