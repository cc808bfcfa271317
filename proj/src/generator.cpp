#include "generator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace cbm {

std::optional<gen_model> gen_model_from_name(std::string_view name) {
    if (name == "uniform") return gen_model::uniform_intervals;
    if (name == "fixed-length") return gen_model::fixed_length;
    if (name == "shared-endpoint") return gen_model::shared_endpoint;
    if (name == "full") return gen_model::full_intervals;
    return std::nullopt;
}

std::string_view gen_model_name(gen_model model) {
    switch (model) {
        case gen_model::uniform_intervals: return "uniform";
        case gen_model::fixed_length: return "fixed-length";
        case gen_model::shared_endpoint: return "shared-endpoint";
        case gen_model::full_intervals: return "full";
    }
    return "?";
}

namespace {

// Modulo bias is irrelevant here and the result is stable across standard
// library implementations, unlike uniform_int_distribution.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

std::vector<row_interval> generate_rows(const gen_spec& spec, std::mt19937_64& rng) {
    if (spec.n_u < 0 || spec.n_v < 1) throw std::invalid_argument("generator needs n_u >= 0, n_v >= 1");
    if (spec.empty_per_mille < 0 || spec.empty_per_mille > 1000)
        throw std::invalid_argument("empty_per_mille outside [0, 1000]");

    const v_index n_v = spec.n_v;
    const v_index fixed_len = std::max<v_index>(
        1, static_cast<v_index>(std::sqrt(static_cast<double>(n_v))));

    std::vector<row_interval> rows(static_cast<std::size_t>(spec.n_u));
    for (auto& r : rows) {
        if (spec.empty_per_mille > 0 && draw(rng, 0, 999) < spec.empty_per_mille) continue;
        switch (spec.model) {
            case gen_model::uniform_intervals: {
                v_index a = static_cast<v_index>(draw(rng, 1, n_v));
                v_index b = static_cast<v_index>(draw(rng, 1, n_v));
                r = {std::min(a, b), std::max(a, b)};
                break;
            }
            case gen_model::fixed_length: {
                v_index start = static_cast<v_index>(draw(rng, 1, std::max<v_index>(1, n_v - fixed_len + 1)));
                r = {start, std::min<v_index>(n_v, start + fixed_len - 1)};
                break;
            }
            case gen_model::shared_endpoint:
                r = {static_cast<v_index>(draw(rng, 1, n_v)), n_v};
                break;
            case gen_model::full_intervals:
                r = {1, n_v};
                break;
        }
    }
    return rows;
}

}  // namespace

compact_graph generate_graph(const gen_spec& spec) {
    std::mt19937_64 rng(spec.seed);
    return compact_graph(spec.n_v, generate_rows(spec, rng));
}

weighted_graph generate_weighted_graph(const gen_spec& spec) {
    if (spec.weight_min > spec.weight_max) throw std::invalid_argument("weight_min > weight_max");
    std::mt19937_64 rng(spec.seed);
    compact_graph g(spec.n_v, generate_rows(spec, rng));
    std::vector<weight_t> weights;
    weights.reserve(static_cast<std::size_t>(g.edge_count()));
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        for (v_index v = r.left; v > 0 && v <= r.right; ++v)
            weights.push_back(draw(rng, spec.weight_min, spec.weight_max));
    }
    return weighted_graph(std::move(g), std::move(weights));
}

}  // namespace cbm
