#include "cbmatch.h"

#include <cstring>
#include <optional>
#include <string>

#include "certify.hpp"
#include "chain_cover.hpp"
#include "generator.hpp"
#include "graph.hpp"
#include "oracle.hpp"
#include "text_io.hpp"
#include "unweighted.hpp"
#include "weighted.hpp"

struct cbm_graph {
    cbm::compact_graph g;
    std::optional<cbm::weighted_graph> wg;
};

struct cbm_matching {
    cbm::weight_t total = 0;
    std::vector<cbm::edge> edges;
};

struct cbm_colorings {
    std::vector<cbm::row_coloring> colorings;
};

struct cbm_cover {
    cbm::chain_cover cover;
};

namespace {

thread_local std::string tl_last_error = "no error";

cbm_status set_error(cbm_status status, std::string message) {
    tl_last_error = std::move(message);
    return status;
}

cbm_status arg_error(const char* message) { return set_error(CBM_ERR_ARGUMENT, message); }

// Exceptions stop at this boundary. The two specific invalid_argument
// subclasses must be matched before their base.
template <typename Fn>
cbm_status guarded(Fn&& fn) {
    try {
        return fn();
    } catch (const cbm::parse_error& e) {
        return set_error(CBM_ERR_PARSE, e.what());
    } catch (const cbm::io_error& e) {
        return set_error(CBM_ERR_IO, e.what());
    } catch (const cbm::too_large_error& e) {
        return set_error(CBM_ERR_TOO_LARGE, e.what());
    } catch (const cbm::inconsistent_colorings_error& e) {
        return set_error(CBM_ERR_INCONSISTENT, e.what());
    } catch (const std::invalid_argument& e) {
        return set_error(CBM_ERR_ARGUMENT, e.what());
    } catch (const std::exception& e) {
        return set_error(CBM_ERR_INTERNAL, e.what());
    } catch (...) {
        return set_error(CBM_ERR_INTERNAL, "unknown error");
    }
}

char* dup_string(std::string_view s) {
    char* out = new char[s.size() + 1];
    std::memcpy(out, s.data(), s.size());
    out[s.size()] = '\0';
    return out;
}

cbm_graph* wrap(cbm::compact_graph g) { return new cbm_graph{std::move(g), std::nullopt}; }

cbm_graph* wrap(cbm::weighted_graph wg) {
    cbm::compact_graph g = wg.graph();
    return new cbm_graph{std::move(g), std::move(wg)};
}

// Unit-weight expansion costs O(m) memory, so it gets an explicit ceiling.
constexpr std::int64_t max_unit_expansion_edges = 1'000'000'000;
constexpr std::int64_t max_naive_dp_edges = 200'000;

cbm_status deliver(const cbm::verdict& v, int* valid, char** reason) {
    *valid = v.valid ? 1 : 0;
    if (reason) *reason = v.valid ? nullptr : dup_string(v.reason);
    return CBM_OK;
}

}  // namespace

extern "C" {

const char* cbm_version(void) { return "0.1.0"; }

const char* cbm_last_error(void) { return tl_last_error.c_str(); }

void cbm_string_free(char* s) { delete[] s; }

cbm_status cbm_graph_create(int32_t n_u, int32_t n_v, const int32_t* lefts,
                            const int32_t* rights, const int64_t* weights,
                            int64_t weight_count, cbm_graph** out) {
    if (!out) return arg_error("out is NULL");
    if (n_u < 0) return arg_error("n_u is negative");
    if (n_u > 0 && (!lefts || !rights)) return arg_error("lefts/rights are NULL");
    if (weights && weight_count < 0) return arg_error("weight_count is negative");
    return guarded([&] {
        std::vector<cbm::row_interval> rows(static_cast<std::size_t>(n_u));
        for (std::size_t i = 0; i < rows.size(); ++i) rows[i] = {lefts[i], rights[i]};
        cbm::compact_graph g(n_v, std::move(rows));
        if (weights) {
            std::vector<cbm::weight_t> w(weights, weights + weight_count);
            *out = wrap(cbm::weighted_graph(std::move(g), std::move(w)));
        } else {
            *out = wrap(std::move(g));
        }
        return CBM_OK;
    });
}

cbm_status cbm_graph_parse(const char* text, int with_weights, cbm_graph** out) {
    if (!text || !out) return arg_error("text/out is NULL");
    return guarded([&] {
        *out = with_weights ? wrap(cbm::parse_weighted(text)) : wrap(cbm::parse_compact(text));
        return CBM_OK;
    });
}

cbm_status cbm_graph_read(const char* path, int with_weights, cbm_graph** out) {
    if (!path || !out) return arg_error("path/out is NULL");
    return guarded([&] {
        std::string text = cbm::read_file(path);
        *out = with_weights ? wrap(cbm::parse_weighted(text)) : wrap(cbm::parse_compact(text));
        return CBM_OK;
    });
}

cbm_status cbm_graph_generate(const char* model, int32_t n_u, int32_t n_v,
                              uint64_t seed, int32_t empty_per_mille,
                              int with_weights, int64_t weight_min,
                              int64_t weight_max, cbm_graph** out) {
    if (!model || !out) return arg_error("model/out is NULL");
    auto parsed = cbm::gen_model_from_name(model);
    if (!parsed) return arg_error("unknown generator model");
    return guarded([&] {
        cbm::gen_spec spec;
        spec.model = *parsed;
        spec.n_u = n_u;
        spec.n_v = n_v;
        spec.seed = seed;
        spec.empty_per_mille = empty_per_mille;
        spec.weight_min = weight_min;
        spec.weight_max = weight_max;
        *out = with_weights ? wrap(cbm::generate_weighted_graph(spec))
                            : wrap(cbm::generate_graph(spec));
        return CBM_OK;
    });
}

void cbm_graph_free(cbm_graph* g) { delete g; }

int32_t cbm_graph_n_u(const cbm_graph* g) { return g ? g->g.n_u() : 0; }
int32_t cbm_graph_n_v(const cbm_graph* g) { return g ? g->g.n_v() : 0; }
int64_t cbm_graph_edge_count(const cbm_graph* g) { return g ? g->g.edge_count() : 0; }
int cbm_graph_is_weighted(const cbm_graph* g) { return g && g->wg ? 1 : 0; }

cbm_status cbm_graph_row(const cbm_graph* g, int32_t u, int32_t* left, int32_t* right) {
    if (!g || !left || !right) return arg_error("g/left/right is NULL");
    if (u < 1 || u > g->g.n_u()) return arg_error("row index out of range");
    const cbm::row_interval& r = g->g.row(u);
    *left = r.left;
    *right = r.right;
    return CBM_OK;
}

cbm_status cbm_graph_format(const cbm_graph* g, char** out) {
    if (!g || !out) return arg_error("g/out is NULL");
    return guarded([&] {
        *out = dup_string(g->wg ? cbm::format_weighted(*g->wg) : cbm::format_compact(g->g));
        return CBM_OK;
    });
}

cbm_status cbm_graph_write(const cbm_graph* g, const char* path) {
    if (!g || !path) return arg_error("g/path is NULL");
    return guarded([&] {
        cbm::write_file(path, g->wg ? cbm::format_weighted(*g->wg) : cbm::format_compact(g->g));
        return CBM_OK;
    });
}

cbm_status cbm_solve_weighted(const cbm_graph* g, int require_nonempty, cbm_matching** out) {
    if (!g || !out) return arg_error("g/out is NULL");
    return guarded([&] {
        cbm::weighted_options opts;
        opts.require_nonempty = require_nonempty != 0;
        cbm::matching_result result;
        if (g->wg) {
            result = cbm::max_weight_induced_matching(*g->wg, opts);
        } else {
            if (g->g.edge_count() > max_unit_expansion_edges)
                throw cbm::too_large_error("too many edges for unit-weight expansion");
            std::vector<cbm::weight_t> unit(static_cast<std::size_t>(g->g.edge_count()), 1);
            result = cbm::max_weight_induced_matching(
                cbm::weighted_graph(g->g, std::move(unit)), opts);
        }
        *out = new cbm_matching{result.total, std::move(result.edges)};
        return CBM_OK;
    });
}

cbm_status cbm_solve_unweighted(const cbm_graph* g, cbm_matching** out,
                                cbm_colorings** out_colorings) {
    if (!g || !out) return arg_error("g/out is NULL");
    return guarded([&] {
        cbm::unweighted_result result = cbm::max_cardinality_induced_matching(g->g);
        *out = new cbm_matching{result.size, std::move(result.edges)};
        if (out_colorings) *out_colorings = new cbm_colorings{std::move(result.colorings)};
        return CBM_OK;
    });
}

void cbm_matching_free(cbm_matching* m) { delete m; }

int64_t cbm_matching_size(const cbm_matching* m) {
    return m ? static_cast<int64_t>(m->edges.size()) : 0;
}

int64_t cbm_matching_total(const cbm_matching* m) { return m ? m->total : 0; }

cbm_status cbm_matching_edge(const cbm_matching* m, int64_t index, int32_t* u, int32_t* v) {
    if (!m || !u || !v) return arg_error("m/u/v is NULL");
    if (index < 0 || index >= static_cast<int64_t>(m->edges.size()))
        return arg_error("edge index out of range");
    *u = m->edges[static_cast<std::size_t>(index)].u;
    *v = m->edges[static_cast<std::size_t>(index)].v;
    return CBM_OK;
}

cbm_status cbm_matching_parse(const char* text, cbm_matching** out) {
    if (!text || !out) return arg_error("text/out is NULL");
    return guarded([&] {
        std::vector<cbm::edge> edges = cbm::parse_matching(text);
        auto total = static_cast<cbm::weight_t>(edges.size());
        *out = new cbm_matching{total, std::move(edges)};
        return CBM_OK;
    });
}

cbm_status cbm_matching_format(const cbm_matching* m, char** out) {
    if (!m || !out) return arg_error("m/out is NULL");
    return guarded([&] {
        *out = dup_string(cbm::format_matching(m->edges));
        return CBM_OK;
    });
}

cbm_status cbm_matching_format_weighted(const cbm_matching* m, char** out) {
    if (!m || !out) return arg_error("m/out is NULL");
    return guarded([&] {
        *out = dup_string(cbm::format_weighted_matching(m->total, m->edges));
        return CBM_OK;
    });
}

void cbm_colorings_free(cbm_colorings* c) { delete c; }

int64_t cbm_colorings_count(const cbm_colorings* c) {
    return c ? static_cast<int64_t>(c->colorings.size()) : 0;
}

cbm_status cbm_colorings_format(const cbm_colorings* c, char** out) {
    if (!c || !out) return arg_error("c/out is NULL");
    return guarded([&] {
        *out = dup_string(cbm::format_colorings(c->colorings));
        return CBM_OK;
    });
}

cbm_status cbm_cover_compute(const cbm_graph* g, cbm_cover** out) {
    if (!g || !out) return arg_error("g/out is NULL");
    return guarded([&] {
        cbm::sweep_state state = cbm::run_matching_sweep(g->g);
        *out = new cbm_cover{cbm::minimum_chain_cover(g->g, state.colorings)};
        return CBM_OK;
    });
}

cbm_status cbm_cover_from_colorings(const cbm_graph* g, const cbm_colorings* c,
                                    cbm_cover** out) {
    if (!g || !c || !out) return arg_error("g/c/out is NULL");
    return guarded([&] {
        *out = new cbm_cover{cbm::minimum_chain_cover(g->g, c->colorings)};
        return CBM_OK;
    });
}

void cbm_cover_free(cbm_cover* c) { delete c; }

int32_t cbm_cover_chain_count(const cbm_cover* c) { return c ? c->cover.chain_count : 0; }

int64_t cbm_cover_entry_count(const cbm_cover* c) {
    return c ? static_cast<int64_t>(c->cover.entries.size()) : 0;
}

cbm_status cbm_cover_entry(const cbm_cover* c, int64_t index, int32_t* chain,
                           int32_t* row, int32_t* begin, int32_t* end) {
    if (!c || !chain || !row || !begin || !end) return arg_error("c/out pointers are NULL");
    if (index < 0 || index >= static_cast<int64_t>(c->cover.entries.size()))
        return arg_error("entry index out of range");
    const cbm::cover_entry& e = c->cover.entries[static_cast<std::size_t>(index)];
    *chain = e.chain;
    *row = e.row;
    *begin = e.begin;
    *end = e.end;
    return CBM_OK;
}

cbm_status cbm_cover_parse(const char* text, cbm_cover** out) {
    if (!text || !out) return arg_error("text/out is NULL");
    return guarded([&] {
        *out = new cbm_cover{cbm::parse_cover(text)};
        return CBM_OK;
    });
}

cbm_status cbm_cover_format(const cbm_cover* c, char** out) {
    if (!c || !out) return arg_error("c/out is NULL");
    return guarded([&] {
        *out = dup_string(cbm::format_cover(c->cover));
        return CBM_OK;
    });
}

cbm_status cbm_check_matching(const cbm_graph* g, const cbm_matching* m, int* valid,
                              char** reason) {
    if (!g || !m || !valid) return arg_error("g/m/valid is NULL");
    return guarded([&] { return deliver(cbm::check_induced_matching(g->g, m->edges), valid, reason); });
}

cbm_status cbm_check_cover(const cbm_graph* g, const cbm_cover* c, int* valid,
                           char** reason) {
    if (!g || !c || !valid) return arg_error("g/c/valid is NULL");
    return guarded([&] { return deliver(cbm::check_chain_cover(g->g, c->cover), valid, reason); });
}

cbm_status cbm_check_certificate(const cbm_graph* g, const cbm_matching* m,
                                 const cbm_cover* c, int* valid, char** reason) {
    if (!g || !m || !c || !valid) return arg_error("g/m/c/valid is NULL");
    return guarded([&] {
        return deliver(cbm::check_certificate(g->g, m->edges, c->cover), valid, reason);
    });
}

cbm_status cbm_naive_dp_max(const cbm_graph* g, int64_t* out) {
    if (!g || !out) return arg_error("g/out is NULL");
    return guarded([&] {
        if (g->g.edge_count() > max_naive_dp_edges)
            throw cbm::too_large_error("instance too large for the quadratic baseline");
        cbm::dense_dp_table table = g->wg ? cbm::naive_dp(*g->wg) : cbm::naive_dp_unit(g->g);
        *out = table.max_value();
        return CBM_OK;
    });
}

}  // extern "C"
