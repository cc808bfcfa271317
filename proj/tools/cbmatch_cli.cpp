// Command-line front end. Everything algorithmic goes through the C API in
// cbmatch.h; this file only moves text and measures time.
//
// Exit codes: 0 success (certificate valid), 1 certificate invalid,
// 2 usage, parse, or I/O failure.

#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cbmatch.h"

namespace {

[[noreturn]] void die(const std::string& message) {
    std::cerr << "error: " << message << "\n";
    std::exit(2);
}

void check(cbm_status status) {
    if (status != CBM_OK) die(cbm_last_error());
}

struct owned_string {
    char* p = nullptr;
    ~owned_string() { cbm_string_free(p); }
};

template <typename T, void (*Free)(T*)>
struct handle {
    T* p = nullptr;
    handle() = default;
    handle(const handle&) = delete;
    handle& operator=(const handle&) = delete;
    ~handle() { Free(p); }
    T** out() { return &p; }
    operator T*() const { return p; }
};

using graph_handle = handle<cbm_graph, cbm_graph_free>;
using matching_handle = handle<cbm_matching, cbm_matching_free>;
using colorings_handle = handle<cbm_colorings, cbm_colorings_free>;
using cover_handle = handle<cbm_cover, cbm_cover_free>;

std::string slurp(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

std::string read_text(const std::string& path) {
    if (path == "-") return slurp(std::cin);
    std::ifstream in(path, std::ios::binary);
    if (!in) die("cannot open " + path);
    return slurp(in);
}

void load_graph(const std::string& path, bool weighted, graph_handle& g) {
    if (path == "-") {
        check(cbm_graph_parse(read_text("-").c_str(), weighted ? 1 : 0, g.out()));
    } else {
        check(cbm_graph_read(path.c_str(), weighted ? 1 : 0, g.out()));
    }
}

void emit(const std::string& path, const char* text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) die("cannot open " + path + " for writing");
    out << text;
    if (!out) die("write to " + path + " failed");
}

int run_solve(const std::string& input, const std::string& output, bool weighted,
              bool require_nonempty, const std::string& colorings_path) {
    graph_handle g;
    load_graph(input, weighted, g);
    if (weighted) {
        matching_handle m;
        check(cbm_solve_weighted(g, require_nonempty ? 1 : 0, m.out()));
        owned_string text;
        check(cbm_matching_format_weighted(m, &text.p));
        emit(output, text.p);
        return 0;
    }
    matching_handle m;
    colorings_handle c;
    check(cbm_solve_unweighted(g, m.out(), colorings_path.empty() ? nullptr : c.out()));
    owned_string text;
    check(cbm_matching_format(m, &text.p));
    emit(output, text.p);
    if (!colorings_path.empty()) {
        owned_string ctext;
        check(cbm_colorings_format(c, &ctext.p));
        emit(colorings_path, ctext.p);
    }
    return 0;
}

int run_cover(const std::string& input, const std::string& output,
              const std::string& matching_path, const std::string& colorings_path) {
    graph_handle g;
    load_graph(input, false, g);
    matching_handle m;
    colorings_handle c;
    check(cbm_solve_unweighted(g, m.out(), c.out()));
    cover_handle cover;
    check(cbm_cover_from_colorings(g, c, cover.out()));

    // The pair certifies itself; a failure here is a bug, not bad input.
    int valid = 0;
    owned_string reason;
    check(cbm_check_certificate(g, m, cover, &valid, &reason.p));
    if (!valid) {
        std::cerr << "internal certificate check failed: " << (reason.p ? reason.p : "") << "\n";
        return 1;
    }

    owned_string text;
    check(cbm_cover_format(cover, &text.p));
    emit(output, text.p);
    if (!matching_path.empty()) {
        owned_string mtext;
        check(cbm_matching_format(m, &mtext.p));
        emit(matching_path, mtext.p);
    }
    if (!colorings_path.empty()) {
        owned_string ctext;
        check(cbm_colorings_format(c, &ctext.p));
        emit(colorings_path, ctext.p);
    }
    return 0;
}

int run_certify(const std::string& graph_path, bool weighted, const std::string& matching_path,
                const std::string& cover_path) {
    graph_handle g;
    load_graph(graph_path, weighted, g);

    matching_handle m;
    if (!matching_path.empty())
        check(cbm_matching_parse(read_text(matching_path).c_str(), m.out()));
    cover_handle cover;
    if (!cover_path.empty())
        check(cbm_cover_parse(read_text(cover_path).c_str(), cover.out()));

    int valid = 0;
    owned_string reason;
    if (m.p && cover.p) {
        check(cbm_check_certificate(g, m, cover, &valid, &reason.p));
    } else if (m.p) {
        check(cbm_check_matching(g, m, &valid, &reason.p));
    } else {
        check(cbm_check_cover(g, cover, &valid, &reason.p));
    }

    if (valid) {
        std::cout << "VALID\n";
        return 0;
    }
    std::cout << "INVALID " << (reason.p ? reason.p : "") << "\n";
    return 1;
}

int run_gen(const std::string& model, std::int32_t n_u, std::int32_t n_v, std::uint64_t seed,
            std::int32_t empty_per_mille, bool weighted, std::int64_t weight_min,
            std::int64_t weight_max, const std::string& output) {
    graph_handle g;
    check(cbm_graph_generate(model.c_str(), n_u, n_v, seed, empty_per_mille, weighted ? 1 : 0,
                             weight_min, weight_max, g.out()));
    if (output == "-") {
        owned_string text;
        check(cbm_graph_format(g, &text.p));
        std::cout << text.p;
    } else {
        check(cbm_graph_write(g, output.c_str()));
    }
    return 0;
}

template <typename F>
std::int64_t elapsed_nanos(F&& body) {
    auto start = std::chrono::steady_clock::now();
    body();
    auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

int run_bench(const std::string& model, const std::vector<std::int32_t>& sizes, std::int32_t n_v,
              std::uint64_t seed, int reps) {
    // Caps keep a bench run from thrashing: the quadratic baseline blows up
    // past a few thousand edges, the weighted solver is O(m) memory.
    constexpr std::int64_t naive_cap = 20'000;
    constexpr std::int64_t weighted_cap = 30'000'000;

    std::cout << "algorithm,n_u,n_v,m,nanos\n";
    for (std::int32_t n_u : sizes) {
        const std::int32_t cols = n_v > 0 ? n_v : n_u;
        graph_handle g;
        check(cbm_graph_generate(model.c_str(), n_u, cols, seed, 0, 0, 1, 100, g.out()));
        const std::int64_t m = cbm_graph_edge_count(g);

        graph_handle wg;
        if (m <= weighted_cap)
            check(cbm_graph_generate(model.c_str(), n_u, cols, seed, 0, 1, 1, 100, wg.out()));

        auto report = [&](const char* name, std::int64_t nanos) {
            std::cout << name << ',' << n_u << ',' << cols << ',' << m << ',' << nanos << "\n";
        };

        for (int rep = 0; rep < reps; ++rep) {
            report("sweep", elapsed_nanos([&] {
                       matching_handle out;
                       check(cbm_solve_unweighted(g, out.out(), nullptr));
                   }));
            report("cover", elapsed_nanos([&] {
                       cover_handle out;
                       check(cbm_cover_compute(g, out.out()));
                   }));
            if (wg.p)
                report("weighted", elapsed_nanos([&] {
                           matching_handle out;
                           check(cbm_solve_weighted(wg, 0, out.out()));
                       }));
            if (m <= naive_cap)
                report("naive", elapsed_nanos([&] {
                           std::int64_t best = 0;
                           check(cbm_naive_dp_max(g, &best));
                       }));
        }
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"induced matchings and chain covers on convex bipartite graphs"};
    app.require_subcommand(1);

    std::string input = "-";
    std::string output = "-";
    std::string graph_path;
    std::string matching_path;
    std::string cover_path;
    std::string colorings_path;
    bool weighted = false;
    bool require_nonempty = false;

    auto* solve = app.add_subcommand("solve", "compute a maximum induced matching");
    solve->add_option("-i,--input", input, "graph file, - for stdin");
    solve->add_option("-o,--output", output, "matching file, - for stdout");
    solve->add_flag("-w,--weighted", weighted, "read edge weights, maximize total weight");
    solve->add_flag("--require-nonempty", require_nonempty,
                    "with -w: return the heaviest edge instead of an empty optimum");
    solve->add_option("--colorings", colorings_path, "also write row colorings (unweighted only)");

    auto* cover = app.add_subcommand(
        "cover", "compute a minimum chain cover and certify it against a matching");
    cover->add_option("-i,--input", input, "graph file, - for stdin");
    cover->add_option("-o,--output", output, "cover file, - for stdout");
    cover->add_option("--matching", matching_path, "also write the certified matching");
    cover->add_option("--colorings", colorings_path, "also write row colorings");

    auto* certify = app.add_subcommand("certify", "check a matching and/or cover");
    certify->add_option("-g,--graph", graph_path, "graph file")->required();
    certify->add_flag("-w,--weighted", weighted, "graph file carries edge weights");
    certify->add_option("-m,--matching", matching_path, "matching file");
    certify->add_option("-c,--cover", cover_path, "cover file");

    std::string model = "uniform";
    std::int32_t n_u = 10;
    std::int32_t n_v = 0;
    std::uint64_t seed = 1;
    std::int32_t empty_per_mille = 0;
    std::int64_t weight_min = 1;
    std::int64_t weight_max = 100;

    auto* gen = app.add_subcommand("gen", "generate a random instance");
    gen->add_option("--model", model, "uniform | fixed-length | shared-endpoint | full");
    gen->add_option("-u,--n-u", n_u, "number of rows")->required();
    gen->add_option("-v,--n-v", n_v, "number of columns (default: same as rows)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--empty-per-mille", empty_per_mille, "rows without edges, out of 1000");
    gen->add_flag("-w,--weighted", weighted, "attach uniform random edge weights");
    gen->add_option("--weight-min", weight_min, "smallest weight");
    gen->add_option("--weight-max", weight_max, "largest weight");
    gen->add_option("-o,--output", output, "graph file, - for stdout");

    std::vector<std::int32_t> sizes{1000, 10000, 100000};
    int reps = 3;

    auto* bench = app.add_subcommand("bench", "time the solvers, CSV on stdout");
    bench->add_option("--model", model, "instance family");
    bench->add_option("-u,--n-u", sizes, "row counts to sweep");
    bench->add_option("-v,--n-v", n_v, "column count (default: same as rows)");
    bench->add_option("--seed", seed, "random seed");
    bench->add_option("--reps", reps, "measurements per size");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (*solve) return run_solve(input, output, weighted, require_nonempty, colorings_path);
    if (*cover) return run_cover(input, output, matching_path, colorings_path);
    if (*certify) {
        if (matching_path.empty() && cover_path.empty())
            die("certify needs --matching, --cover, or both");
        return run_certify(graph_path, weighted, matching_path, cover_path);
    }
    if (*gen) {
        if (n_v == 0) n_v = n_u;
        return run_gen(model, n_u, n_v, seed, empty_per_mille, weighted, weight_min, weight_max,
                       output);
    }
    if (*bench) return run_bench(model, sizes, n_v, seed, reps);
    return 2;
}
