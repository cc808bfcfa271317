#include "text_io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace cbm {

namespace {

// Allocation guard for counts read from untrusted files.
constexpr std::int64_t max_index = 100'000'000;

struct scanner {
    std::string_view text;
    std::size_t pos = 0;
    std::int64_t line = 1;

    void skip_blanks() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == '\r'))
            ++pos;
    }

    std::int64_t next_int(const char* what) {
        skip_blanks();
        if (pos >= text.size() || text[pos] == '\n')
            throw parse_error(line, std::string("expected ") + what);
        std::int64_t value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc())
            throw parse_error(line, std::string("malformed integer for ") + what);
        pos = static_cast<std::size_t>(ptr - text.data());
        if (pos < text.size() && text[pos] != ' ' && text[pos] != '\t' && text[pos] != '\r' &&
            text[pos] != '\n')
            throw parse_error(line, std::string("malformed integer for ") + what);
        return value;
    }

    void end_of_line() {
        skip_blanks();
        if (pos < text.size() && text[pos] != '\n')
            throw parse_error(line, "unexpected trailing content");
        if (pos < text.size()) {
            ++pos;
            ++line;
        }
    }

    void finish() {
        while (pos < text.size()) {
            skip_blanks();
            if (pos < text.size() && text[pos] == '\n') {
                ++pos;
                ++line;
                continue;
            }
            break;
        }
        if (pos < text.size()) throw parse_error(line, "trailing content");
    }

    std::int64_t bounded(const char* what, std::int64_t lo, std::int64_t hi) {
        std::int64_t value = next_int(what);
        if (value < lo || value > hi)
            throw parse_error(line, std::string(what) + " out of range: " + std::to_string(value));
        return value;
    }
};

void append_int(std::string& out, std::int64_t value) {
    char buf[24];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
    (void)ec;
    out.append(buf, ptr);
}

row_interval read_row(scanner& sc, std::int64_t u, v_index n_v) {
    std::int64_t left = sc.next_int("row left endpoint");
    std::int64_t right = sc.next_int("row right endpoint");
    if (left == 0 && right == 0) return {0, 0};
    if (left < 1 || right < left || right > n_v)
        throw parse_error(sc.line, "row " + std::to_string(u) + ": bad interval [" +
                                       std::to_string(left) + ", " + std::to_string(right) +
                                       "] with n_v " + std::to_string(n_v));
    return {static_cast<v_index>(left), static_cast<v_index>(right)};
}

}  // namespace

compact_graph parse_compact(std::string_view text) {
    scanner sc{text};
    std::int64_t n_u = sc.bounded("n_u", 0, max_index);
    std::int64_t n_v = sc.bounded("n_v", 0, max_index);
    sc.end_of_line();
    std::vector<row_interval> rows;
    rows.reserve(static_cast<std::size_t>(n_u));
    for (std::int64_t u = 1; u <= n_u; ++u) {
        rows.push_back(read_row(sc, u, static_cast<v_index>(n_v)));
        sc.end_of_line();
    }
    sc.finish();
    return compact_graph(static_cast<v_index>(n_v), std::move(rows));
}

weighted_graph parse_weighted(std::string_view text) {
    scanner sc{text};
    std::int64_t n_u = sc.bounded("n_u", 0, max_index);
    std::int64_t n_v = sc.bounded("n_v", 0, max_index);
    sc.end_of_line();
    std::vector<row_interval> rows;
    std::vector<weight_t> weights;
    rows.reserve(static_cast<std::size_t>(n_u));
    for (std::int64_t u = 1; u <= n_u; ++u) {
        row_interval r = read_row(sc, u, static_cast<v_index>(n_v));
        rows.push_back(r);
        for (std::int64_t k = 0; k < r.length(); ++k) weights.push_back(sc.next_int("edge weight"));
        sc.end_of_line();
    }
    sc.finish();
    return weighted_graph(compact_graph(static_cast<v_index>(n_v), std::move(rows)),
                          std::move(weights));
}

std::string format_compact(const compact_graph& g) {
    std::string out;
    append_int(out, g.n_u());
    out.push_back(' ');
    append_int(out, g.n_v());
    out.push_back('\n');
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        append_int(out, r.left);
        out.push_back(' ');
        append_int(out, r.right);
        out.push_back('\n');
    }
    return out;
}

std::string format_weighted(const weighted_graph& wg) {
    const compact_graph& g = wg.graph();
    std::string out;
    append_int(out, g.n_u());
    out.push_back(' ');
    append_int(out, g.n_v());
    out.push_back('\n');
    for (u_index u = 1; u <= g.n_u(); ++u) {
        const row_interval& r = g.row(u);
        append_int(out, r.left);
        out.push_back(' ');
        append_int(out, r.right);
        for (weight_t w : wg.row_weights(u)) {
            out.push_back(' ');
            append_int(out, w);
        }
        out.push_back('\n');
    }
    return out;
}

std::vector<edge> parse_matching(std::string_view text) {
    scanner sc{text};
    std::int64_t size = sc.bounded("matching size", 0, max_index);
    sc.end_of_line();
    std::vector<edge> edges;
    edges.reserve(static_cast<std::size_t>(size));
    for (std::int64_t k = 0; k < size; ++k) {
        std::int64_t u = sc.bounded("edge U-index", 1, max_index);
        std::int64_t v = sc.bounded("edge V-index", 1, max_index);
        edges.push_back({static_cast<u_index>(u), static_cast<v_index>(v)});
        sc.end_of_line();
    }
    sc.finish();
    return edges;
}

std::string format_matching(std::span<const edge> matching) {
    std::string out;
    append_int(out, static_cast<std::int64_t>(matching.size()));
    out.push_back('\n');
    for (const edge& e : matching) {
        append_int(out, e.u);
        out.push_back(' ');
        append_int(out, e.v);
        out.push_back('\n');
    }
    return out;
}

std::string format_weighted_matching(weight_t total, std::span<const edge> matching) {
    std::string out;
    append_int(out, total);
    out.push_back(' ');
    append_int(out, static_cast<std::int64_t>(matching.size()));
    out.push_back('\n');
    for (const edge& e : matching) {
        append_int(out, e.u);
        out.push_back(' ');
        append_int(out, e.v);
        out.push_back('\n');
    }
    return out;
}

std::string format_colorings(std::span<const row_coloring> colorings) {
    // Stable counting sort by row index.
    std::int64_t max_row = 0;
    for (const row_coloring& c : colorings) max_row = std::max<std::int64_t>(max_row, c.row);
    std::vector<std::int32_t> count(static_cast<std::size_t>(max_row) + 2, 0);
    for (const row_coloring& c : colorings) ++count[static_cast<std::size_t>(c.row)];
    std::int32_t running = 0;
    for (std::size_t i = 0; i < count.size(); ++i) {
        std::int32_t c = count[i];
        count[i] = running;
        running += c;
    }
    std::vector<const row_coloring*> sorted(colorings.size());
    for (const row_coloring& c : colorings)
        sorted[static_cast<std::size_t>(count[static_cast<std::size_t>(c.row)]++)] = &c;

    std::string out;
    for (const row_coloring* c : sorted) {
        append_int(out, c->row);
        out.push_back(' ');
        append_int(out, c->value);
        out.push_back(' ');
        append_int(out, c->begin1);
        out.push_back(' ');
        append_int(out, c->end1);
        if (c->has_second) {
            out.push_back(' ');
            append_int(out, c->begin2);
            out.push_back(' ');
            append_int(out, c->end2);
        }
        out.push_back('\n');
    }
    return out;
}

chain_cover parse_cover(std::string_view text) {
    scanner sc{text};
    chain_cover cover;
    cover.chain_count = static_cast<std::int32_t>(sc.bounded("chain count", 0, max_index));
    std::int64_t k = sc.bounded("entry count", 0, max_index);
    sc.end_of_line();
    cover.entries.reserve(static_cast<std::size_t>(k));
    for (std::int64_t i = 0; i < k; ++i) {
        std::int64_t chain = sc.bounded("chain index", 1, cover.chain_count);
        std::int64_t row = sc.bounded("row index", 1, max_index);
        std::int64_t begin = sc.bounded("entry begin", 1, max_index);
        std::int64_t end = sc.bounded("entry end", begin, max_index);
        cover.entries.push_back({static_cast<std::int32_t>(chain), static_cast<u_index>(row),
                                 static_cast<v_index>(begin), static_cast<v_index>(end)});
        sc.end_of_line();
    }
    sc.finish();
    return cover;
}

std::string format_cover(const chain_cover& cover) {
    std::string out;
    append_int(out, cover.chain_count);
    out.push_back(' ');
    append_int(out, static_cast<std::int64_t>(cover.entries.size()));
    out.push_back('\n');
    for (const cover_entry& e : cover.entries) {
        append_int(out, e.chain);
        out.push_back(' ');
        append_int(out, e.row);
        out.push_back(' ');
        append_int(out, e.begin);
        out.push_back(' ');
        append_int(out, e.end);
        out.push_back('\n');
    }
    return out;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw io_error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw io_error("read failed on " + path);
    return std::move(ss).str();
}

void write_file(const std::string& path, std::string_view content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw io_error("cannot open " + path + " for writing");
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw io_error("write failed on " + path);
}

}  // namespace cbm
