#include <doctest.h>

#include <cstdio>
#include <string>

#include "helpers.hpp"
#include "text_io.hpp"

using namespace cbm;
using test_util::make_graph;

namespace {

std::int64_t error_line(const std::string& text, bool weighted = false) {
    try {
        if (weighted)
            parse_weighted(text);
        else
            parse_compact(text);
    } catch (const parse_error& e) {
        return e.line;
    }
    return -1;
}

}  // namespace

TEST_CASE("graph text round trip") {
    const std::string text = "4 6\n1 3\n0 0\n6 6\n2 5\n";
    compact_graph g = parse_compact(text);
    CHECK(g.n_u() == 4);
    CHECK(g.n_v() == 6);
    CHECK(g.row(2).empty());
    CHECK(g.row(4).left == 2);
    CHECK(format_compact(g) == text);
}

TEST_CASE("graph parser tolerates loose whitespace") {
    compact_graph g = parse_compact("  2   3 \r\n1 2\r\n0 0\n\n  \n");
    CHECK(g.n_u() == 2);
    CHECK(g.row(1).right == 2);
    CHECK(g.row(2).empty());

    // final newline optional
    CHECK(parse_compact("1 4\n2 3").row(1).left == 2);
}

TEST_CASE("graph parser rejects malformed input") {
    CHECK(error_line("") == 1);
    CHECK(error_line("3") == 1);
    CHECK(error_line("-1 4\n") == 1);
    CHECK(error_line("1 4 9\n1 2\n") == 1);
    CHECK(error_line("2 4\n1 2\n") == 3);          // missing row reported where it belongs
    CHECK(error_line("1 4\n0 2\n") == 2);          // half-empty marker
    CHECK(error_line("1 4\n3 2\n") == 2);          // reversed
    CHECK(error_line("1 4\n1 5\n") == 2);          // past n_v
    CHECK(error_line("1 4\n1 x\n") == 2);          // not an integer
    CHECK(error_line("1 4\n1 2.5\n") == 2);        // trailing junk inside token
    CHECK(error_line("1 4\n1 2\nleftover\n") == 3);
    CHECK(error_line("1 4\n1 2 7\n") == 2);        // weight on unweighted row
    CHECK(error_line("200000001 1\n") == 1);       // allocation guard
}

TEST_CASE("weighted text round trip") {
    const std::string text = "3 4\n2 4 7 -2 9\n0 0\n1 1 0\n";
    weighted_graph wg = parse_weighted(text);
    CHECK(wg.graph().edge_count() == 4);
    CHECK(wg.weight(1, 3) == -2);
    CHECK(wg.weight(3, 1) == 0);
    CHECK(format_weighted(wg) == text);

    CHECK(error_line("1 4\n2 4 7 -2\n", true) == 2);      // one weight short
    CHECK(error_line("1 4\n2 4 7 -2 9 3\n", true) == 2);  // one weight extra
}

TEST_CASE("matching text round trip") {
    std::vector<edge> m = parse_matching("2\n1 3\n4 2\n");
    REQUIRE(m.size() == 2);
    CHECK(m[1] == edge{4, 2});
    CHECK(format_matching(m) == "2\n1 3\n4 2\n");
    CHECK(format_weighted_matching(-7, m) == "-7 2\n1 3\n4 2\n");
    CHECK(parse_matching("0\n").empty());

    CHECK_THROWS_AS(parse_matching("1\n0 3\n"), parse_error);
    CHECK_THROWS_AS(parse_matching("1\n3 -1\n"), parse_error);
    CHECK_THROWS_AS(parse_matching("2\n1 3\n"), parse_error);
    CHECK_THROWS_AS(parse_matching("1\n1 3\n4 5\n"), parse_error);
}

TEST_CASE("cover text round trip") {
    const std::string text = "2 3\n1 1 1 2\n1 2 2 2\n2 3 3 5\n";
    chain_cover cover = parse_cover(text);
    CHECK(cover.chain_count == 2);
    REQUIRE(cover.entries.size() == 3);
    CHECK(cover.entries[2].row == 3);
    CHECK(cover.entries[2].end == 5);
    CHECK(format_cover(cover) == text);

    CHECK_THROWS_AS(parse_cover("1 1\n2 1 1 2\n"), parse_error);  // chain past count
    CHECK_THROWS_AS(parse_cover("1 1\n0 1 1 2\n"), parse_error);
    CHECK_THROWS_AS(parse_cover("1 1\n1 1 3 2\n"), parse_error);  // end before begin
    CHECK_THROWS_AS(parse_cover("0 1\n1 1 1 1\n"), parse_error);  // entry without chains
    CHECK(parse_cover("0 0\n").chain_count == 0);
}

TEST_CASE("colorings formatting sorts by row") {
    std::vector<row_coloring> cs;
    row_coloring a;
    a.row = 3;
    a.value = 2;
    a.begin1 = 1;
    a.end1 = 2;
    a.begin2 = 3;
    a.end2 = 4;
    a.has_second = true;
    row_coloring b;
    b.row = 1;
    b.value = 1;
    b.begin1 = 2;
    b.end1 = 5;
    cs.push_back(a);
    cs.push_back(b);
    CHECK(format_colorings(cs) == "1 1 2 5\n3 2 1 2 3 4\n");
}

TEST_CASE("file round trip") {
    const std::string path = "/tmp/cbm_io_test.txt";
    write_file(path, "2 2\n1 1\n2 2\n");
    CHECK(read_file(path) == "2 2\n1 1\n2 2\n");
    std::remove(path.c_str());
    CHECK_THROWS_AS(read_file("/tmp/cbm_io_test_does_not_exist.txt"), io_error);
    CHECK_THROWS_AS(write_file("/tmp/no_such_dir_cbm/x.txt", "hi"), io_error);
}
