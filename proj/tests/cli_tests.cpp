#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <string>

// Binary path is baked in by the build; every test drives the real
// executable through a shell.

namespace {

struct run_result {
    int exit_code = -1;
    std::string output;  // stdout and stderr merged
};

run_result run_cli(const std::string& args) {
    std::string cmd = std::string(CBMATCH_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result r;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, got);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_text(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    REQUIRE(out.good());
    out << content;
}

const std::string dir = "/tmp/";

}  // namespace

TEST_CASE("help exits cleanly") {
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("solve --help").exit_code == 0);
}

TEST_CASE("usage errors exit with 2") {
    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("frobnicate").exit_code == 2);
    CHECK(run_cli("solve --no-such-flag").exit_code == 2);
    CHECK(run_cli("gen").exit_code == 2);  // missing required row count
    CHECK(run_cli("certify -g /tmp/cbm_cli_none.txt").exit_code == 2);
}

TEST_CASE("solve reads stdin and files") {
    write_text(dir + "cbm_cli_g.txt", "2 3\n1 2\n2 3\n");
    run_result from_file = run_cli("solve -i " + dir + "cbm_cli_g.txt");
    CHECK(from_file.exit_code == 0);
    CHECK(from_file.output == "2\n1 1\n2 3\n");

    run_result from_stdin = run_cli("solve < " + dir + "cbm_cli_g.txt");
    CHECK(from_stdin.exit_code == 0);
    CHECK(from_stdin.output == from_file.output);

    run_result to_file = run_cli("solve -i " + dir + "cbm_cli_g.txt -o " + dir + "cbm_cli_m.txt");
    CHECK(to_file.exit_code == 0);
    CHECK(to_file.output.empty());
}

TEST_CASE("weighted solve") {
    write_text(dir + "cbm_cli_w.txt", "2 3\n1 2 5 1\n2 3 4 3\n");
    run_result r = run_cli("solve -w -i " + dir + "cbm_cli_w.txt");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "8 2\n1 1\n2 3\n");

    write_text(dir + "cbm_cli_neg.txt", "1 2\n1 2 -7 -2\n");
    run_result neg = run_cli("solve -w --require-nonempty -i " + dir + "cbm_cli_neg.txt");
    CHECK(neg.exit_code == 0);
    CHECK(neg.output == "-2 1\n1 2\n");
}

TEST_CASE("parse failures exit with 2") {
    write_text(dir + "cbm_cli_bad.txt", "2 3\n1 9\n1 2\n");
    run_result r = run_cli("solve -i " + dir + "cbm_cli_bad.txt");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("line 2") != std::string::npos);

    CHECK(run_cli("solve -i /tmp/cbm_cli_does_not_exist.txt").exit_code == 2);
}

TEST_CASE("cover pipeline certifies itself and certify validates the files") {
    run_result gen = run_cli("gen --model uniform -u 50 -v 30 --seed 11 -o " + dir +
                             "cbm_cli_gen.txt");
    REQUIRE(gen.exit_code == 0);

    run_result cover = run_cli("cover -i " + dir + "cbm_cli_gen.txt -o " + dir +
                               "cbm_cli_cover.txt --matching " + dir + "cbm_cli_match.txt");
    REQUIRE(cover.exit_code == 0);

    run_result ok = run_cli("certify -g " + dir + "cbm_cli_gen.txt -m " + dir +
                            "cbm_cli_match.txt -c " + dir + "cbm_cli_cover.txt");
    CHECK(ok.exit_code == 0);
    CHECK(ok.output == "VALID\n");

    run_result match_only =
        run_cli("certify -g " + dir + "cbm_cli_gen.txt -m " + dir + "cbm_cli_match.txt");
    CHECK(match_only.exit_code == 0);

    run_result cover_only =
        run_cli("certify -g " + dir + "cbm_cli_gen.txt -c " + dir + "cbm_cli_cover.txt");
    CHECK(cover_only.exit_code == 0);
}

TEST_CASE("certify rejects a tampered matching") {
    write_text(dir + "cbm_cli_tg.txt", "2 3\n1 2\n2 3\n");
    write_text(dir + "cbm_cli_tm.txt", "2\n1 2\n2 2\n");  // duplicate column
    run_result r = run_cli("certify -g " + dir + "cbm_cli_tg.txt -m " + dir + "cbm_cli_tm.txt");
    CHECK(r.exit_code == 1);
    CHECK(r.output.find("INVALID") == 0);
    CHECK(r.output.find("DuplicateEndpoint") != std::string::npos);
}

TEST_CASE("gen is deterministic and parses back") {
    run_result a = run_cli("gen --model shared-endpoint -u 9 -v 5 --seed 3");
    run_result b = run_cli("gen --model shared-endpoint -u 9 -v 5 --seed 3");
    CHECK(a.exit_code == 0);
    CHECK(a.output == b.output);
    CHECK(a.output.substr(0, 4) == "9 5\n");

    run_result w = run_cli("gen --model full -u 3 -v 2 -w --seed 1");
    CHECK(w.exit_code == 0);
    CHECK(w.output.substr(0, 4) == "3 2\n");
}

TEST_CASE("bench emits CSV") {
    run_result r = run_cli("bench -u 64 -v 64 --reps 1 --model uniform");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("algorithm,n_u,n_v,m,nanos\n") == 0);
    CHECK(r.output.find("sweep,64,64,") != std::string::npos);
    CHECK(r.output.find("cover,64,64,") != std::string::npos);
    CHECK(r.output.find("naive,64,64,") != std::string::npos);
}

TEST_CASE("colorings file output") {
    write_text(dir + "cbm_cli_cg.txt", "2 5\n1 2\n2 5\n");
    run_result r = run_cli("solve -i " + dir + "cbm_cli_cg.txt --colorings " + dir +
                           "cbm_cli_col.txt");
    REQUIRE(r.exit_code == 0);
    std::ifstream in(dir + "cbm_cli_col.txt");
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    CHECK(text == "1 1 1 2\n2 1 2 2 3 5\n");
}
