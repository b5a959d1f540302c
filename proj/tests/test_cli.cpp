#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "doctest.h"
#include "optint/bench.hpp"
#include "optint/hci.hpp"
#include "optint/io.hpp"
#include "optint/oracle.hpp"
#include "optint/psei.hpp"

using namespace optint;
using i64 = std::int64_t;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string temp_dir() {
    static const std::string dir = [] {
        char tmpl[] = "/tmp/optint_cli_XXXXXX";
        const char* d = mkdtemp(tmpl);
        REQUIRE(d != nullptr);
        return std::string(d);
    }();
    return dir;
}

std::string write_temp(const std::string& name, const std::string& content) {
    const std::string path = temp_dir() + "/" + name;
    std::ofstream f(path);
    f << content;
    return path;
}

// run the CLI with stdin from a file, capturing stdout; stderr is dropped
RunResult run_cli(const std::string& args, const std::string& stdin_content) {
    const std::string in_path = write_temp("stdin.txt", stdin_content);
    const std::string cmd = std::string("'") + OPTINT_CLI_PATH + "' " + args + " < '" + in_path +
                            "' 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult res;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) res.out.append(buf, got);
    const int status = pclose(pipe);
    res.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return res;
}

std::string csv_input(const PairSequence<i64>& d) {
    std::string out;
    for (const auto& p : d.pairs())
        out += std::to_string(p.h) + "," + std::to_string(p.s) + "\n";
    return out;
}

}  // namespace

TEST_CASE("hci subcommand reference run") {
    const auto res = run_cli("hci --lh 3", "2,1\n-1,1\n3,1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "{\"start\":3,\"end\":3,\"value\":\"3/1\"}\n");
}

TEST_CASE("non-positive support is a usage error") {
    const auto res = run_cli("hci --lh 3", "1,0");
    CHECK(res.exit_code == 2);
    CHECK(res.out.empty());
}

TEST_CASE("malformed lines carry their line number") {
    const auto res = run_cli("psei --ls 1", "1,1\na,b");
    CHECK(res.exit_code == 2);
}

TEST_CASE("streaming emits one record per line") {
    const auto res = run_cli("hci --lh 3 --stream", "2,1\n-1,1\n3,1");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "null\nnull\n{\"start\":3,\"end\":3,\"value\":\"3/1\"}\n");
}

TEST_CASE("csv with bare hits defaults supports to one") {
    const auto res = run_cli("psei --ls 1", "1\n2\n");
    CHECK(res.exit_code == 0);
    const auto d = PairSequence<i64>({{1, 1}, {2, 1}});
    CHECK(d.plain());
    CHECK(res.out == io::render_record(compute_psei(d, 1)) + "\n");
    CHECK(res.out.substr(0, 23) == "{\"start\":1,\"end\":2,\"val");
}

TEST_CASE("jsonl input") {
    const auto res = run_cli("--format jsonl hci --lh 1", "{\"h\":1,\"s\":2}\n{\"h\":3}");
    CHECK(res.exit_code == 0);
    // best endorsed interval is [2,2] with conf 3/1
    CHECK(res.out == "{\"start\":2,\"end\":2,\"value\":\"3/1\"}\n");

    CHECK(run_cli("--format jsonl hci --lh 1", "{\"h\":1}\nnot json").exit_code == 2);
    CHECK(run_cli("--format jsonl hci --lh 1", "{\"s\":2}").exit_code == 2);
}

TEST_CASE("input can come from a file") {
    const std::string path = write_temp("pairs.csv", "2,1\n-1,1\n3,1\n");
    const auto res = run_cli("--input '" + path + "' hci --lh 3", "");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "{\"start\":3,\"end\":3,\"value\":\"3/1\"}\n");
    CHECK(run_cli("--input /nonexistent/pairs.csv hci --lh 3", "").exit_code == 2);
}

TEST_CASE("streaming rejects a negative bound") {
    const auto res = run_cli("hci --stream --lh -2", "1,1\n");
    CHECK(res.exit_code == 2);
}

TEST_CASE("floating mode renders numbers") {
    const auto res = run_cli("hci --lh 0.5", "0.5,1\n1.5,1\n");
    CHECK(res.exit_code == 0);
    const auto d = PairSequence<double>({{0.5, 1.0}, {1.5, 1.0}});
    const auto ans = compute_hci(d, 0.5);
    CHECK(res.out == io::render_record(ans) + "\n");
}

TEST_CASE("exact flag rejects non-integer input") {
    const auto res = run_cli("--exact hci --lh 1", "1.5,1\n");
    CHECK(res.exit_code == 2);
}

TEST_CASE("missing subcommand or unknown flags are usage errors") {
    CHECK(run_cli("", "").exit_code == 2);
    CHECK(run_cli("hci", "1,1").exit_code == 2);  // --lh is required
    CHECK(run_cli("frobnicate", "").exit_code == 2);
}

TEST_CASE("convolve round trip with inf entries") {
    const std::string x = write_temp("x.txt", "3\ninf\n1\n");
    const std::string y = write_temp("y.txt", "2\n5\ninf\n");
    const auto res = run_cli("convolve --x '" + x + "' --y '" + y + "'", "");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "5\n8\n3\n");
    const auto naive = run_cli("convolve --naive --x '" + x + "' --y '" + y + "'", "");
    CHECK(naive.out == res.out);

    const std::string bad = write_temp("bad.txt", "1\n2\n");
    CHECK(run_cli("convolve --x '" + x + "' --y '" + bad + "'", "").exit_code == 2);
}

TEST_CASE("maxsums reference run") {
    const auto res = run_cli("--check maxsums", "1\n-2\n3\n");
    CHECK(res.exit_code == 0);
    CHECK(res.out == "3\n1\n2\n");
}

TEST_CASE("bench emits one csv row per size and subcommand") {
    const auto res = run_cli("bench --sizes 64,128", "");
    CHECK(res.exit_code == 0);
    int rows = 0;
    for (const char ch : res.out) rows += ch == '\n';
    CHECK(rows == 6);
    CHECK(res.out.find("64,hci,") != std::string::npos);
    CHECK(res.out.find("128,convolve,") != std::string::npos);

    const auto empty = run_cli("bench", "");
    CHECK(empty.exit_code == 0);
    CHECK(empty.out.empty());
}

TEST_CASE("cli output equals library output byte for byte") {
    bench::Rng rng(91001);

    SUBCASE("hci with --check") {
        for (int iter = 0; iter < 25; ++iter) {
            const index_t n = rng.range(1, 40);
            const auto d = bench::random_pairs(n, rng, -10, 10, 1, 5);
            const i64 bound = rng.range(-20, 20);
            const auto res = run_cli("--check hci --lh " + std::to_string(bound), csv_input(d));
            CHECK(res.exit_code == 0);
            CHECK(res.out == io::render_record(compute_hci(d, bound)) + "\n");
        }
    }

    SUBCASE("hci --stream matches the offline answer on every prefix") {
        for (int iter = 0; iter < 10; ++iter) {
            const index_t n = rng.range(1, 25);
            const auto d = bench::random_pairs(n, rng, -10, 10, 1, 5);
            const i64 bound = rng.range(0, 10);
            const auto res =
                run_cli("--check hci --stream --lh " + std::to_string(bound), csv_input(d));
            CHECK(res.exit_code == 0);
            std::string expect;
            std::vector<NumberPair<i64>> prefix;
            for (index_t q = 1; q <= n; ++q) {
                prefix.push_back(d.at(q));
                expect += io::render_record(compute_hci(PairSequence<i64>(prefix), bound)) + "\n";
            }
            CHECK(res.out == expect);
        }
    }

    SUBCASE("psei with --check") {
        for (int iter = 0; iter < 25; ++iter) {
            const index_t n = rng.range(1, 40);
            const auto d = bench::random_plain(n, rng, -10, 10);
            const index_t bound = rng.range(1, n);
            const auto res = run_cli("--check psei --ls " + std::to_string(bound), csv_input(d));
            CHECK(res.exit_code == 0);
            CHECK(res.out == io::render_record(compute_psei(d, bound)) + "\n");
        }
    }

    SUBCASE("convolve with --check") {
        for (int iter = 0; iter < 10; ++iter) {
            const index_t n = rng.range(1, 40);
            const auto x = bench::random_vector(n, rng, -50, 50, 10);
            const auto y = bench::random_vector(n, rng, -50, 50, 10);
            std::string xs, ys;
            for (const auto& v : x) xs += io::render_extended(v) + "\n";
            for (const auto& v : y) ys += io::render_extended(v) + "\n";
            const std::string xp = write_temp("rx.txt", xs);
            const std::string yp = write_temp("ry.txt", ys);
            const auto res = run_cli("--check convolve --x '" + xp + "' --y '" + yp + "'", "");
            CHECK(res.exit_code == 0);
            std::string expect;
            for (const auto& v : blocked_convolution(x, y)) expect += io::render_extended(v) + "\n";
            CHECK(res.out == expect);
        }
    }

    SUBCASE("maxsums with --check") {
        for (int iter = 0; iter < 25; ++iter) {
            const index_t n = rng.range(1, 40);
            const auto d = bench::random_plain(n, rng, -10, 10);
            const auto res = run_cli("--check maxsums", csv_input(d));
            CHECK(res.exit_code == 0);
            std::vector<i64> values;
            for (const auto& p : d.pairs()) values.push_back(p.h);
            const auto profile = max_consecutive_sums(values);
            std::string expect;
            for (index_t len = 1; len <= profile.size(); ++len)
                expect += io::format_value(profile.at(len)) + "\n";
            CHECK(res.out == expect);
        }
    }
}
