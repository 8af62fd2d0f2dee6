#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "commands.hpp"
#include "output.hpp"

using namespace reduxwords;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run_cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string data_file(const char* name) {
    const char* dir = std::getenv("REDUXWORDS_TEST_DATA");
    REQUIRE_MESSAGE(dir != nullptr, "REDUXWORDS_TEST_DATA is not set");
    return std::string(dir) + "/" + name;
}

std::vector<std::int64_t> values_of(const std::string& text, cli::Format format) {
    std::vector<std::int64_t> v;
    for (const auto& [n, value] : cli::parse_records(text, format)) v.push_back(value);
    return v;
}

}  // namespace

TEST_CASE("gen") {
    auto r = run_cli({"gen", "tm", "--count", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "011010011001\n");

    r = run_cli({"gen", "pf", "--count", "8"});
    CHECK(r.out == "00100110\n");

    r = run_cli({"gen", "paperfolding", "--start", "5", "--count", "4"});
    CHECK(r.out == "0110\n");

    r = run_cli({"gen", "tm", "--count", "0"});
    CHECK(r.code == 0);
    CHECK(r.out.empty());

    r = run_cli({"gen", "tm", "--count", "3", "--format", "bfile"});
    CHECK(r.out == "1 0\n2 1\n3 1\n");

    r = run_cli({"gen", "nope", "--count", "3"});
    CHECK(r.code == cli::kExitUsage);
}

TEST_CASE("complexity outputs") {
    auto r = run_cli({"complexity", "tm", "red", "--n-max", "8"});
    CHECK(r.code == 0);
    CHECK(values_of(r.out, cli::Format::bfile) == std::vector<std::int64_t>{2, 4, 4, 6, 4, 6, 6, 6});

    r = run_cli({"complexity", "pf", "abred", "--n-max", "6"});
    CHECK(values_of(r.out, cli::Format::bfile) == std::vector<std::int64_t>{2, 3, 5, 3, 4, 3});

    r = run_cli({"complexity", "tm", "factor", "--n-max", "3"});
    CHECK(r.out == "1 2\n2 4\n3 6\n");

    r = run_cli({"complexity", "tm", "factor", "--n-max", "3", "--format", "csv"});
    CHECK(r.out.starts_with("n,value\n"));
}

TEST_CASE("formats carry the same values and output is deterministic") {
    for (const char* kind : {"factor", "abelian", "red", "abred"}) {
        CAPTURE(kind);
        const auto b = run_cli({"complexity", "pf", kind, "--n-max", "40", "--format", "bfile"});
        const auto c = run_cli({"complexity", "pf", kind, "--n-max", "40", "--format", "csv"});
        const auto j = run_cli({"complexity", "pf", kind, "--n-max", "40", "--format", "json"});
        const auto vb = values_of(b.out, cli::Format::bfile);
        CHECK(vb.size() == 40);
        CHECK(vb == values_of(c.out, cli::Format::csv));
        CHECK(vb == values_of(j.out, cli::Format::json));
        CHECK(run_cli({"complexity", "pf", kind, "--n-max", "40", "--format", "json"}).out == j.out);
    }
}

TEST_CASE("extremes") {
    auto r = run_cli({"extremes", "tm", "--n-max", "4"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 0 0\n2 0 1\n3 1 2\n4 1 3\n");
}

TEST_CASE("verify and conjecture exit codes") {
    auto r = run_cli({"verify", "tm_red", "--n-max", "64"});
    CHECK(r.code == 0);
    CHECK(r.out.find("pass") != std::string::npos);

    r = run_cli({"verify", "pf_red", "--n-max", "64"});
    CHECK(r.code == 0);
    CHECK(r.out.find("exception-at-small-n") != std::string::npos);

    r = run_cli({"verify", "abred_f", "--n-max", "32", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"declared_exceptions\":[1]") != std::string::npos);

    r = run_cli({"verify", "no_such_claim", "--n-max", "8"});
    CHECK(r.code == cli::kExitUsage);

    r = run_cli({"conjecture", "conj_mod4_gap", "--n-max", "32"});
    CHECK(r.code == 0);
    CHECK(r.out.find("nonzero gap signs") != std::string::npos);

    r = run_cli({"conjecture", "tm_red", "--n-max", "8"});
    CHECK(r.code == cli::kExitUsage);

    r = run_cli({"claims"});
    CHECK(r.code == 0);
    CHECK(r.out.find("conj_odd_halving  (conjecture)") != std::string::npos);
}

TEST_CASE("not certified") {
    auto r = run_cli({"complexity", "tm", "red", "--n-max", "100", "--window-multiplier", "1",
                      "--max-doublings", "0"});
    CHECK(r.code == cli::kExitNotCertified);
    CHECK(r.err.find("partial results") != std::string::npos);
    CHECK(r.out.empty());

    r = run_cli({"complexity", "tm", "red", "--n-max", "16", "--fixed-window", "200"});
    CHECK(r.code == 0);
}

TEST_CASE("sequence spec files") {
    auto r = run_cli({"gen", data_file("tm_morphic.txt"), "--count", "12"});
    CHECK(r.code == 0);
    CHECK(r.out == "011010011001\n");

    r = run_cli({"complexity", data_file("pf_toeplitz.txt"), "red", "--n-max", "10"});
    CHECK(values_of(r.out, cli::Format::bfile) ==
          std::vector<std::int64_t>{2, 4, 6, 4, 6, 4, 6, 4, 4, 4});

    r = run_cli({"gen", data_file("bad.txt"), "--count", "4"});
    CHECK(r.code == cli::kExitUsage);
    CHECK_FALSE(r.err.empty());
}

TEST_CASE("prefix cap from the environment") {
    ::setenv("REDUXWORDS_MAX_PREFIX", "100", 1);
    auto r = run_cli({"complexity", "tm", "factor", "--n-max", "50"});
    CHECK(r.code == cli::kExitNotCertified);
    r = run_cli({"gen", "tm", "--count", "100"});
    CHECK(r.code == 0);
    ::setenv("REDUXWORDS_MAX_PREFIX", "abc", 1);
    r = run_cli({"gen", "tm", "--count", "1"});
    CHECK(r.code == cli::kExitUsage);
    ::unsetenv("REDUXWORDS_MAX_PREFIX");
}

TEST_CASE("kernel") {
    auto r = run_cli({"kernel", "tm", "--kind", "red", "--depth", "5"});
    CHECK(r.code == 0);
    CHECK(r.out.find("depth 4: rank 4\ndepth 5: rank 4\n") != std::string::npos);

    r = run_cli({"kernel", "--profile", data_file("red_t_profile.b"), "--depth", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("depth 4: rank 4") != std::string::npos);

    r = run_cli({"kernel", "tm", "--kind", "symbols", "--format", "json"});
    CHECK(r.out.find("\"rank_per_depth\":[1,2,2,2,2]") != std::string::npos);

    r = run_cli({"kernel", "--profile", data_file("red_t_profile.b"), "--depth", "5"});
    CHECK(r.code == cli::kExitUsage);  // 1024 values, 2048 needed
}

TEST_CASE("usage errors") {
    CHECK(run_cli({}).code == cli::kExitUsage);
    CHECK(run_cli({"complexity", "tm", "red"}).code == cli::kExitUsage);
    CHECK(run_cli({"complexity", "tm", "bogus", "--n-max", "4"}).code == cli::kExitUsage);
    CHECK(run_cli({"gen", "tm", "--count", "4", "--format", "yaml"}).code == cli::kExitUsage);
    CHECK(run_cli({"--help"}).code == 0);
}
