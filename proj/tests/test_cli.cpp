#include "doctest.h"

#include <cstdlib>
#include <sstream>

#include "json.hpp"

#include "detcount/cli.hpp"
#include "detcount/serialize.hpp"

using namespace detcount;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(std::move(args), out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("count examples") {
    auto r = run({"count", "--ring", "zpe:2^2", "--n", "2", "--det", "2"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "72\n");
    r = run({"count", "--ring", "z:6", "--n", "2", "--det", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out == "144\n");
    r = run({"count", "--ring", "fqu:4,2", "--n", "2", "--det", "0,1"});
    CHECK(r.out == "4800\n");
    r = run({"count", "--ring", "prod:(zpe:2^2;zpe:3^1)", "--n", "2", "--det", "(3|1)"});
    CHECK(r.out == "1152\n");  // 48 * 24
}

TEST_CASE("verify example") {
    const auto r = run({"verify", "--ring", "zpe:2^2", "--n", "2", "--mode", "exhaustive", "--threads", "1"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.find("pass") != std::string::npos);
    CHECK(r.err.find("wall time") != std::string::npos);

    const auto s = run({"verify", "--ring", "z:12", "--n", "2", "--mode", "sampled", "--samples", "20000", "--seed",
                        "9", "--format", "json"});
    CHECK(s.code == kExitOk);
    const auto j = nlohmann::json::parse(s.out);
    CHECK(j.at("verdict") == "pass");
}

TEST_CASE("table, gl, factor and det") {
    auto r = run({"table", "--ring", "zpe:2^2", "--n", "2", "--format", "csv"});
    CHECK(r.code == kExitOk);
    CHECK(r.out.rfind("s,class_size", 0) == 0);
    r = run({"gl", "--ring", "zpe:2^2", "--n", "2"});
    CHECK(r.out == "96\n");
    r = run({"gl", "--ring", "z:6", "--n", "2"});
    CHECK(r.out == "288\n");
    r = run({"factor", "--m", "12"});
    CHECK(r.out == "Z_4 x Z_3\n");
    r = run({"factor", "--m", "12", "--format", "json"});
    CHECK(nlohmann::json::parse(r.out).at("components").size() == 2);
    r = run({"det", "--ring", "zpe:2^2", "--matrix", "1,2;3,1"});
    CHECK(r.out == "3\n");
}

TEST_CASE("json output round trips") {
    const auto r = run({"table", "--ring", "zpe:3^2", "--n", "3", "--format", "json"});
    REQUIRE(r.code == kExitOk);
    const auto table = class_table_from_json(nlohmann::json::parse(r.out));
    CHECK(to_json(table).dump() + "\n" == r.out);
    CHECK(table.grand_total == boost::multiprecision::pow(Count(9), 9));

    const auto c = run({"count", "--ring", "zpe:2^3", "--n", "2", "--det", "4", "--format", "json"});
    const auto j = nlohmann::json::parse(c.out);
    CHECK(j.at("count") == "672");
    CHECK(nlohmann::json::parse(j.dump()) == j);
}

TEST_CASE("identical invocations are byte-identical") {
    const std::vector<std::vector<std::string>> cases{
        {"verify", "--ring", "zpe:2^3", "--n", "2", "--mode", "sampled", "--samples", "5000", "--seed", "4"},
        {"verify", "--ring", "zpe:2^2", "--n", "2", "--format", "json"},
        {"table", "--ring", "z:36", "--n", "3", "--format", "json"},
    };
    for (const auto& args : cases) {
        const auto a = run(args);
        const auto b = run(args);
        CHECK(a.code == b.code);
        CHECK(a.out == b.out);
    }
    // The thread count does not change a sampled result.
    auto args = cases[0];
    args.insert(args.end(), {"--threads", "1"});
    const auto one = run(args);
    args.back() = "3";
    CHECK(run(args).out == one.out);
}

TEST_CASE("usage errors exit 2") {
    const std::vector<std::vector<std::string>> bad{
        {},
        {"frobnicate"},
        {"count", "--ring", "zpe:4^1", "--n", "2", "--det", "1"},
        {"count", "--ring", "zpe:2^2", "--n", "0", "--det", "1"},
        {"count", "--ring", "zpe:2^2", "--n", "2", "--det", "4"},
        {"count", "--ring", "zpe:2^2", "--n", "2"},
        {"count", "--ring", "fqu:6,2", "--n", "2", "--det", "1"},
        {"count", "--ring", "bogus", "--n", "2", "--det", "1"},
        {"table", "--ring", "zpe:2^2", "--n", "2", "--format", "xml"},
        {"verify", "--ring", "zpe:2^2", "--n", "2", "--mode", "guess"},
        {"verify", "--ring", "zpe:2^2", "--n", "2", "--samples", "0", "--mode", "sampled"},
        {"factor", "--m", "1"},
        {"factor", "--m", "abc"},
        {"det", "--ring", "zpe:2^2", "--matrix", "1,2;3"},
    };
    for (const auto& args : bad) {
        CAPTURE(args.size());
        const auto r = run(args);
        CHECK(r.code == kExitUsage);
        CHECK(r.out.empty());
    }
}

TEST_CASE("budget exhaustion exits 3") {
    auto r = run({"verify", "--ring", "zpe:2^3", "--n", "4"});
    CHECK(r.code == kExitBudget);
    CHECK(r.err.find("281474976710656") != std::string::npos);
    r = run({"verify", "--ring", "zpe:2^2", "--n", "2", "--budget", "100"});
    CHECK(r.code == kExitBudget);

    setenv("DETCOUNT_BUDGET", "100", 1);
    r = run({"verify", "--ring", "zpe:2^2", "--n", "2"});
    CHECK(r.code == kExitBudget);
    r = run({"verify", "--ring", "zpe:2^2", "--n", "2", "--budget", "256"});
    CHECK(r.code == kExitOk);
    unsetenv("DETCOUNT_BUDGET");
}
