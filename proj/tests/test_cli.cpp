#include <doctest.h>

#include "staircase/cli.hpp"
#include "staircase/error.hpp"

using namespace staircase;

namespace {
ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::PreconditionViolated;
}
}  // namespace

TEST_CASE("config parsing") {
    auto cfg = parse_config_text(
        "# comment\n"
        "seed = 99\n"
        "  quad.nodes=64   # trailing comment\n"
        "\n"
        "fd.h = 2e-4\n"
        "quad.rule = trapezoid\n"
        "ladder = 16, 32\n"
        "tabulate = false\n");
    CHECK(cfg.seed == 99);
    CHECK(cfg.stair.quad.circle_nodes == 64);
    CHECK(cfg.stair.quad.rule == CircleRule::Trapezoid);
    CHECK(cfg.stair.fd.h == 2e-4);
    CHECK(cfg.ladder == std::vector<int>{16, 32});
    CHECK_FALSE(cfg.stair.tabulate);
    CHECK(cfg.has("fd.h"));
    CHECK_FALSE(cfg.has("samples"));
    CHECK_NOTHROW(cfg.validate());

    CHECK(code_of([] { parse_config_text("bogus = 1\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("seed 1\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("seed = 1\nseed = 2\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("fd.h = abc\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("fd.h = -1\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("quad.rule = simpson\n"); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("samples = 0\n").validate(); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("quad.nodes = 4\n").validate(); }) == ErrorCode::ConfigError);
    CHECK(code_of([] { parse_config_text("tail.t_max = 5\n").validate(); }) == ErrorCode::ConfigError);
    // an absurd step loads; the suites judge it
    CHECK_NOTHROW(parse_config_text("fd.h = 0.5\n").validate());
}

TEST_CASE("verify exit codes and report schema") {
    RunConfig cfg;
    cfg.samples = 50;
    auto res = run_verify("group", cfg);
    CHECK(res.exit_code() == 0);
    auto j = to_json(res);
    CHECK(j["schema"] == 1);
    CHECK(j["command"] == "verify group");
    CHECK(j["reports"].size() == res.reports.size());
    CHECK(j["reports"][0].contains("sup_residual"));
    CHECK(j["config_echo"]["seed"] == "1");

    auto bad = parse_config_text("fd.h = 0.5\nsamples = 10\n");
    CHECK(run_verify("commutators", bad).exit_code() == 1);
    auto st = run_verify("staircase", bad);
    CHECK(st.exit_code() == 1);
    CHECK(st.reports.back().identity_name == "staircase_error");
}

TEST_CASE("reports are deterministic") {
    RunConfig cfg;
    cfg.samples = 30;
    cfg.seed = 17;
    CHECK(to_json(run_verify("cup", cfg)).dump() == to_json(run_verify("cup", cfg)).dump());
}

TEST_CASE("convergence CSV") {
    RunConfig cfg;
    cfg.samples = 50;
    auto res = run_convergence("contraction", cfg);
    CHECK(res.exit_code() == 0);
    CHECK(res.csv_header == std::vector<std::string>{"nodes", "residual"});
    CHECK(res.csv_rows.size() == 4);
    auto csv = to_csv(res);
    CHECK(csv.rfind("nodes,residual\r\n", 0) == 0);
}

TEST_CASE("primitive CSV has one row per sample") {
    auto cfg = parse_config_text("quad.nodes = 16\nsamples = 3\n");
    auto res = run_primitive("or_cup_or", cfg);
    CHECK(res.exit_code() == 0);
    REQUIRE(res.csv_rows.size() == 3);
    CHECK(res.csv_header.size() == 8);
    CHECK(res.csv_header[5] == "p");
    for (const auto& row : res.csv_rows) CHECK(row.size() == 8);
}

TEST_CASE("csv quoting") {
    CommandResult r;
    r.csv_header = {"a", "b"};
    r.csv_rows = {{"x,y", "say \"hi\""}};
    CHECK(to_csv(r) == "a,b\r\n\"x,y\",\"say \"\"hi\"\"\"\r\n");
}
