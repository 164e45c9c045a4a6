// staircase: command-line front end for the verification suites.
#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "staircase/cli.hpp"
#include "staircase/error.hpp"

using namespace staircase;

namespace {

struct Common {
    std::string config, out, csv;
    std::optional<std::uint64_t> seed;
    std::optional<long> samples;
};

void add_common(CLI::App* sub, Common& c) {
    sub->add_option("--config", c.config, "flat key = value config file");
    sub->add_option("--seed", c.seed, "RNG seed (u64)");
    sub->add_option("--samples", c.samples, "number of samples");
    sub->add_option("--out", c.out, "JSON report path (default: stdout)");
    sub->add_option("--csv", c.csv, "CSV output path");
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw Error(ErrorCode::ConfigError, "cannot write '" + path + "'");
    f << text;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Boundary cochain operators on the circle and the staircase primitive"};
    app.require_subcommand(1);
    Common common;
    std::string suite, cocycle, target;

    auto* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("suite", suite)->required()->check(CLI::IsMember(kSuites));
    auto* ili = app.add_subcommand("ili-or", "closed-form check of I L I or");
    auto* prim = app.add_subcommand("primitive", "build and verify the primitive of a cocycle");
    prim->add_option("cocycle", cocycle)->required()->check(CLI::IsMember({"or_cup_or", "or_cup_or_cup_or"}));
    auto* conv = app.add_subcommand("convergence", "residual along a ladder of node counts");
    conv->add_option("target", target)->required()->check(CLI::IsMember({"contraction", "ili_or", "primitive"}));
    for (auto* sub : {verify, ili, prim, conv}) add_common(sub, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    CommandResult res;
    RunConfig cfg;
    try {
        if (!common.config.empty()) cfg = load_config_file(common.config);
        if (common.seed) cfg.set("seed", std::to_string(*common.seed));
        if (common.samples) cfg.set("samples", std::to_string(*common.samples));
        if (!common.out.empty()) cfg.output_path = common.out;
        if (!common.csv.empty()) cfg.csv_path = common.csv;
        cfg.validate();

        if (*verify) res = run_verify(suite, cfg);
        else if (*ili) res = run_ili_or(cfg);
        else if (*prim) res = run_primitive(cocycle, cfg);
        else res = run_convergence(target, cfg);

        std::string json = to_json(res).dump(2) + "\n";
        if (cfg.output_path.empty()) std::cout << json;
        else write_file(cfg.output_path, json);
        if (!cfg.csv_path.empty()) write_file(cfg.csv_path, to_csv(res));
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return e.code() == ErrorCode::ConfigError ? 2 : 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }

    for (const auto& r : res.reports)
        std::fprintf(stderr, "%-4s %-40s sup %-12.4g budget %.3g\n", r.passed ? "ok" : "FAIL",
                     r.identity_name.c_str(), r.sup_residual, r.budget);
    return res.exit_code();
}
