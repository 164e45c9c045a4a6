#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "staircase/checks.hpp"

namespace staircase {

// Flat `key = value` run configuration. Keys set explicitly are remembered so suites
// can fall back to their own defaults for the rest.
struct RunConfig {
    StaircaseConfig stair;
    std::uint64_t seed = 1;
    std::optional<long> samples;
    std::optional<double> margin;
    std::vector<int> ladder;
    Execution execution = Execution::Parallel;
    std::string output_path;
    std::string csv_path;
    std::set<std::string> given;

    bool has(const std::string& key) const { return given.count(key) > 0; }
    void set(const std::string& key, const std::string& value);  // throws ConfigError
    void validate() const;
    ConfigEcho echo() const;
};

RunConfig parse_config_text(const std::string& text);
RunConfig load_config_file(const std::string& path);

struct CommandResult {
    std::string command;
    ConfigEcho config_echo;
    std::vector<VerificationReport> reports;
    std::vector<std::string> csv_header;
    std::vector<std::vector<std::string>> csv_rows;

    int exit_code() const;
};

extern const std::vector<std::string> kSuites;

CommandResult run_verify(const std::string& suite, const RunConfig& cfg);
CommandResult run_ili_or(const RunConfig& cfg);
CommandResult run_primitive(const std::string& cocycle, const RunConfig& cfg);
CommandResult run_convergence(const std::string& target, const RunConfig& cfg);

nlohmann::ordered_json to_json(const CommandResult& r);
std::string to_csv(const CommandResult& r);

}  // namespace staircase
