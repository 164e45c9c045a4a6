#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace staircase {

using ConfigEcho = std::vector<std::pair<std::string, std::string>>;

struct VerificationReport {
    std::string identity_name;
    long samples = 0;
    double sup_residual = 0.0;
    double mean_residual = 0.0;
    std::uint64_t seed = 0;
    ConfigEcho config_echo;
    double budget = 0.0;
    bool passed = false;
    // Set by verify_primitive: statistics of |L p|.
    std::optional<double> sup_invariance;
    std::optional<double> mean_invariance;
    std::optional<double> invariance_budget;
    std::string note;
};

// Collects residuals and fills sup/mean; passed iff sup <= budget and all are finite.
VerificationReport make_report(std::string name, const std::vector<double>& residuals, double budget,
                               std::uint64_t seed, ConfigEcho echo);

nlohmann::ordered_json to_json(const VerificationReport& r);
nlohmann::ordered_json to_json(const ConfigEcho& echo);

std::string format_double(double v);

}  // namespace staircase
