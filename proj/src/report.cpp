#include "staircase/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace staircase {

VerificationReport make_report(std::string name, const std::vector<double>& residuals, double budget,
                               std::uint64_t seed, ConfigEcho echo) {
    VerificationReport r;
    r.identity_name = std::move(name);
    r.samples = static_cast<long>(residuals.size());
    r.seed = seed;
    r.config_echo = std::move(echo);
    r.budget = budget;
    bool finite = true;
    double sum = 0.0;
    for (double v : residuals) {
        if (!std::isfinite(v)) finite = false;
        r.sup_residual = std::max(r.sup_residual, v);
        sum += v;
    }
    if (!finite) r.sup_residual = r.mean_residual = std::numeric_limits<double>::infinity();
    else if (!residuals.empty()) r.mean_residual = std::min(sum / residuals.size(), r.sup_residual);
    r.passed = finite && r.sup_residual <= budget;
    return r;
}

std::string format_double(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

nlohmann::ordered_json number(double v) {
    if (std::isfinite(v)) return v;
    return format_double(v);
}

}  // namespace

nlohmann::ordered_json to_json(const ConfigEcho& echo) {
    nlohmann::ordered_json j = nlohmann::ordered_json::object();
    for (const auto& [k, v] : echo) j[k] = v;
    return j;
}

nlohmann::ordered_json to_json(const VerificationReport& r) {
    nlohmann::ordered_json j;
    j["identity_name"] = r.identity_name;
    j["samples"] = r.samples;
    j["sup_residual"] = number(r.sup_residual);
    j["mean_residual"] = number(r.mean_residual);
    j["seed"] = r.seed;
    j["config_echo"] = to_json(r.config_echo);
    j["budget"] = number(r.budget);
    j["passed"] = r.passed;
    if (r.sup_invariance) j["sup_invariance_residual"] = number(*r.sup_invariance);
    if (r.mean_invariance) j["mean_invariance_residual"] = number(*r.mean_invariance);
    if (r.invariance_budget) j["invariance_budget"] = number(*r.invariance_budget);
    if (!r.note.empty()) j["note"] = r.note;
    return j;
}

}  // namespace staircase
