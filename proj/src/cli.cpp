#include "staircase/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

#include "staircase/error.hpp"

namespace staircase {

namespace {

[[noreturn]] void bad(const std::string& key, const std::string& value, const char* what) {
    throw Error(ErrorCode::ConfigError, "config key '" + key + "' = '" + value + "': " + what);
}

std::string trim(std::string s) {
    auto ws = [](unsigned char c) { return std::isspace(c); };
    s.erase(s.begin(), std::find_if_not(s.begin(), s.end(), ws));
    s.erase(std::find_if_not(s.rbegin(), s.rend(), ws).base(), s.end());
    return s;
}

template <class T>
T parse_int(const std::string& key, const std::string& v) {
    T out{};
    auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
    if (ec != std::errc() || ptr != v.data() + v.size()) bad(key, v, "expected an integer");
    return out;
}

double parse_real(const std::string& key, const std::string& v) {
    if (v.empty()) bad(key, v, "expected a number");
    char* end = nullptr;
    double out = std::strtod(v.c_str(), &end);
    if (end != v.c_str() + v.size()) bad(key, v, "expected a number");
    if (!std::isfinite(out)) bad(key, v, "must be finite");
    return out;
}

double positive(const std::string& key, const std::string& v) {
    double x = parse_real(key, v);
    if (!(x > 0.0)) bad(key, v, "must be positive");
    return x;
}

bool parse_bool(const std::string& key, const std::string& v) {
    if (v == "true" || v == "1") return true;
    if (v == "false" || v == "0") return false;
    bad(key, v, "expected true or false");
}

std::string join_ints(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

VerificationReport failure_report(const std::string& name, const std::exception& e, std::uint64_t seed) {
    auto r = make_report(name, {std::numeric_limits<double>::infinity()}, 0.0, seed, {});
    r.samples = 0;
    r.note = e.what();
    return r;
}

// Runs a suite body; any library error becomes a failed report instead of aborting.
template <class Fn>
void run_guarded(std::vector<VerificationReport>& out, const std::string& name, std::uint64_t seed, Fn&& fn) {
    try {
        for (auto& r : fn()) out.push_back(std::move(r));
    } catch (const std::exception& e) {
        out.push_back(failure_report(name + "_error", e, seed));
    }
}

FdSpec suite_fd(const RunConfig& cfg, FdSpec fallback) {
    if (cfg.has("fd.h")) fallback.h = cfg.stair.fd.h;
    if (cfg.has("fd.scheme")) fallback.scheme = cfg.stair.fd.scheme;
    if (cfg.has("fd.use_declared_symmetry")) fallback.use_declared_symmetry = cfg.stair.fd.use_declared_symmetry;
    return fallback;
}

int samples_or(const RunConfig& cfg, long fallback) { return static_cast<int>(cfg.samples.value_or(fallback)); }

std::vector<VerificationReport> suite(const std::string& name, const RunConfig& cfg) {
    std::vector<VerificationReport> out;
    const std::uint64_t seed = cfg.seed;
    if (name == "group") {
        run_guarded(out, name, seed, [&] { return check_group({samples_or(cfg, 1000), seed}); });
    } else if (name == "contraction") {
        ContractionCheckParams p;
        p.samples = samples_or(cfg, p.samples);
        p.seed = seed;
        p.margin = cfg.margin.value_or(p.margin);
        if (cfg.has("quad.nodes")) p.smooth_nodes = p.or_nodes = cfg.stair.quad.circle_nodes;
        run_guarded(out, name, seed, [&] { return check_contraction(p); });
    } else if (name == "commutators") {
        CommutatorCheckParams p;
        p.samples = samples_or(cfg, p.samples);
        p.seed = seed;
        p.margin = cfg.margin.value_or(p.margin);
        p.fd = suite_fd(cfg, p.fd);
        run_guarded(out, name, seed, [&] { return check_commutators(p); });
    } else if (name == "cup") {
        CupCheckParams p;
        p.samples = samples_or(cfg, p.samples);
        p.seed = seed;
        p.margin = cfg.margin.value_or(p.margin);
        run_guarded(out, name, seed, [&] { return check_cup(p); });
    } else if (name == "solvers") {
        SolverCheckParams p;
        p.samples = samples_or(cfg, p.samples);
        p.seed = seed;
        p.margin = cfg.margin.value_or(p.margin);
        p.fd = suite_fd(cfg, p.fd);
        p.tail = cfg.stair.tail;
        p.line = cfg.stair.line;
        p.scheme = cfg.stair.scheme;
        run_guarded(out, name, seed, [&] { return check_solvers(p); });
    } else if (name == "staircase") {
        StaircaseCheckParams p;
        p.samples = samples_or(cfg, p.samples);
        p.seed = seed;
        p.margin = cfg.margin.value_or(p.margin);
        p.cfg = cfg.stair;
        run_guarded(out, name, seed, [&] { return check_staircase(p); });
    } else {
        throw Error(ErrorCode::ConfigError, "unknown suite '" + name + "'");
    }
    return out;
}

BoundaryFunction named_cocycle(const std::string& name) {
    auto orr = orientation_cocycle();
    if (name == "or_cup_or") return cup(orr, orr);
    if (name == "or_cup_or_cup_or") return cup(cup(orr, orr), orr);
    throw Error(ErrorCode::ConfigError, "unknown cocycle '" + name + "'");
}

// Monotone decrease along a ladder: residual is the largest increase between rungs.
VerificationReport monotone_report(const std::string& name, const std::vector<int>& ladder,
                                   const std::vector<double>& residual, std::uint64_t seed) {
    double worst = 0.0;
    for (std::size_t i = 1; i < residual.size(); ++i) {
        double step = std::isfinite(residual[i]) ? residual[i] - residual[i - 1]
                                                 : std::numeric_limits<double>::infinity();
        worst = std::max(worst, step);
    }
    auto r = make_report(name, {worst}, 0.0, seed, {{"ladder", join_ints(ladder)}});
    r.samples = static_cast<long>(residual.size());
    return r;
}

// Least-squares slope of -log(residual) against log(N).
double fitted_order(const std::vector<int>& ladder, const std::vector<double>& residual) {
    const std::size_t n = ladder.size();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += std::log(ladder[i]);
        my += -std::log(residual[i]);
    }
    mx /= n;
    my /= n;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        double dx = std::log(ladder[i]) - mx;
        sxy += dx * (-std::log(residual[i]) - my);
        sxx += dx * dx;
    }
    return sxy / sxx;
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
    return q + "\"";
}

}  // namespace

const std::vector<std::string> kSuites = {"group", "contraction", "commutators", "cup", "solvers", "staircase", "all"};

void RunConfig::set(const std::string& key, const std::string& value) {
    const std::string& v = value;
    if (key == "seed") seed = parse_int<std::uint64_t>(key, v);
    else if (key == "samples") samples = parse_int<long>(key, v);
    else if (key == "margin") margin = parse_real(key, v);
    else if (key == "out") output_path = v;
    else if (key == "csv") csv_path = v;
    else if (key == "ladder") {
        ladder.clear();
        std::stringstream ss(v);
        std::string item;
        while (std::getline(ss, item, ',')) ladder.push_back(parse_int<int>(key, trim(item)));
    } else if (key == "quad.nodes") stair.quad.circle_nodes = parse_int<int>(key, v);
    else if (key == "quad.rule") stair.quad.rule = parse_rule(v);
    else if (key == "quad.min_arc_nodes") stair.quad.min_arc_nodes = parse_int<int>(key, v);
    else if (key == "fd.h") stair.fd.h = positive(key, v);
    else if (key == "fd.scheme") stair.fd.scheme = parse_scheme(v);
    else if (key == "fd.use_declared_symmetry") stair.fd.use_declared_symmetry = parse_bool(key, v);
    else if (key == "tail.t_max") stair.tail.t_max = positive(key, v);
    else if (key == "tail.nodes") stair.tail.nodes = parse_int<int>(key, v);
    else if (key == "tail.per_panel") stair.tail.per_panel = parse_int<int>(key, v);
    else if (key == "line.nodes_per_unit") stair.line.nodes_per_unit = positive(key, v);
    else if (key == "line.min_nodes") stair.line.min_nodes = parse_int<int>(key, v);
    else if (key == "line.per_panel") stair.line.per_panel = parse_int<int>(key, v);
    else if (key == "scheme.margin") stair.scheme.margin = positive(key, v);
    else if (key == "tabulate") stair.tabulate = parse_bool(key, v);
    else if (key == "table.tol") stair.table.tol = positive(key, v);
    else if (key == "table.degree") stair.table.degree = parse_int<int>(key, v);
    else if (key == "table.max_panels") stair.table.max_panels = parse_int<int>(key, v);
    else throw Error(ErrorCode::ConfigError, "unknown config key '" + key + "'");
    given.insert(key);
}

void RunConfig::validate() const {
    // fd.h only needs to be a positive step here; the (0, 0.1) accuracy range is a
    // precondition of the suites, which report it as a failure.
    StaircaseConfig s = stair;
    if (!(s.fd.h > 0.0 && std::isfinite(s.fd.h)))
        throw Error(ErrorCode::ConfigError, "fd.h must be a positive number");
    s.fd.h = 1e-4;
    s.validate();
    if (samples && *samples < 1) throw Error(ErrorCode::ConfigError, "samples must be at least 1");
    if (margin && !(*margin >= 0.0 && *margin < 1.0)) throw Error(ErrorCode::ConfigError, "margin must be in [0, 1)");
    for (int n : ladder)
        if (n < 8) throw Error(ErrorCode::ConfigError, "ladder entries must be at least 8");
}

ConfigEcho RunConfig::echo() const {
    ConfigEcho e{{"seed", std::to_string(seed)}};
    if (samples) e.emplace_back("samples", std::to_string(*samples));
    if (margin) e.emplace_back("margin", format_double(*margin));
    if (!ladder.empty()) e.emplace_back("ladder", join_ints(ladder));
    for (auto& kv : stair.echo()) e.push_back(kv);
    return e;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": expected key = value");
        std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
        if (key.empty()) throw Error(ErrorCode::ConfigError, "line " + std::to_string(lineno) + ": empty key");
        if (cfg.has(key)) throw Error(ErrorCode::ConfigError, "duplicate config key '" + key + "'");
        cfg.set(key, value);
    }
    return cfg;
}

RunConfig load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::ConfigError, "cannot read config file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_config_text(ss.str());
}

int CommandResult::exit_code() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed; }) ? 0 : 1;
}

CommandResult run_verify(const std::string& suite_name, const RunConfig& cfg) {
    CommandResult res{"verify " + suite_name, cfg.echo(), {}, {}, {}};
    if (suite_name == "all") {
        for (const auto& s : kSuites)
            if (s != "all")
                for (auto& r : suite(s, cfg)) res.reports.push_back(std::move(r));
    } else {
        res.reports = suite(suite_name, cfg);
    }
    return res;
}

CommandResult run_ili_or(const RunConfig& cfg) {
    CommandResult res{"ili-or", cfg.echo(), {}, {"theta", "re", "im", "error"}, {}};
    const int nodes = cfg.has("quad.nodes") ? cfg.stair.quad.circle_nodes : 1024;
    const FdSpec fd = suite_fd(cfg, FdSpec{});
    std::vector<std::array<double, 4>> rows;
    run_guarded(res.reports, "ili_or", cfg.seed, [&] {
        return std::vector{check_ili_or(nodes, fd, samples_or(cfg, 64), cfg.seed, 5e-3, &rows)};
    });
    for (const auto& r : rows)
        res.csv_rows.push_back({format_double(r[0]), format_double(r[1]), format_double(r[2]), format_double(r[3])});
    return res;
}

CommandResult run_primitive(const std::string& cocycle, const RunConfig& cfg) {
    CommandResult res{"primitive " + cocycle, cfg.echo(), {}, {}, {}};
    auto c = named_cocycle(cocycle);
    const int n = c.arity() - 1;
    // sample points live on the arity of c; p sees the first n angles
    for (int j = 0; j <= n; ++j) res.csv_header.push_back("theta" + std::to_string(j));
    for (const char* h : {"p", "residual", "invariance"}) res.csv_header.push_back(h);

    std::vector<PrimitiveSample> rows;
    run_guarded(res.reports, "primitive", cfg.seed, [&] {
        auto p = primitive_P(c, cfg.stair);
        VerifyOptions vo;
        vo.fd = cfg.stair.fd;
        if (n > 4) {
            // R of an arity-5 u is out of reach sample by sample; delta(delta R u) is
            // simplified away and L p is not sampled.
            vo.expand_coboundary = false;
            vo.check_invariance = false;
            vo.record_values = false;
        }
        auto r = verify_primitive(c, p, samples_or(cfg, 200), cfg.seed, cfg.margin.value_or(0.15), vo, &rows);
        r.identity_name = "primitive_" + cocycle;
        r.config_echo = cfg.echo();
        if (vo.record_values) {
            double sup = 0.0;
            for (const auto& row : rows) sup = std::max(sup, std::abs(row.p_value));
            r.note = "estimate_sup = " + format_double(sup);
        } else {
            r.note = "delta p simplified to delta I c; p values and L p not sampled";
        }
        return std::vector{r};
    });
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (double a : row.angles) line.push_back(format_double(a));
        line.push_back(format_double(row.p_value));
        line.push_back(format_double(row.residual));
        line.push_back(format_double(row.invariance));
        res.csv_rows.push_back(std::move(line));
    }
    return res;
}

CommandResult run_convergence(const std::string& target, const RunConfig& cfg) {
    CommandResult res{"convergence " + target, cfg.echo(), {}, {}, {}};
    std::vector<int> ladder = cfg.ladder;
    std::vector<double> residual;
    if (target == "contraction") {
        if (ladder.empty()) ladder = {64, 128, 256, 512};
        res.csv_header = {"nodes", "residual"};
        for (int nodes : ladder) {
            auto r = check_contraction_quadrature(nodes, samples_or(cfg, 100), cfg.seed, cfg.margin.value_or(0.1));
            residual.push_back(r.sup_residual);
            res.csv_rows.push_back({std::to_string(nodes), format_double(r.sup_residual)});
            res.reports.push_back(std::move(r));
        }
        res.reports.push_back(monotone_report("contraction_ladder_monotone", ladder, residual, cfg.seed));
    } else if (target == "ili_or") {
        if (ladder.empty()) ladder = {128, 256, 512, 1024};
        res.csv_header = {"nodes", "residual"};
        const FdSpec fd = suite_fd(cfg, FdSpec{});
        for (int nodes : ladder) {
            // only the finest rung is judged against the 5e-3 budget
            double budget = nodes == ladder.back() ? 5e-3 : std::numeric_limits<double>::infinity();
            auto r = check_ili_or(nodes, fd, samples_or(cfg, 64), cfg.seed, budget);
            residual.push_back(r.sup_residual);
            res.csv_rows.push_back({std::to_string(nodes), format_double(r.sup_residual)});
            res.reports.push_back(std::move(r));
        }
        res.reports.push_back(monotone_report("ili_or_ladder_monotone", ladder, residual, cfg.seed));
        if (ladder.size() >= 2) {
            double order = fitted_order(ladder, residual);
            auto r = make_report("ili_or_empirical_order", {std::max(0.0, 0.9 - order)}, 0.0, cfg.seed,
                                 {{"ladder", join_ints(ladder)}});
            r.note = "fitted order = " + format_double(order) + " (required >= 0.9)";
            res.reports.push_back(std::move(r));
        }
    } else if (target == "primitive") {
        if (ladder.empty()) ladder = {16, 24, 32};
        res.csv_header = {"nodes", "residual", "delta_residual", "invariance_residual"};
        auto c = named_cocycle("or_cup_or");
        for (int nodes : ladder) {
            RunConfig rung = cfg;
            rung.stair.quad.circle_nodes = nodes;
            double delta = std::numeric_limits<double>::infinity(), inv = delta;
            run_guarded(res.reports, "primitive_rung", cfg.seed, [&] {
                auto st = staircase_stages(c, rung.stair);
                VerifyOptions vo;
                vo.fd = rung.stair.fd;
                auto r = verify_primitive(c, st.p, samples_or(cfg, 10), cfg.seed, cfg.margin.value_or(0.15), vo);
                r.identity_name = "primitive_or_cup_or_N" + std::to_string(nodes);
                r.config_echo = rung.stair.echo();
                delta = r.sup_residual;
                inv = r.sup_invariance.value_or(0.0);
                return std::vector{r};
            });
            residual.push_back(std::max(delta, inv));
            res.csv_rows.push_back({std::to_string(nodes), format_double(residual.back()), format_double(delta),
                                    format_double(inv)});
        }
        res.reports.push_back(monotone_report("primitive_ladder_monotone", ladder, residual, cfg.seed));
    } else {
        throw Error(ErrorCode::ConfigError, "unknown convergence target '" + target + "'");
    }
    return res;
}

nlohmann::ordered_json to_json(const CommandResult& r) {
    nlohmann::ordered_json j;
    j["schema"] = 1;
    j["command"] = r.command;
    j["config_echo"] = to_json(r.config_echo);
    j["reports"] = nlohmann::ordered_json::array();
    for (const auto& rep : r.reports) j["reports"].push_back(to_json(rep));
    return j;
}

std::string to_csv(const CommandResult& r) {
    std::string out;
    auto emit = [&](const std::vector<std::string>& row) {
        for (std::size_t i = 0; i < row.size(); ++i) out += (i ? "," : "") + csv_field(row[i]);
        out += "\r\n";
    };
    emit(r.csv_header);
    for (const auto& row : r.csv_rows) emit(row);
    return out;
}

}  // namespace staircase
