#include "staircase/tabulation.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "staircase/error.hpp"
#include "staircase/parallel.hpp"

namespace staircase {

void TabulationSpec::validate() const {
    if (!(tol > 0.0)) throw Error(ErrorCode::ConfigError, "tabulation tol must be positive");
    if (degree < 4 || degree > 64) throw Error(ErrorCode::ConfigError, "tabulation degree must be in [4, 64]");
    if (initial_panels < 1) throw Error(ErrorCode::ConfigError, "tabulation needs at least one panel");
    if (!(min_width > 0.0)) throw Error(ErrorCode::ConfigError, "tabulation min_width must be positive");
}

namespace {

struct Panel {
    double a, b;
    std::vector<cplx> coef;
};

class TableNode final : public Node {
public:
    TableNode(std::vector<Panel> panels, cplx diagonal, int mu)
        : panels_(std::move(panels)), diagonal_(diagonal), mu_(mu) {
        starts_.reserve(panels_.size());
        for (const auto& p : panels_) starts_.push_back(p.a);
    }

    cplx eval(Angles z) const override {
        double d = reduce_angle(z[1] - z[0]);
        cplx v;
        if (d < kCoincidence || kTwoPi - d < kCoincidence) {
            v = diagonal_;
        } else {
            auto it = std::upper_bound(starts_.begin(), starts_.end(), d);
            std::size_t i = it == starts_.begin() ? 0 : static_cast<std::size_t>(it - starts_.begin()) - 1;
            v = clenshaw(panels_[i], d);
        }
        return mu_ == 0 ? v : std::polar(1.0, mu_ * z[0]) * v;
    }

private:
    static cplx clenshaw(const Panel& p, double d) {
        double x = std::clamp((2.0 * d - p.a - p.b) / (p.b - p.a), -1.0, 1.0);
        cplx b1 = 0.0, b2 = 0.0;
        for (std::size_t k = p.coef.size() - 1; k >= 1; --k) {
            cplx t = 2.0 * x * b1 - b2 + p.coef[k];
            b2 = b1;
            b1 = t;
        }
        return x * b1 - b2 + p.coef[0];
    }

    std::vector<Panel> panels_;
    std::vector<double> starts_;
    cplx diagonal_;
    int mu_;
};

// Interior Chebyshev nodes: the panel endpoints may sit on the diagonal.
double chebyshev_node(int j, int count) { return std::cos(std::numbers::pi * (j + 0.5) / count); }

std::vector<cplx> chebyshev_coefficients(const std::vector<cplx>& vals) {
    const int count = static_cast<int>(vals.size());
    std::vector<cplx> c(count);
    for (int k = 0; k < count; ++k) {
        cplx s = 0.0;
        for (int j = 0; j < count; ++j) s += vals[j] * std::cos(std::numbers::pi * k * (j + 0.5) / count);
        c[k] = s * (2.0 / count);
    }
    c[0] *= 0.5;
    return c;
}

}  // namespace

BoundaryFunction tabulate_k_reduced(const BoundaryFunction& f, const TabulationSpec& spec,
                                    TabulationStats* stats) {
    spec.validate();
    if (f.arity() != 2) throw Error(ErrorCode::ArityError, "tabulation needs an arity-2 function");
    int mu = 0;
    if (f.weight()) mu = *f.weight();
    else if (f.codomain().complex) throw Error(ErrorCode::ArityError, "tabulation needs a declared weight");
    if (f.is_zero()) return f;

    const int n = spec.degree;
    auto reduced = [&](double d) {
        double z[2] = {0.0, d};
        return f(Angles(z, 2));
    };

    struct Pending {
        double a, b;
        double parent_tail;
    };
    std::vector<Pending> pending;
    for (int i = 0; i < spec.initial_panels; ++i)
        pending.push_back({kTwoPi * i / spec.initial_panels, kTwoPi * (i + 1) / spec.initial_panels,
                           std::numeric_limits<double>::infinity()});

    std::vector<Panel> done;
    double scale = 1.0;
    long evaluations = 0;
    while (!pending.empty()) {
        const std::size_t np = pending.size();
        std::vector<cplx> vals(np * (n + 1));
        parallel_for(static_cast<long>(vals.size()), [&](long idx) {
            std::size_t p = static_cast<std::size_t>(idx) / (n + 1);
            int j = static_cast<int>(idx % (n + 1));
            auto [a, b, parent] = pending[p];
            double x = chebyshev_node(j, n + 1);
            vals[idx] = reduced(0.5 * (a + b) + 0.5 * (b - a) * x);
        });
        evaluations += static_cast<long>(vals.size());
        for (const auto& v : vals) {
            if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
                throw Error(ErrorCode::NonFiniteSample, "non-finite value while tabulating");
            scale = std::max(scale, std::abs(v));
        }
        std::vector<Pending> next;
        for (std::size_t p = 0; p < np; ++p) {
            std::vector<cplx> pv(vals.begin() + p * (n + 1), vals.begin() + (p + 1) * (n + 1));
            auto coef = chebyshev_coefficients(pv);
            auto [a, b, parent] = pending[p];
            double tail = std::abs(coef[n]) + std::abs(coef[n - 1]);
            bool converged = tail <= spec.tol * scale;
            // Bisection shrinks the tail of a smooth or log-singular panel geometrically; a tail
            // that does not shrink is sampling noise or a jump, and refining cannot help.
            bool stalled = tail > 0.7 * parent;
            bool forced = (b - a) < 2.0 * spec.min_width ||
                          static_cast<int>(done.size() + next.size() + np) >= spec.max_panels;
            if (converged || stalled || forced) {
                done.push_back({a, b, std::move(coef)});
            } else {
                double m = 0.5 * (a + b);
                next.push_back({a, m, tail});
                next.push_back({m, b, tail});
            }
        }
        pending = std::move(next);
    }
    std::sort(done.begin(), done.end(), [](const Panel& x, const Panel& y) { return x.a < y.a; });
    double z0[2] = {0.0, 0.0};
    cplx diagonal = f(Angles(z0, 2));
    if (stats) {
        stats->panels = static_cast<int>(done.size());
        stats->evaluations = evaluations + 1;
    }
    Traits t = f.traits();
    return BoundaryFunction(2, f.codomain(), std::make_shared<TableNode>(std::move(done), diagonal, mu), t);
}

}  // namespace staircase
