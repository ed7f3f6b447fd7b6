#include "osctail/quadrature.hpp"

#include "osctail/errors.hpp"
#include "osctail/gauss_kronrod.hpp"

#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace osctail {

void QuadratureConfig::validate() const
{
    if (!(rel_tol > 0.0 && rel_tol < 1.0))
        throw DomainError("QuadratureConfig: rel_tol must lie in (0, 1)");
    if (nodes_per_panel < 3 || nodes_per_panel % 2 == 0)
        throw DomainError("QuadratureConfig: nodes_per_panel must be odd and >= 3");
    if (max_subdivisions_per_cycle < 1
        || !std::has_single_bit(static_cast<unsigned>(max_subdivisions_per_cycle)))
        throw DomainError("QuadratureConfig: max_subdivisions_per_cycle must be a power of two");
}

std::vector<double> cycle_breakpoints(double a, double b, const OscillatoryKernel& kernel)
{
    if (!std::isfinite(a) || !std::isfinite(b))
        throw DomainError("cycle_breakpoints: limits must be finite");
    if (!(a < b))
        throw DomainError("cycle_breakpoints: requires a < b");

    const double spacing = kernel.half_period();
    const double shift = kernel.kind() == KernelKind::Cosine ? 0.5 : 0.0;
    // Zeros closer than this to an end point would only create slivers.
    const double sliver = 16.0 * std::numeric_limits<double>::epsilon()
                          * std::max({std::abs(a), std::abs(b), spacing});

    std::vector<double> points{a};
    auto k = static_cast<std::int64_t>(std::floor(a / spacing - shift));
    for (;; ++k) {
        const double zero = (static_cast<double>(k) + shift) * std::numbers::pi / kernel.omega();
        if (zero <= a + sliver)
            continue;
        if (zero >= b - sliver)
            break;
        points.push_back(zero);
    }
    points.push_back(b);
    return points;
}

namespace {

struct RuleEstimate {
    double kronrod = 0.0;
    double gauss = 0.0;
    double absolute = 0.0;
};

class PanelIntegrator {
public:
    PanelIntegrator(const RealFunction& g, const QuadratureConfig& cfg)
        : g_(g), cfg_(cfg), rule_(kronrod_rule(cfg.nodes_per_panel)),
          max_depth_(std::countr_zero(static_cast<unsigned>(cfg.max_subdivisions_per_cycle)))
    {
    }

    void panel(double lo, double hi)
    {
        // Abscissa rounding perturbs g by about eps |x| / (panel width) relative.
        conditioning_ = 1.0 + std::max(std::abs(lo), std::abs(hi)) / (hi - lo);
        refine(lo, hi, 0, apply(lo, hi));
    }

    PanelSum result() const { return {sum_.value(), error_.value(), evaluations_}; }
    bool converged() const noexcept { return converged_; }

private:
    RuleEstimate apply(double lo, double hi)
    {
        const double centre = 0.5 * (lo + hi);
        const double half = 0.5 * (hi - lo);
        RuleEstimate e;
        for (int i = 0; i < rule_.size(); ++i) {
            const auto idx = static_cast<std::size_t>(i);
            const double x = centre + half * rule_.nodes[idx];
            const double v = g_(x);
            if (!std::isfinite(v)) {
                std::ostringstream msg;
                msg << "integrand is not finite at x = " << x;
                throw EvaluationError(msg.str(), x);
            }
            e.kronrod += rule_.kronrod_weights[idx] * v;
            e.gauss += rule_.gauss_weights[idx] * v;
            e.absolute += rule_.kronrod_weights[idx] * std::abs(v);
        }
        evaluations_ += rule_.size();
        e.kronrod *= half;
        e.gauss *= half;
        e.absolute *= half;
        return e;
    }

    void refine(double lo, double hi, int depth, const RuleEstimate& e)
    {
        const double err = std::abs(e.kronrod - e.gauss);
        const double noise = 50.0 * std::numeric_limits<double>::epsilon() * conditioning_;
        const double tol = std::max(cfg_.rel_tol, noise) * e.absolute;
        if (err <= tol || depth >= max_depth_) {
            if (err > tol)
                converged_ = false;
            sum_.add(e.kronrod);
            error_.add(err);
            return;
        }
        const double mid = 0.5 * (lo + hi);
        const RuleEstimate left = apply(lo, mid);
        const RuleEstimate right = apply(mid, hi);
        refine(lo, mid, depth + 1, left);
        refine(mid, hi, depth + 1, right);
    }

    const RealFunction& g_;
    const QuadratureConfig& cfg_;
    const KronrodRule& rule_;
    int max_depth_;
    double conditioning_ = 1.0;
    CompensatedSum sum_;
    CompensatedSum error_;
    std::int64_t evaluations_ = 0;
    bool converged_ = true;
};

} // namespace

PanelSum integrate_panels(const RealFunction& g, std::span<const double> breakpoints,
                          const QuadratureConfig& cfg)
{
    cfg.validate();
    if (breakpoints.size() < 2)
        throw DomainError("integrate_panels: need at least two breakpoints");

    PanelIntegrator integrator(g, cfg);
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        if (!(breakpoints[i] < breakpoints[i + 1]))
            throw DomainError("integrate_panels: breakpoints must be strictly increasing");
        integrator.panel(breakpoints[i], breakpoints[i + 1]);
    }
    const PanelSum out = integrator.result();
    if (!integrator.converged())
        throw ConvergenceError("quadrature tolerance not reached at the subdivision limit",
                               out.value, out.value - out.error_estimate,
                               out.value + out.error_estimate);
    return out;
}

IntegralResult integrate_finite(const Integrand& f, const OscillatoryKernel& kernel, double a,
                                double b, const QuadratureConfig& cfg)
{
    const std::vector<double> points = cycle_breakpoints(a, b, kernel);
    const RealFunction weighted = [&f, &kernel](double x) {
        const double fx = f(x);
        if (!std::isfinite(fx)) {
            std::ostringstream msg;
            msg << "integrand '" << f.name() << "' is not finite at x = " << x;
            throw EvaluationError(msg.str(), x);
        }
        return fx * kernel(x);
    };
    const PanelSum s = integrate_panels(weighted, points, cfg);

    IntegralResult r;
    r.finite_part = s.value;
    r.tail_correction = 0.0;
    r.total = r.finite_part + r.tail_correction;
    r.error_estimate = s.error_estimate;
    r.evaluations = s.evaluations;
    r.b_used = b;
    return r;
}

} // namespace osctail
