#include "hcont/baire.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace hcont {

CellIntervalFunction lower_baire(const CellIntervalFunction& f)
{
    const auto& k = f.complex();
    return CellIntervalFunction::generate(f.complex_ptr(), [&](CellId c) {
        ExtReal m = ExtReal::pos_inf();
        for (auto d : k.star(c)) {
            m = min(m, f[d].lo());
        }
        return Interval(m);
    });
}

CellIntervalFunction upper_baire(const CellIntervalFunction& f)
{
    const auto& k = f.complex();
    return CellIntervalFunction::generate(f.complex_ptr(), [&](CellId c) {
        ExtReal m = ExtReal::neg_inf();
        for (auto d : k.star(c)) {
            m = max(m, f[d].hi());
        }
        return Interval(m);
    });
}

CellIntervalFunction graph_completion(const CellIntervalFunction& f)
{
    const auto lower = lower_baire(f);
    const auto upper = upper_baire(f);
    return CellIntervalFunction::generate(f.complex_ptr(),
                                          [&](CellId c) { return Interval(lower[c].lo(), upper[c].lo()); });
}

BaireOperator parse_operator(std::string_view name)
{
    if (name == "I") return BaireOperator::lower;
    if (name == "S") return BaireOperator::upper;
    if (name == "F") return BaireOperator::completion;
    throw std::invalid_argument("unknown operator '" + std::string(name) + "' (expected I, S or F)");
}

std::string_view operator_name(BaireOperator op) noexcept
{
    switch (op) {
    case BaireOperator::lower: return "I";
    case BaireOperator::upper: return "S";
    case BaireOperator::completion: return "F";
    }
    return "?";
}

CellIntervalFunction apply(BaireOperator op, const CellIntervalFunction& f)
{
    switch (op) {
    case BaireOperator::lower: return lower_baire(f);
    case BaireOperator::upper: return upper_baire(f);
    case BaireOperator::completion: return graph_completion(f);
    }
    throw std::logic_error("apply: unhandled operator");
}

namespace {

std::vector<std::vector<double>> sample_offsets(int dimension, int samples)
{
    std::vector<std::vector<double>> out;
    if (dimension == 1) {
        const int m = samples / 2;
        for (int j = 1; j <= m; ++j) {
            const double s = static_cast<double>(j) / m;
            out.push_back({-s});
            out.push_back({s});
        }
        return out;
    }
    const int angles = samples / 4;
    for (int a = 0; a < angles; ++a) {
        const double theta = 2.0 * std::numbers::pi * a / angles;
        for (int q = 1; q <= 4; ++q) {
            const double s = q / 4.0;
            out.push_back({s * std::cos(theta), s * std::sin(theta)});
        }
    }
    return out;
}

bool agree(ExtReal a, ExtReal b, double tol)
{
    if (a == b) return true;
    if (!a.is_finite() || !b.is_finite()) return false;
    return std::abs(a.value() - b.value()) <= tol;
}

} // namespace

BaireEstimate numeric_baire_estimate(const AnalyticIntervalFunction& f, std::span<const double> point,
                                     const EstimatorOptions& options)
{
    const int dim = f.dimension();
    if (!(options.r0 > 0.0) || !std::isfinite(options.r0)) {
        throw std::invalid_argument("numeric_baire_estimate: r0 must be positive and finite");
    }
    if (options.levels < 2) {
        throw std::invalid_argument("numeric_baire_estimate: levels must be at least 2");
    }
    if (options.samples_per_radius <= 0 || options.samples_per_radius % (dim == 1 ? 2 : 4) != 0) {
        throw std::invalid_argument("numeric_baire_estimate: samples_per_radius must be a positive multiple of " +
                                    std::to_string(dim == 1 ? 2 : 4));
    }
    if (!f.in_domain(point)) {
        throw std::domain_error("numeric_baire_estimate: point outside the domain of " + f.name());
    }

    const Interval at_point = f(point);
    const auto offsets = sample_offsets(dim, options.samples_per_radius);

    BaireEstimate est;
    est.point.assign(point.begin(), point.end());
    est.samples_per_radius = options.samples_per_radius;
    est.lower = ExtReal::neg_inf();
    est.upper = ExtReal::pos_inf();

    ExtReal prev_inf, prev_sup, last_inf, last_sup;
    std::vector<double> y(point.size());
    for (int k = 0; k < options.levels; ++k) {
        const double r = std::ldexp(options.r0, -k);
        ExtReal inf = at_point.lo();
        ExtReal sup = at_point.hi();
        for (const auto& off : offsets) {
            for (std::size_t a = 0; a < y.size(); ++a) {
                y[a] = point[a] + r * off[a];
            }
            if (!f.in_domain(y)) {
                continue;
            }
            const Interval v = f(y);
            inf = min(inf, v.lo());
            sup = max(sup, v.hi());
        }
        est.radii_used.push_back(r);
        est.lower = max(est.lower, inf);
        est.upper = min(est.upper, sup);
        prev_inf = last_inf;
        prev_sup = last_sup;
        last_inf = inf;
        last_sup = sup;
    }
    est.converged = agree(prev_inf, last_inf, options.tolerance) && agree(prev_sup, last_sup, options.tolerance);
    return est;
}

} // namespace hcont
