#include "hcont/gallery.hpp"

#include "hcont/io.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace hcont {

namespace {

ComplexPtr origin_complex()
{
    static const ComplexPtr complex = build_complex(1, {{0.0}});
    return complex;
}

const Interval unit_band{-1.0, 1.0};

double segment_distance(double t, double x, double t0, double x0, double t1, double x1)
{
    const double dt = t1 - t0;
    const double dx = x1 - x0;
    const double s = std::clamp(((t - t0) * dt + (x - x0) * dx) / (dt * dt + dx * dx), 0.0, 1.0);
    return std::hypot(t - (t0 + s * dt), x - (x0 + s * dx));
}

// Distance to the shock ray x = (t-1)/2, t >= 1, and to the kink lines of
// the compression fan, x = t - 1 and x = 0 for 0 <= t <= 1.
double shock_nonsmooth_distance(double t, double x)
{
    const double along = std::max(0.0, ((t - 1.0) + 0.5 * x) / 1.25);
    const double ray = std::hypot(t - (1.0 + along), x - 0.5 * along);
    const double fan_edge = segment_distance(t, x, 0.0, -1.0, 1.0, 0.0);
    const double fan_axis = segment_distance(t, x, 0.0, 0.0, 1.0, 0.0);
    return std::min({ray, fan_edge, fan_axis});
}

} // namespace

CellIntervalFunction make_step(ExtReal a, ExtReal b, ExtReal c)
{
    return {origin_complex(), {Interval(a), Interval(b), Interval(c)}};
}

CellIntervalFunction make_interval_step(ExtReal a, const Interval& bc, ExtReal d)
{
    return {origin_complex(), {Interval(a), bc, Interval(d)}};
}

CellIntervalFunction make_alpha() { return make_interval_step(-1.0, unit_band, 1.0); }

Interval alpha_eval(double s)
{
    if (std::isnan(s)) {
        throw std::invalid_argument("alpha: NaN argument");
    }
    if (s < 0.0) return Interval(-1.0);
    if (s > 0.0) return Interval(1.0);
    return unit_band;
}

AnalyticIntervalFunction alpha_function()
{
    return {"alpha",
            {Interval(ExtReal::neg_inf(), ExtReal::pos_inf())},
            [](std::span<const double> p) { return alpha_eval(p[0]); },
            [](std::span<const double> p) { return p[0] == 0.0; },
            [](std::span<const double> p) { return std::abs(p[0]); }};
}

Interval beta_eval(double x, double y)
{
    const double r2 = x * x + y * y;
    if (std::isnan(r2)) {
        throw std::invalid_argument("beta: NaN coordinate");
    }
    if (r2 == 0.0) {
        return unit_band;
    }
    if (r2 < beta_guard_radius2) {
        throw std::domain_error("beta: sin(1/r^2) is not resolvable in double precision for r^2 < 1e-12");
    }
    const double u = 1.0 / r2;
    const double k = std::nearbyint(u / std::numbers::pi);
    if (k >= 1.0 && std::abs(u - k * std::numbers::pi) <= beta_circle_tolerance * u) {
        return unit_band;
    }
    return alpha_eval(std::sin(u));
}

AnalyticIntervalFunction beta_function()
{
    const Interval line(ExtReal::neg_inf(), ExtReal::pos_inf());
    return {"beta",
            {line, line},
            [](std::span<const double> p) { return beta_eval(p[0], p[1]); },
            [](std::span<const double> p) { return !beta_eval(p[0], p[1]).is_degenerate(); }};
}

bool on_shock_line(double t, double x)
{
    return t >= 1.0 && std::abs(x - (t - 1.0) / 2.0) <= shock_line_tolerance * std::max(1.0, t);
}

Interval shock_solution_eval(double t, double x)
{
    if (std::isnan(t) || std::isnan(x)) {
        throw std::invalid_argument("shock solution: NaN coordinate");
    }
    if (t < 0.0) {
        throw std::domain_error("shock solution: defined for t >= 0 only");
    }
    if (t < 1.0) {
        if (x < t - 1.0) return Interval(1.0);
        if (x <= 0.0) return Interval(x / (t - 1.0));
        return Interval(0.0);
    }
    if (on_shock_line(t, x)) return unit_band;
    return x < (t - 1.0) / 2.0 ? Interval(1.0) : Interval(0.0);
}

AnalyticIntervalFunction shock_function()
{
    return {"shock",
            {Interval(0.0, ExtReal::pos_inf()), Interval(ExtReal::neg_inf(), ExtReal::pos_inf())},
            [](std::span<const double> p) { return shock_solution_eval(p[0], p[1]); },
            [](std::span<const double> p) { return on_shock_line(p[0], p[1]); },
            [](std::span<const double> p) { return shock_nonsmooth_distance(p[0], p[1]); }};
}

ResidualReport pde_residual(const AnalyticIntervalFunction& u, double t, double x, double h)
{
    if (!(h > 0.0) || !std::isfinite(h)) {
        throw std::invalid_argument("pde_residual: step must be positive and finite");
    }
    if (u.dimension() != 2) {
        throw std::invalid_argument("pde_residual: expected a function of (t, x)");
    }
    const std::array<std::array<double, 2>, 5> stencil{{{t, x}, {t + h, x}, {t - h, x}, {t, x + h}, {t, x - h}}};
    for (const auto& p : stencil) {
        if (!u.in_domain(p)) {
            throw std::invalid_argument("pde_residual: stencil leaves the domain");
        }
    }

    ResidualReport rep{t, x, h, 0.0, false};
    for (const auto& p : stencil) {
        if (u.nonsmooth_distance(p) <= 2.0 * h) {
            rep.skipped = true;
            return rep;
        }
    }

    std::array<double, 5> v{};
    for (std::size_t i = 0; i < stencil.size(); ++i) {
        const Interval val = u(stencil[i]);
        if (!val.is_degenerate() || !val.lo().is_finite()) {
            throw std::logic_error("pde_residual: " + u.name() + " is not a finite point value at a stencil point "
                                   "outside the guarded locus");
        }
        v[i] = val.lo().value();
    }
    const double u_t = (v[1] - v[2]) / (2.0 * h);
    const double u_x = (v[3] - v[4]) / (2.0 * h);
    rep.residual = u_t + v[0] * u_x;
    return rep;
}

std::vector<std::array<double, 2>> default_residual_sweep()
{
    std::vector<double> times;
    for (int i = 0; i < 20; ++i) {
        times.push_back(0.02 + 0.48 * i / 19.0);
    }
    for (int i = 0; i < 20; ++i) {
        times.push_back(1.1 + 1.9 * i / 19.0);
    }
    std::vector<std::array<double, 2>> out;
    out.reserve(times.size() * 25);
    for (double t : times) {
        for (int j = 0; j < 25; ++j) {
            out.push_back({t, -1.55 + 0.13 * j});
        }
    }
    return out;
}

double locate_discontinuity(const AnalyticIntervalFunction& u, double t, double x_lo, double x_hi)
{
    if (!(x_lo < x_hi)) {
        throw std::invalid_argument("locate_discontinuity: empty bracket");
    }
    const Interval left = u({t, x_lo});
    const Interval right = u({t, x_hi});
    if (!left.is_degenerate()) return x_lo;
    if (!right.is_degenerate()) return x_hi;
    if (left == right) {
        throw std::runtime_error("locate_discontinuity: bracket ends carry the same value");
    }
    while (true) {
        const double mid = x_lo + (x_hi - x_lo) / 2.0;
        if (mid <= x_lo || mid >= x_hi) {
            throw std::runtime_error("locate_discontinuity: no nondegenerate value found in the bracket");
        }
        const Interval v = u({t, mid});
        if (!v.is_degenerate()) {
            return mid;
        }
        if (v == left) {
            x_lo = mid;
        } else {
            x_hi = mid;
        }
    }
}

double shock_speed_check(double t1, double t2)
{
    if (!(t1 >= 1.0) || !(t2 > t1)) {
        throw std::invalid_argument("shock_speed_check: need 1 <= t1 < t2");
    }
    const auto u = shock_function();
    const double x1 = locate_discontinuity(u, t1, -(t1 + 10.0), t1 + 10.0);
    const double x2 = locate_discontinuity(u, t2, -(t2 + 10.0), t2 + 10.0);
    return (x2 - x1) / (t2 - t1);
}

double rankine_hugoniot_speed(double t)
{
    const auto u = shock_function();
    const double xs = locate_discontinuity(u, t, -(t + 10.0), t + 10.0);
    const double delta = 1e-6 * std::max(1.0, std::abs(xs));
    const Interval left = u({t, xs - delta});
    const Interval right = u({t, xs + delta});
    if (!left.is_degenerate() || !right.is_degenerate()) {
        throw std::logic_error("rankine_hugoniot_speed: one-sided states are not point values");
    }
    return (left.lo().value() + right.lo().value()) / 2.0;
}

void write_sweep_csv(std::ostream& os, const AnalyticIntervalFunction& f, const std::array<std::string, 2>& axis_names,
                     double min0, double max0, int n0, double min1, double max1, int n1)
{
    if (n0 < 2 || n1 < 2) {
        throw std::invalid_argument("write_sweep_csv: need at least 2 samples per axis");
    }
    if (!(min0 <= max0) || !(min1 <= max1)) {
        throw std::invalid_argument("write_sweep_csv: empty range");
    }
    os << axis_names[0] << ',' << axis_names[1] << ",lo,hi\n";
    for (int i = 0; i < n0; ++i) {
        const double a = min0 + (max0 - min0) * i / (n0 - 1);
        for (int j = 0; j < n1; ++j) {
            const double b = min1 + (max1 - min1) * j / (n1 - 1);
            const Interval v = f({a, b});
            os << csv_number(a) << ',' << csv_number(b) << ',' << csv_number(v.lo().value()) << ','
               << csv_number(v.hi().value()) << '\n';
        }
    }
}

} // namespace hcont
