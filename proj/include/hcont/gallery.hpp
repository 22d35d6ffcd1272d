#ifndef HCONT_GALLERY_HPP
#define HCONT_GALLERY_HPP

#include "hcont/analytic.hpp"
#include "hcont/cell_function.hpp"

#include <array>
#include <iosfwd>
#include <limits>
#include <string>
#include <vector>

namespace hcont {

// Single-discontinuity functions on the complex with one breakpoint at 0.

// a on x < 0, b at 0, c on x > 0.
CellIntervalFunction make_step(ExtReal a, ExtReal b, ExtReal c);

// a on x < 0, the interval bc at 0, d on x > 0.
CellIntervalFunction make_interval_step(ExtReal a, const Interval& bc, ExtReal d);

// -1 on x < 0, [-1, 1] at 0, 1 on x > 0.
CellIntervalFunction make_alpha();

// Pointwise version of make_alpha.
Interval alpha_eval(double s);
AnalyticIntervalFunction alpha_function();

// alpha(sin(1 / (x^2 + y^2))) away from the origin, [-1, 1] at the origin.
//
// The argument of alpha vanishes on the circles x^2 + y^2 = 1/(k pi). In
// floating point sin(k pi) is not exactly zero, so u = 1/(x^2 + y^2) is
// treated as a multiple of pi when it lies within circle_tolerance * u of
// one. Points with 0 < x^2 + y^2 < beta_guard_radius2 are refused with
// std::domain_error: sin(1/r^2) cannot be resolved there.
inline constexpr double beta_guard_radius2 = 1e-12;
inline constexpr double beta_circle_tolerance = 64 * std::numeric_limits<double>::epsilon();

Interval beta_eval(double x, double y);
AnalyticIntervalFunction beta_function();

// Shock-forming solution of U_t + U U_x = 0 with initial profile 1 for
// x <= -1, -x on [-1, 0], 0 for x >= 0. A compression fan
// focuses at (t, x) = (1, 0); afterwards a shock travels along x = (t-1)/2
// where the value is [-1, 1]. Throws std::domain_error for t < 0.
//
// As with beta, grid points such as (1.02, 0.01) are on the line only up to
// rounding, so on_shock_line accepts |x - (t-1)/2| <= shock_line_tolerance * max(1, t).
inline constexpr double shock_line_tolerance = 8 * std::numeric_limits<double>::epsilon();

Interval shock_solution_eval(double t, double x);
bool on_shock_line(double t, double x);
AnalyticIntervalFunction shock_function();

struct ResidualReport {
    double t = 0;
    double x = 0;
    double h = 0;
    double residual = 0;
    bool skipped = false;
};

// Central-difference residual U_t + U U_x at (t, x) with step h. Skipped
// when the centre or a stencil point lies within 2h of the non-smooth set
// of U (discontinuity locus or kink lines).
ResidualReport pde_residual(const AnalyticIntervalFunction& u, double t, double x, double h = 1e-3);

// 1000 deterministic (t, x) samples: 40 time rows (20 in [0.02, 0.5], 20 in
// [1.1, 3]) by 25 positions in [-1.55, 1.57].
std::vector<std::array<double, 2>> default_residual_sweep();

// Bisection in x at fixed t for a point with a nondegenerate value. The
// values at the two bracket ends must differ.
double locate_discontinuity(const AnalyticIntervalFunction& u, double t, double x_lo, double x_hi);

// Measured shock speed (x2 - x1) / (t2 - t1) for 1 <= t1 < t2.
double shock_speed_check(double t1, double t2);

// (U_left + U_right) / 2 from the states on either side of the shock at t.
double rankine_hugoniot_speed(double t);

// Row-major sweep of a 2-D analytic function over a regular grid, written as
// CSV with header "<a0>,<a1>,lo,hi". n0, n1 >= 2.
void write_sweep_csv(std::ostream& os, const AnalyticIntervalFunction& f, const std::array<std::string, 2>& axis_names,
                     double min0, double max0, int n0, double min1, double max1, int n1);

} // namespace hcont

#endif
