#ifndef HCONT_TESTS_SUPPORT_HPP
#define HCONT_TESTS_SUPPORT_HPP

// Test-only oracles. Nothing here goes through the star relation, so the
// exact Baire operators can be checked against plain geometry.

#include "hcont/cell_function.hpp"

#include <algorithm>
#include <array>
#include <vector>

namespace hcont::testing {

// A point in the relative interior of the cell.
inline std::vector<double> representative_point(const CubicalComplex& k, CellId c)
{
    std::vector<double> p;
    const auto pos = k.positions(c);
    for (int a = 0; a < k.dimension(); ++a) {
        const auto& b = k.breakpoints(a);
        const auto q = pos[static_cast<std::size_t>(a)];
        const auto i = q / 2;
        if (q % 2 == 1) {
            p.push_back(b[i]);
        } else if (i == 0) {
            p.push_back(b.front() - 1.0);
        } else if (i == b.size()) {
            p.push_back(b.back() + 1.0);
        } else {
            p.push_back(0.5 * (b[i - 1] + b[i]));
        }
    }
    return p;
}

inline double min_spacing(const CubicalComplex& k)
{
    double s = 1.0;
    for (int a = 0; a < k.dimension(); ++a) {
        const auto& b = k.breakpoints(a);
        for (std::size_t i = 1; i < b.size(); ++i) {
            s = std::min(s, b[i] - b[i - 1]);
        }
    }
    return s;
}

// inf of lower endpoints and sup of upper endpoints of f over a small box
// around the representative point of c, found by point location of a
// 5-per-axis sample grid. The box is smaller than any cell, so it is a
// neighbourhood small enough for the limits to have stabilized.
inline Interval neighbourhood_envelope(const CellIntervalFunction& f, CellId c)
{
    const auto& k = f.complex();
    const auto centre = representative_point(k, c);
    const double r = 0.25 * min_spacing(k);
    const std::array<double, 5> offs{-r, -0.5 * r, 0.0, 0.5 * r, r};
    ExtReal lo = ExtReal::pos_inf();
    ExtReal hi = ExtReal::neg_inf();
    const auto visit = [&](const std::vector<double>& p) {
        const auto& v = f[k.locate(p)];
        lo = min(lo, v.lo());
        hi = max(hi, v.hi());
    };
    if (k.dimension() == 1) {
        for (double o : offs) {
            visit({centre[0] + o});
        }
    } else {
        for (double o0 : offs) {
            for (double o1 : offs) {
                visit({centre[0] + o0, centre[1] + o1});
            }
        }
    }
    return {lo, hi};
}

} // namespace hcont::testing

#endif
