#ifndef HCONT_ANALYTIC_HPP
#define HCONT_ANALYTIC_HPP

#include "hcont/interval.hpp"

#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace hcont {

// Interval-valued function given by a closed-form point evaluator.
//
// The domain is a box whose per-axis ranges are closed extended intervals,
// e.g. [0, +inf] x [-inf, +inf] for (t, x) with t >= 0. The discontinuity
// locus marks the points where the value may be a nondegenerate interval;
// everywhere else the evaluator must return a point.
class AnalyticIntervalFunction {
public:
    using Evaluator = std::function<Interval(std::span<const double>)>;
    using Predicate = std::function<bool(std::span<const double>)>;
    using Distance = std::function<double(std::span<const double>)>;

    // nonsmooth_distance, when given, is the distance from a point to the
    // set where the function is discontinuous or has a kink. Used to keep
    // finite-difference stencils away from it.
    AnalyticIntervalFunction(std::string name, std::vector<Interval> domain, Evaluator evaluator,
                             Predicate discontinuity_locus, Distance nonsmooth_distance = {});

    const std::string& name() const noexcept { return name_; }
    int dimension() const noexcept { return static_cast<int>(domain_.size()); }
    const std::vector<Interval>& domain() const noexcept { return domain_; }

    bool in_domain(std::span<const double> point) const;

    // Throws std::domain_error outside the domain.
    Interval operator()(std::span<const double> point) const;
    Interval operator()(std::initializer_list<double> point) const
    {
        return (*this)(std::span<const double>(point.begin(), point.size()));
    }

    bool on_locus(std::span<const double> point) const { return locus_(point); }

    // +inf when no distance function was supplied.
    double nonsmooth_distance(std::span<const double> point) const;

private:
    std::string name_;
    std::vector<Interval> domain_;
    Evaluator evaluator_;
    Predicate locus_;
    Distance nonsmooth_distance_;
};

} // namespace hcont

#endif
