#include "hcont/analytic.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace hcont {

AnalyticIntervalFunction::AnalyticIntervalFunction(std::string name, std::vector<Interval> domain,
                                                   Evaluator evaluator, Predicate discontinuity_locus,
                                                   Distance nonsmooth_distance)
    : name_(std::move(name)),
      domain_(std::move(domain)),
      evaluator_(std::move(evaluator)),
      locus_(std::move(discontinuity_locus)),
      nonsmooth_distance_(std::move(nonsmooth_distance))
{
    if (domain_.empty() || domain_.size() > 2) {
        throw std::invalid_argument("AnalyticIntervalFunction: domain must be 1-D or 2-D");
    }
    if (!evaluator_ || !locus_) {
        throw std::invalid_argument("AnalyticIntervalFunction: evaluator and locus predicate are required");
    }
}

bool AnalyticIntervalFunction::in_domain(std::span<const double> point) const
{
    if (point.size() != domain_.size()) {
        return false;
    }
    for (std::size_t a = 0; a < point.size(); ++a) {
        if (std::isnan(point[a]) || !domain_[a].contains(ExtReal(point[a]))) {
            return false;
        }
    }
    return true;
}

Interval AnalyticIntervalFunction::operator()(std::span<const double> point) const
{
    if (!in_domain(point)) {
        throw std::domain_error(name_ + ": point outside the domain");
    }
    return evaluator_(point);
}

double AnalyticIntervalFunction::nonsmooth_distance(std::span<const double> point) const
{
    if (!nonsmooth_distance_) {
        return std::numeric_limits<double>::infinity();
    }
    return nonsmooth_distance_(point);
}

} // namespace hcont
