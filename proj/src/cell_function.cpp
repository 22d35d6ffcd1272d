#include "hcont/cell_function.hpp"

#include <stdexcept>

namespace hcont {

CellIntervalFunction::CellIntervalFunction(ComplexPtr complex, std::vector<Interval> values)
    : complex_(std::move(complex)), values_(std::move(values))
{
    if (!complex_) {
        throw std::invalid_argument("CellIntervalFunction: null complex");
    }
    if (values_.size() != complex_->size()) {
        throw std::invalid_argument("CellIntervalFunction: expected " + std::to_string(complex_->size()) +
                                    " values, got " + std::to_string(values_.size()));
    }
}

CellIntervalFunction CellIntervalFunction::constant(ComplexPtr complex, const Interval& value)
{
    const auto n = complex ? complex->size() : 0;
    return {std::move(complex), std::vector<Interval>(n, value)};
}

CellIntervalFunction CellIntervalFunction::generate(ComplexPtr complex,
                                                    const std::function<Interval(CellId)>& value)
{
    std::vector<Interval> values;
    const auto n = complex ? complex->size() : 0;
    values.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        values.push_back(value(CellId{i}));
    }
    return {std::move(complex), std::move(values)};
}

const Interval& CellIntervalFunction::at(CellId c) const
{
    complex_->check(c);
    return values_[c.index];
}

CellIntervalFunction CellIntervalFunction::with_value(CellId c, const Interval& value) const
{
    complex_->check(c);
    auto copy = *this;
    copy.values_[c.index] = value;
    return copy;
}

bool operator==(const CellIntervalFunction& a, const CellIntervalFunction& b)
{
    return (a.complex_ == b.complex_ || *a.complex_ == *b.complex_) && a.values_ == b.values_;
}

void require_same_complex(const CellIntervalFunction& f, const CellIntervalFunction& g)
{
    if (f.complex_ptr() != g.complex_ptr() && !(f.complex() == g.complex())) {
        throw std::invalid_argument("cell functions are defined on different complexes");
    }
}

bool pointwise_leq(const CellIntervalFunction& f, const CellIntervalFunction& g)
{
    require_same_complex(f, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!interval_leq(f[CellId{i}], g[CellId{i}])) {
            return false;
        }
    }
    return true;
}

bool pointwise_subset(const CellIntervalFunction& f, const CellIntervalFunction& g)
{
    require_same_complex(f, g);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!interval_subset(f[CellId{i}], g[CellId{i}])) {
            return false;
        }
    }
    return true;
}

EndpointPair endpoint_decomposition(const CellIntervalFunction& f)
{
    return {CellIntervalFunction::generate(f.complex_ptr(), [&](CellId c) { return Interval(f[c].lo()); }),
            CellIntervalFunction::generate(f.complex_ptr(), [&](CellId c) { return Interval(f[c].hi()); })};
}

CellIntervalFunction recompose(const CellIntervalFunction& lower, const CellIntervalFunction& upper)
{
    require_same_complex(lower, upper);
    if (!is_point_valued(lower) || !is_point_valued(upper)) {
        throw std::invalid_argument("recompose: endpoint functions must be point-valued");
    }
    return CellIntervalFunction::generate(lower.complex_ptr(),
                                          [&](CellId c) { return Interval(lower[c].lo(), upper[c].lo()); });
}

bool is_point_valued(const CellIntervalFunction& f)
{
    for (const auto& v : f.values()) {
        if (width(v) != ExtReal(0.0)) {
            return false;
        }
    }
    return true;
}

} // namespace hcont
