#ifndef HCONT_CELL_FUNCTION_HPP
#define HCONT_CELL_FUNCTION_HPP

#include "hcont/cell_complex.hpp"
#include "hcont/interval.hpp"

#include <functional>
#include <span>
#include <vector>

namespace hcont {

// Interval-valued function that is constant on every cell of a complex.
class CellIntervalFunction {
public:
    CellIntervalFunction(ComplexPtr complex, std::vector<Interval> values);

    static CellIntervalFunction constant(ComplexPtr complex, const Interval& value);
    static CellIntervalFunction generate(ComplexPtr complex, const std::function<Interval(CellId)>& value);

    const CubicalComplex& complex() const noexcept { return *complex_; }
    const ComplexPtr& complex_ptr() const noexcept { return complex_; }
    std::size_t size() const noexcept { return values_.size(); }

    const Interval& operator[](CellId c) const { return values_[c.index]; }
    const Interval& at(CellId c) const;
    std::span<const Interval> values() const noexcept { return values_; }

    CellIntervalFunction with_value(CellId c, const Interval& value) const;

    friend bool operator==(const CellIntervalFunction& a, const CellIntervalFunction& b);

private:
    ComplexPtr complex_;
    std::vector<Interval> values_;
};

struct EndpointPair {
    CellIntervalFunction lower;
    CellIntervalFunction upper;
};

// Throws std::invalid_argument unless f and g live on equal complexes.
void require_same_complex(const CellIntervalFunction& f, const CellIntervalFunction& g);

// Cellwise interval_leq.
bool pointwise_leq(const CellIntervalFunction& f, const CellIntervalFunction& g);

// Cellwise inclusion f(c) ⊆ g(c).
bool pointwise_subset(const CellIntervalFunction& f, const CellIntervalFunction& g);

// Splits f = [lower, upper] into its two point-valued endpoint functions.
EndpointPair endpoint_decomposition(const CellIntervalFunction& f);

// Inverse of endpoint_decomposition. Both inputs must be point-valued with
// lower <= upper on every cell.
CellIntervalFunction recompose(const CellIntervalFunction& lower, const CellIntervalFunction& upper);

// True iff every value has width zero.
bool is_point_valued(const CellIntervalFunction& f);

} // namespace hcont

#endif
