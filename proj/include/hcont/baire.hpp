#ifndef HCONT_BAIRE_HPP
#define HCONT_BAIRE_HPP

#include "hcont/analytic.hpp"
#include "hcont/cell_function.hpp"

#include <string_view>
#include <vector>

namespace hcont {

// Exact Baire operators on cell functions.
//
// For data that is constant on each cell, the infimum of f over a small
// enough neighbourhood of any point of cell c is the minimum of the lower
// endpoints over star(c), and the supremum is the maximum of the upper
// endpoints over star(c). Star transitivity makes all three operators
// idempotent.

// I(f): point-valued, I(f)(c) = min_{d in star(c)} lo f(d).
CellIntervalFunction lower_baire(const CellIntervalFunction& f);

// S(f): point-valued, S(f)(c) = max_{d in star(c)} hi f(d).
CellIntervalFunction upper_baire(const CellIntervalFunction& f);

// F(f) = [I(f), S(f)].
CellIntervalFunction graph_completion(const CellIntervalFunction& f);

enum class BaireOperator { lower, upper, completion };

// "I", "S" or "F"; throws std::invalid_argument otherwise.
BaireOperator parse_operator(std::string_view name);
std::string_view operator_name(BaireOperator op) noexcept;
CellIntervalFunction apply(BaireOperator op, const CellIntervalFunction& f);

// Sampled approximation of I(f)(x) and S(f)(x) for analytic functions.

struct EstimatorOptions {
    double r0 = 0.5;
    int levels = 20;
    // 1-D: even, split symmetrically left/right. 2-D: multiple of 4,
    // laid out as (samples/4) angles x 4 radius fractions.
    int samples_per_radius = 64;
    double tolerance = 1e-9;
};

struct BaireEstimate {
    std::vector<double> point;
    ExtReal lower;
    ExtReal upper;
    std::vector<double> radii_used;
    int samples_per_radius = 0;
    bool converged = false;
};

// For r_k = r0 * 2^-k, k < levels, takes the inf of lower endpoints and the
// sup of upper endpoints over a fixed sample pattern of radius r_k around
// the point (the point itself included, samples outside the domain
// dropped). lower is the max over k of the infima, upper the min over k of
// the suprema. converged means the last two levels agree within tolerance.
BaireEstimate numeric_baire_estimate(const AnalyticIntervalFunction& f, std::span<const double> point,
                                     const EstimatorOptions& options = {});

} // namespace hcont

#endif
