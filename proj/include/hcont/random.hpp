#ifndef HCONT_RANDOM_HPP
#define HCONT_RANDOM_HPP

#include "hcont/cell_function.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace hcont {

// Seeded generators for complexes and cell functions, shared by the
// property suites and the `laws` command. Output depends only on the seed.
class FunctionGenerator {
public:
    explicit FunctionGenerator(std::uint64_t seed) : rng_(seed) {}

    std::mt19937_64& engine() noexcept { return rng_; }

    int uniform(int lo, int hi);
    bool coin(double p = 0.5);

    // 1 to max_breakpoints strictly increasing breakpoints per axis.
    ComplexPtr complex(int dimension, int max_breakpoints);
    // Random 1-D or 2-D complex with at most max_cells cells (max_cells >= 3).
    ComplexPtr small_complex(std::size_t max_cells);

    // size distinct values drawn from the integers in [-4, 4], with -inf and
    // +inf each included with probability infinity_rate. Sorted.
    std::vector<ExtReal> alphabet(std::size_t size, double infinity_rate = 0.0);

    Interval interval(std::span<const ExtReal> alphabet);
    CellIntervalFunction function(const ComplexPtr& complex, std::span<const ExtReal> alphabet);
    CellIntervalFunction point_function(const ComplexPtr& complex, std::span<const ExtReal> alphabet);

    // g with f <= g cellwise (endpoints moved up within the alphabet).
    CellIntervalFunction raise(const CellIntervalFunction& f, std::span<const ExtReal> alphabet);
    // g with f(c) ⊆ g(c) on every cell.
    CellIntervalFunction widen(const CellIntervalFunction& f, std::span<const ExtReal> alphabet);

    // extend_from_dense of random point values on the top cells.
    CellIntervalFunction h_continuous(const ComplexPtr& complex, std::span<const ExtReal> alphabet);

private:
    ExtReal pick(std::span<const ExtReal> values);

    std::mt19937_64 rng_;
};

} // namespace hcont

#endif
