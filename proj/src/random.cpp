#include "hcont/random.hpp"

#include "hcont/continuity.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hcont {

int FunctionGenerator::uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

bool FunctionGenerator::coin(double p) { return std::bernoulli_distribution(p)(rng_); }

ComplexPtr FunctionGenerator::complex(int dimension, int max_breakpoints)
{
    std::vector<std::vector<double>> grid;
    for (int a = 0; a < dimension; ++a) {
        const int k = uniform(1, max_breakpoints);
        std::vector<double> line;
        double x = uniform(-3, 0) + 0.5 * uniform(0, 1);
        for (int i = 0; i < k; ++i) {
            line.push_back(x);
            x += 0.5 * uniform(1, 3);
        }
        grid.push_back(std::move(line));
    }
    return build_complex(dimension, std::move(grid));
}

ComplexPtr FunctionGenerator::small_complex(std::size_t max_cells)
{
    if (max_cells < 3) {
        throw std::invalid_argument("small_complex: need room for at least 3 cells");
    }
    const int max_1d = static_cast<int>((max_cells - 1) / 2);
    if (max_cells >= 9 && coin(0.3)) {
        return complex(2, 1);
    }
    return complex(1, max_1d);
}

std::vector<ExtReal> FunctionGenerator::alphabet(std::size_t size, double infinity_rate)
{
    std::vector<ExtReal> out;
    if (infinity_rate > 0.0 && out.size() < size && coin(infinity_rate)) {
        out.push_back(ExtReal::neg_inf());
    }
    if (infinity_rate > 0.0 && out.size() < size && coin(infinity_rate)) {
        out.push_back(ExtReal::pos_inf());
    }
    std::vector<int> pool{-4, -3, -2, -1, 0, 1, 2, 3, 4};
    std::shuffle(pool.begin(), pool.end(), rng_);
    for (std::size_t i = 0; out.size() < size && i < pool.size(); ++i) {
        out.emplace_back(static_cast<double>(pool[i]));
    }
    std::sort(out.begin(), out.end());
    return out;
}

ExtReal FunctionGenerator::pick(std::span<const ExtReal> values)
{
    return values[static_cast<std::size_t>(uniform(0, static_cast<int>(values.size()) - 1))];
}

Interval FunctionGenerator::interval(std::span<const ExtReal> alphabet)
{
    const ExtReal a = pick(alphabet);
    const ExtReal b = coin(0.4) ? a : pick(alphabet);
    return {min(a, b), max(a, b)};
}

CellIntervalFunction FunctionGenerator::function(const ComplexPtr& complex, std::span<const ExtReal> alphabet)
{
    return CellIntervalFunction::generate(complex, [&](CellId) { return interval(alphabet); });
}

CellIntervalFunction FunctionGenerator::point_function(const ComplexPtr& complex, std::span<const ExtReal> alphabet)
{
    return CellIntervalFunction::generate(complex, [&](CellId) { return Interval(pick(alphabet)); });
}

CellIntervalFunction FunctionGenerator::raise(const CellIntervalFunction& f, std::span<const ExtReal> alphabet)
{
    return CellIntervalFunction::generate(f.complex_ptr(), [&](CellId c) {
        const auto& v = f[c];
        ExtReal lo = v.lo();
        if (coin()) {
            lo = max(lo, pick(alphabet));
        }
        ExtReal hi = max(v.hi(), lo);
        if (coin()) {
            hi = max(hi, pick(alphabet));
        }
        return Interval(lo, hi);
    });
}

CellIntervalFunction FunctionGenerator::widen(const CellIntervalFunction& f, std::span<const ExtReal> alphabet)
{
    return CellIntervalFunction::generate(f.complex_ptr(), [&](CellId c) {
        const auto& v = f[c];
        const ExtReal lo = coin() ? min(v.lo(), pick(alphabet)) : v.lo();
        const ExtReal hi = coin() ? max(v.hi(), pick(alphabet)) : v.hi();
        return Interval(lo, hi);
    });
}

CellIntervalFunction FunctionGenerator::h_continuous(const ComplexPtr& complex, std::span<const ExtReal> alphabet)
{
    std::map<CellId, Interval> tops;
    for (auto c : complex->top_cells()) {
        tops.emplace(c, Interval(pick(alphabet)));
    }
    return extend_from_dense(complex, tops);
}

} // namespace hcont
