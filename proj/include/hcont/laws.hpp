#ifndef HCONT_LAWS_HPP
#define HCONT_LAWS_HPP

#include "hcont/cell_function.hpp"

#include <string>
#include <vector>

namespace hcont {

struct LawCheck {
    std::string name;
    bool holds = false;
};

// Evaluates the algebraic laws of I, S and F on f, using `above` (f <= above)
// for order monotonicity and `around` (f ⊆ around) for inclusion
// monotonicity. Names are stable and used as report keys.
std::vector<LawCheck> check_operator_laws(const CellIntervalFunction& f, const CellIntervalFunction& above,
                                          const CellIntervalFunction& around);

} // namespace hcont

#endif
