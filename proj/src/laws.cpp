#include "hcont/laws.hpp"

#include "hcont/baire.hpp"
#include "hcont/continuity.hpp"

#include <stdexcept>

namespace hcont {

std::vector<LawCheck> check_operator_laws(const CellIntervalFunction& f, const CellIntervalFunction& above,
                                          const CellIntervalFunction& around)
{
    if (!pointwise_leq(f, above)) {
        throw std::invalid_argument("check_operator_laws: `above` must dominate f");
    }
    if (!pointwise_subset(f, around)) {
        throw std::invalid_argument("check_operator_laws: `around` must contain f");
    }

    const auto [lower, upper] = endpoint_decomposition(f);
    const auto i_f = lower_baire(f);
    const auto s_f = upper_baire(f);
    const auto f_f = graph_completion(f);

    std::vector<LawCheck> out;
    out.push_back({"chain", pointwise_leq(i_f, lower) && pointwise_leq(lower, f) && pointwise_leq(f, upper) &&
                                pointwise_leq(upper, s_f)});
    out.push_back({"inclusion", pointwise_subset(f, f_f)});
    out.push_back({"monotone_order", pointwise_leq(i_f, lower_baire(above)) && pointwise_leq(s_f, upper_baire(above)) &&
                                         pointwise_leq(f_f, graph_completion(above))});
    out.push_back({"monotone_inclusion", pointwise_subset(f_f, graph_completion(around))});
    out.push_back({"idempotence",
                   lower_baire(i_f) == i_f && upper_baire(s_f) == s_f && graph_completion(f_f) == f_f});
    out.push_back({"endpoint_identities", i_f == lower_baire(lower) && s_f == upper_baire(upper) &&
                                              f_f == recompose(lower_baire(lower), upper_baire(upper))});
    out.push_back({"completion_s_continuous", is_s_continuous(f_f).s_continuous});
    return out;
}

} // namespace hcont
