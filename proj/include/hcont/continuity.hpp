#ifndef HCONT_CONTINUITY_HPP
#define HCONT_CONTINUITY_HPP

#include "hcont/cell_function.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace hcont {

enum class WitnessKind { none, graph_completion_mismatch, minimality_violation };

std::string_view witness_kind_name(WitnessKind kind) noexcept;

struct ContinuityVerdict {
    bool s_continuous = false;
    bool h_continuous = false;
    // First failing cell in canonical order, if any check failed.
    std::optional<CellId> witness;
    WitnessKind witness_kind = WitnessKind::none;
};

// Segment continuity: f is a fixed point of the graph completion, checked
// as F(f)(c) ⊆ f(c) on every cell. The returned verdict also carries the
// H-continuity result.
ContinuityVerdict is_s_continuous(const CellIntervalFunction& f);

// Hausdorff continuity, decided by the endpoint characterization
//
//     f s-continuous  and  F(lo f) = f = F(hi f).
//
// If g ⊆ f is s-continuous then hi g = S(hi g) >= S(lo g) >= S(lo f) = hi f
// and dually lo g <= lo f, so g = f; conversely F(lo f) ⊆ f is itself
// s-continuous, so minimality forces equality. brute_force_h_oracle checks
// the same predicate by enumeration.
ContinuityVerdict is_h_continuous(const CellIntervalFunction& f);

class OracleRefused : public std::length_error {
public:
    using std::length_error::length_error;
};

struct OracleOptions {
    std::size_t max_cells = 9;
    // Added to the candidate endpoint alphabet on top of f's own endpoints.
    std::vector<ExtReal> extra_alphabet;
};

// Enumerates every g with g(c) ⊆ f(c) whose endpoints come from the
// alphabet, looking for an s-continuous g != f. Partial assignments that
// already break s-continuity between a cell and a member of its star are
// cut; complete candidates are confirmed with graph_completion.
// Throws OracleRefused on complexes with more than max_cells cells.
std::optional<CellIntervalFunction> find_smaller_s_continuous(const CellIntervalFunction& f,
                                                              const OracleOptions& options = {});

// Definition-level H-continuity: s-continuous and no smaller s-continuous
// selection over the alphabet exists.
bool brute_force_h_oracle(const CellIntervalFunction& f, const OracleOptions& options = {});

// Fills the lower-dimensional cells with the hull of the top cells in their
// star. The result is s-continuous; with point values on the top cells it
// is H-continuous. Throws std::invalid_argument if a top cell is missing or
// a key is not a top cell.
CellIntervalFunction extend_from_dense(const ComplexPtr& complex, const std::map<CellId, Interval>& top_values);

enum class DenseMode { lower, upper, interval, equal };

DenseMode parse_dense_mode(std::string_view name);

// Evaluates the hypothesis of dense determination on the top
// cells (an open dense subset of the domain):
//   lower:    lo f <= lo g        upper: hi f <= hi g
//   interval: f <= g              equal: f == g
// For H-continuous functions this implies f <= g (resp. f == g) on every cell.
// Throws std::invalid_argument unless both inputs are H-continuous.
bool dense_compare(const CellIntervalFunction& f, const CellIntervalFunction& g, DenseMode mode);

} // namespace hcont

#endif
