#include "hcont/continuity.hpp"

#include "hcont/baire.hpp"

#include <algorithm>
#include <string>

namespace hcont {

std::string_view witness_kind_name(WitnessKind kind) noexcept
{
    switch (kind) {
    case WitnessKind::none: return "none";
    case WitnessKind::graph_completion_mismatch: return "graph-completion-mismatch";
    case WitnessKind::minimality_violation: return "minimality-violation";
    }
    return "none";
}

namespace {

std::optional<CellId> first_mismatch(const CellIntervalFunction& expected, const CellIntervalFunction& f)
{
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!(expected[CellId{i}] == f[CellId{i}])) {
            return CellId{i};
        }
    }
    return std::nullopt;
}

ContinuityVerdict classify(const CellIntervalFunction& f)
{
    ContinuityVerdict v;
    const auto completed = graph_completion(f);
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!interval_subset(completed[CellId{i}], f[CellId{i}])) {
            v.witness = CellId{i};
            v.witness_kind = WitnessKind::graph_completion_mismatch;
            return v;
        }
    }
    v.s_continuous = true;

    const auto [lower, upper] = endpoint_decomposition(f);
    const auto from_lower = first_mismatch(graph_completion(lower), f);
    const auto from_upper = first_mismatch(graph_completion(upper), f);
    if (from_lower || from_upper) {
        v.witness = std::min(from_lower.value_or(CellId{f.size()}), from_upper.value_or(CellId{f.size()}));
        v.witness_kind = WitnessKind::minimality_violation;
        return v;
    }
    v.h_continuous = true;
    return v;
}

struct Candidate {
    ExtReal lo;
    ExtReal hi;
};

class SelectionSearch {
public:
    SelectionSearch(const CellIntervalFunction& f, std::vector<ExtReal> alphabet)
        : f_(f), k_(f.complex()), lo_(f.size()), hi_(f.size()), assigned_(f.size(), false)
    {
        std::sort(alphabet.begin(), alphabet.end());
        alphabet.erase(std::unique(alphabet.begin(), alphabet.end()), alphabet.end());

        for (std::size_t i = 0; i < f.size(); ++i) {
            order_.push_back(CellId{i});
        }
        // Top cells first: they are unconstrained, and every lower cell is
        // then checked against its full star as soon as it is placed.
        std::stable_sort(order_.begin(), order_.end(),
                         [&](CellId a, CellId b) { return k_.cell_dimension(a) > k_.cell_dimension(b); });

        candidates_.resize(f.size());
        faces_.resize(f.size());
        for (std::size_t i = 0; i < f.size(); ++i) {
            const CellId c{i};
            const auto& v = f[c];
            for (auto lo : alphabet) {
                for (auto hi : alphabet) {
                    if (v.lo() <= lo && lo <= hi && hi <= v.hi()) {
                        candidates_[i].push_back({lo, hi});
                    }
                }
            }
            for (auto d : k_.star(c)) {
                if (d != c) {
                    faces_[d.index].push_back(c);
                }
            }
        }
    }

    std::optional<CellIntervalFunction> run()
    {
        if (search(0, false)) {
            return found_;
        }
        return std::nullopt;
    }

private:
    // g(c) must contain g(d) for d in star(c) in the sense lo g(c) <= lo g(d)
    // and hi g(c) >= hi g(d); the reverse holds for faces of c.
    bool consistent(CellId c) const
    {
        const auto i = c.index;
        for (auto d : k_.star(c)) {
            if (d != c && assigned_[d.index] && (lo_[d.index] < lo_[i] || hi_[i] < hi_[d.index])) {
                return false;
            }
        }
        for (auto d : faces_[i]) {
            if (assigned_[d.index] && (lo_[i] < lo_[d.index] || hi_[d.index] < hi_[i])) {
                return false;
            }
        }
        return true;
    }

    bool search(std::size_t depth, bool differs)
    {
        if (depth == order_.size()) {
            if (!differs) {
                return false;
            }
            auto g = CellIntervalFunction::generate(f_.complex_ptr(),
                                                    [&](CellId c) { return Interval(lo_[c.index], hi_[c.index]); });
            if (!(graph_completion(g) == g)) {
                return false;
            }
            found_ = std::move(g);
            return true;
        }
        const CellId c = order_[depth];
        const auto i = c.index;
        assigned_[i] = true;
        for (const auto& cand : candidates_[i]) {
            lo_[i] = cand.lo;
            hi_[i] = cand.hi;
            if (!consistent(c)) {
                continue;
            }
            const bool d = differs || !(Interval(cand.lo, cand.hi) == f_[c]);
            if (search(depth + 1, d)) {
                return true;
            }
        }
        assigned_[i] = false;
        return false;
    }

    const CellIntervalFunction& f_;
    const CubicalComplex& k_;
    std::vector<CellId> order_;
    std::vector<std::vector<Candidate>> candidates_;
    std::vector<std::vector<CellId>> faces_;
    std::vector<ExtReal> lo_;
    std::vector<ExtReal> hi_;
    std::vector<bool> assigned_;
    std::optional<CellIntervalFunction> found_;
};

} // namespace

ContinuityVerdict is_s_continuous(const CellIntervalFunction& f) { return classify(f); }

ContinuityVerdict is_h_continuous(const CellIntervalFunction& f) { return classify(f); }

std::optional<CellIntervalFunction> find_smaller_s_continuous(const CellIntervalFunction& f,
                                                              const OracleOptions& options)
{
    if (f.size() > options.max_cells) {
        throw OracleRefused("brute-force oracle refuses complexes with more than " +
                            std::to_string(options.max_cells) + " cells (got " + std::to_string(f.size()) + ")");
    }
    std::vector<ExtReal> alphabet = options.extra_alphabet;
    for (const auto& v : f.values()) {
        alphabet.push_back(v.lo());
        alphabet.push_back(v.hi());
    }
    return SelectionSearch(f, std::move(alphabet)).run();
}

bool brute_force_h_oracle(const CellIntervalFunction& f, const OracleOptions& options)
{
    if (f.size() > options.max_cells) {
        throw OracleRefused("brute-force oracle refuses complexes with more than " +
                            std::to_string(options.max_cells) + " cells (got " + std::to_string(f.size()) + ")");
    }
    if (!(graph_completion(f) == f)) {
        return false;
    }
    return !find_smaller_s_continuous(f, options).has_value();
}

CellIntervalFunction extend_from_dense(const ComplexPtr& complex, const std::map<CellId, Interval>& top_values)
{
    if (!complex) {
        throw std::invalid_argument("extend_from_dense: null complex");
    }
    for (const auto& [c, v] : top_values) {
        complex->check(c);
        if (!complex->is_top(c)) {
            throw std::invalid_argument("extend_from_dense: cell " + complex->code(c) + " is not a top cell");
        }
    }
    for (auto c : complex->top_cells()) {
        if (!top_values.contains(c)) {
            throw std::invalid_argument("extend_from_dense: top cell " + complex->code(c) + " has no value");
        }
    }
    return CellIntervalFunction::generate(complex, [&](CellId c) {
        std::optional<Interval> acc;
        for (auto d : complex->star(c)) {
            if (complex->is_top(d)) {
                const auto& v = top_values.at(d);
                acc = acc ? hull(*acc, v) : v;
            }
        }
        return *acc;
    });
}

DenseMode parse_dense_mode(std::string_view name)
{
    if (name == "lower") return DenseMode::lower;
    if (name == "upper") return DenseMode::upper;
    if (name == "interval") return DenseMode::interval;
    if (name == "equal") return DenseMode::equal;
    throw std::invalid_argument("unknown dense comparison mode '" + std::string(name) + "'");
}

bool dense_compare(const CellIntervalFunction& f, const CellIntervalFunction& g, DenseMode mode)
{
    require_same_complex(f, g);
    if (!is_h_continuous(f).h_continuous || !is_h_continuous(g).h_continuous) {
        throw std::invalid_argument("dense_compare: both functions must be H-continuous");
    }
    for (auto c : f.complex().top_cells()) {
        const auto& a = f[c];
        const auto& b = g[c];
        bool ok = false;
        switch (mode) {
        case DenseMode::lower: ok = a.lo() <= b.lo(); break;
        case DenseMode::upper: ok = a.hi() <= b.hi(); break;
        case DenseMode::interval: ok = interval_leq(a, b); break;
        case DenseMode::equal: ok = a == b; break;
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

} // namespace hcont
