#ifndef HCONT_IO_HPP
#define HCONT_IO_HPP

#include "hcont/baire.hpp"
#include "hcont/cell_function.hpp"
#include "hcont/continuity.hpp"

#include <json.hpp>

#include <filesystem>
#include <stdexcept>
#include <string>

namespace hcont {

using json = nlohmann::ordered_json;

// Raised for malformed function spec documents.
class SpecError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Finite values are JSON numbers; infinities are the strings "-inf"/"+inf".
json to_json(ExtReal x);
ExtReal ext_real_from_json(const json& j);

// [lo, hi]. Input also accepts a bare value for a degenerate interval.
json to_json(const Interval& a);
Interval interval_from_json(const json& j);

// Function spec document:
//   { "dimension": 1|2, "breakpoints": [[...], ...],
//     "values": [ { "cell": "<code>", "value": <interval> }, ... ] }
// Values are written in canonical cell order. On input every cell must
// appear exactly once.
json to_json(const CellIntervalFunction& f);
CellIntervalFunction function_from_json(const json& j);

CellIntervalFunction load_function(const std::filesystem::path& path);
// Pretty-printed, two-space indent, trailing newline.
std::string dump_function(const CellIntervalFunction& f);

json to_json(const ContinuityVerdict& v, const CubicalComplex& complex);
json to_json(const BaireEstimate& e);

// 17 significant digits, "-inf"/"+inf" for infinities.
std::string csv_number(double v);

} // namespace hcont

#endif
