#include "hcont/io.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <limits>
#include <optional>
#include <sstream>

namespace hcont {

json to_json(ExtReal x)
{
    if (x.is_neg_inf()) return "-inf";
    if (x.is_pos_inf()) return "+inf";
    return x.value();
}

ExtReal ext_real_from_json(const json& j)
{
    if (j.is_number()) {
        return ExtReal(j.get<double>());
    }
    if (j.is_string()) {
        const auto& s = j.get_ref<const std::string&>();
        if (s == "-inf") return ExtReal::neg_inf();
        if (s == "+inf") return ExtReal::pos_inf();
        throw SpecError("expected a number, \"-inf\" or \"+inf\", got \"" + s + "\"");
    }
    throw SpecError("expected an extended real, got " + j.dump());
}

json to_json(const Interval& a) { return json::array({to_json(a.lo()), to_json(a.hi())}); }

Interval interval_from_json(const json& j)
{
    if (j.is_array()) {
        if (j.size() != 2) {
            throw SpecError("an interval must be a two-element array, got " + j.dump());
        }
        const ExtReal lo = ext_real_from_json(j[0]);
        const ExtReal hi = ext_real_from_json(j[1]);
        if (hi < lo) {
            throw SpecError("interval " + j.dump() + " has lo > hi");
        }
        return {lo, hi};
    }
    return Interval(ext_real_from_json(j));
}

json to_json(const CellIntervalFunction& f)
{
    const auto& k = f.complex();
    json doc;
    doc["dimension"] = k.dimension();
    json bps = json::array();
    for (int a = 0; a < k.dimension(); ++a) {
        bps.push_back(k.breakpoints(a));
    }
    doc["breakpoints"] = std::move(bps);
    json values = json::array();
    for (std::size_t i = 0; i < f.size(); ++i) {
        const CellId c{i};
        json entry;
        entry["cell"] = k.code(c);
        entry["value"] = to_json(f[c]);
        values.push_back(std::move(entry));
    }
    doc["values"] = std::move(values);
    return doc;
}

CellIntervalFunction function_from_json(const json& j)
{
    if (!j.is_object()) {
        throw SpecError("function spec must be a JSON object");
    }
    for (const char* key : {"dimension", "breakpoints", "values"}) {
        if (!j.contains(key)) {
            throw SpecError(std::string("function spec is missing \"") + key + "\"");
        }
    }
    if (!j["dimension"].is_number_integer()) {
        throw SpecError("\"dimension\" must be an integer");
    }
    const int dim = j["dimension"].get<int>();
    const auto& bps = j["breakpoints"];
    if (!bps.is_array()) {
        throw SpecError("\"breakpoints\" must be an array of per-axis arrays");
    }
    std::vector<std::vector<double>> grid;
    for (const auto& axis : bps) {
        if (!axis.is_array()) {
            throw SpecError("\"breakpoints\" must be an array of per-axis arrays");
        }
        std::vector<double> line;
        for (const auto& b : axis) {
            if (!b.is_number()) {
                throw SpecError("breakpoints must be finite numbers");
            }
            line.push_back(b.get<double>());
        }
        grid.push_back(std::move(line));
    }

    ComplexPtr complex;
    try {
        complex = build_complex(dim, std::move(grid));
    } catch (const std::invalid_argument& e) {
        throw SpecError(e.what());
    }

    const auto& vals = j["values"];
    if (!vals.is_array()) {
        throw SpecError("\"values\" must be an array");
    }
    std::vector<std::optional<Interval>> slots(complex->size());
    for (const auto& entry : vals) {
        if (!entry.is_object() || !entry.contains("cell") || !entry.contains("value") || !entry["cell"].is_string()) {
            throw SpecError("each value entry needs a string \"cell\" and a \"value\"");
        }
        CellId c;
        try {
            c = complex->from_code(entry["cell"].get<std::string>());
        } catch (const std::exception& e) {
            throw SpecError(e.what());
        }
        if (slots[c.index]) {
            throw SpecError("cell " + complex->code(c) + " appears more than once");
        }
        slots[c.index] = interval_from_json(entry["value"]);
    }
    std::vector<Interval> values;
    values.reserve(slots.size());
    for (std::size_t i = 0; i < slots.size(); ++i) {
        if (!slots[i]) {
            throw SpecError("cell " + complex->code(CellId{i}) + " has no value");
        }
        values.push_back(*slots[i]);
    }
    return {std::move(complex), std::move(values)};
}

CellIntervalFunction load_function(const std::filesystem::path& path)
{
    std::ifstream in(path);
    if (!in) {
        throw SpecError("cannot open " + path.string());
    }
    json j;
    try {
        j = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SpecError(path.string() + ": " + e.what());
    }
    return function_from_json(j);
}

std::string dump_function(const CellIntervalFunction& f) { return to_json(f).dump(2) + "\n"; }

json to_json(const ContinuityVerdict& v, const CubicalComplex& complex)
{
    json doc;
    doc["s_continuous"] = v.s_continuous;
    doc["h_continuous"] = v.h_continuous;
    doc["witness"] = v.witness ? json(complex.code(*v.witness)) : json(nullptr);
    doc["witness_kind"] = std::string(witness_kind_name(v.witness_kind));
    return doc;
}

json to_json(const BaireEstimate& e)
{
    json doc;
    doc["point"] = e.point;
    doc["lower"] = to_json(e.lower);
    doc["upper"] = to_json(e.upper);
    doc["radii_used"] = e.radii_used;
    doc["samples_per_radius"] = e.samples_per_radius;
    doc["converged"] = e.converged;
    return doc;
}

std::string csv_number(double v)
{
    if (v == std::numeric_limits<double>::infinity()) return "+inf";
    if (v == -std::numeric_limits<double>::infinity()) return "-inf";
    if (v == 0.0) v = 0.0;
    std::array<char, 40> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v, std::chars_format::general, 17);
    return std::string(buf.data(), res.ptr);
}

} // namespace hcont
