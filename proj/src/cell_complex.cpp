#include "hcont/cell_complex.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <stdexcept>

namespace hcont {

namespace {

void validate_axis(const std::vector<double>& axis, std::size_t index)
{
    const std::string where = "axis " + std::to_string(index);
    if (axis.empty()) {
        throw std::invalid_argument("CubicalComplex: " + where + " has no breakpoints");
    }
    for (std::size_t i = 0; i < axis.size(); ++i) {
        if (!std::isfinite(axis[i])) {
            throw std::invalid_argument("CubicalComplex: " + where + " has a non-finite breakpoint");
        }
        if (i > 0 && !(axis[i - 1] < axis[i])) {
            throw std::invalid_argument("CubicalComplex: " + where +
                                        " breakpoints must be strictly increasing");
        }
    }
}

// Positions q along one axis whose closure contains position p.
std::vector<std::size_t> axis_star(std::size_t p, std::size_t extent)
{
    if (p % 2 == 0) {
        return {p};
    }
    std::vector<std::size_t> out{p - 1, p};
    if (p + 1 < extent) {
        out.push_back(p + 1);
    }
    return out;
}

} // namespace

CubicalComplex::CubicalComplex(std::vector<std::vector<double>> breakpoints)
    : breakpoints_(std::move(breakpoints))
{
    if (breakpoints_.empty() || breakpoints_.size() > static_cast<std::size_t>(max_dimension)) {
        throw std::invalid_argument("CubicalComplex: dimension must be 1 or 2");
    }
    for (std::size_t a = 0; a < breakpoints_.size(); ++a) {
        validate_axis(breakpoints_[a], a);
    }

    std::size_t total = 1;
    for (int a = 0; a < dimension(); ++a) {
        total *= extent(a);
    }
    stars_.resize(total);

    for (std::size_t id = 0; id < total; ++id) {
        const auto pos = positions(CellId{id});
        if (dimension() == 1) {
            for (auto q : axis_star(pos[0], extent(0))) {
                stars_[id].push_back(CellId{q});
            }
        } else {
            const auto s0 = axis_star(pos[0], extent(0));
            const auto s1 = axis_star(pos[1], extent(1));
            for (auto q0 : s0) {
                for (auto q1 : s1) {
                    stars_[id].push_back(CellId{q0 * extent(1) + q1});
                }
            }
        }
    }
}

std::vector<std::size_t> CubicalComplex::positions(CellId c) const
{
    check(c);
    if (dimension() == 1) {
        return {c.index};
    }
    return {c.index / extent(1), c.index % extent(1)};
}

CellId CubicalComplex::cell_at(std::span<const std::size_t> pos) const
{
    if (pos.size() != static_cast<std::size_t>(dimension())) {
        throw std::invalid_argument("CubicalComplex: position has wrong number of axes");
    }
    std::size_t id = 0;
    for (int a = 0; a < dimension(); ++a) {
        const auto p = pos[static_cast<std::size_t>(a)];
        if (p >= extent(a)) {
            throw std::out_of_range("CubicalComplex: position out of range on axis " + std::to_string(a));
        }
        id = id * extent(a) + p;
    }
    return CellId{id};
}

int CubicalComplex::cell_dimension(CellId c) const
{
    const auto pos = positions(c);
    return static_cast<int>(std::count_if(pos.begin(), pos.end(), [](std::size_t p) { return p % 2 == 0; }));
}

std::vector<CellId> CubicalComplex::top_cells() const
{
    std::vector<CellId> out;
    for (std::size_t id = 0; id < size(); ++id) {
        if (is_top(CellId{id})) {
            out.push_back(CellId{id});
        }
    }
    return out;
}

std::span<const CellId> CubicalComplex::star(CellId c) const
{
    check(c);
    return stars_[c.index];
}

std::string CubicalComplex::code(CellId c) const
{
    std::string out;
    for (auto p : positions(c)) {
        if (!out.empty()) {
            out += ',';
        }
        out += (p % 2 == 0) ? 'e' : 'v';
        out += std::to_string(p / 2);
    }
    return out;
}

CellId CubicalComplex::from_code(std::string_view code) const
{
    const auto bad = [&](const char* why) {
        return std::invalid_argument("bad cell code '" + std::string(code) + "': " + why);
    };
    std::vector<std::size_t> pos;
    std::string_view rest = code;
    while (true) {
        const auto comma = rest.find(',');
        const auto part = rest.substr(0, comma);
        if (part.size() < 2 || (part[0] != 'e' && part[0] != 'v')) {
            throw bad("expected e<i> or v<i> per axis");
        }
        std::size_t i = 0;
        const auto digits = part.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), i);
        if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
            throw bad("index is not a nonnegative integer");
        }
        pos.push_back(part[0] == 'e' ? 2 * i : 2 * i + 1);
        if (comma == std::string_view::npos) {
            break;
        }
        rest = rest.substr(comma + 1);
    }
    if (pos.size() != static_cast<std::size_t>(dimension())) {
        throw bad("wrong number of axes");
    }
    for (int a = 0; a < dimension(); ++a) {
        if (pos[static_cast<std::size_t>(a)] >= extent(a)) {
            throw bad("index out of range");
        }
    }
    return cell_at(pos);
}

CellId CubicalComplex::locate(std::span<const double> point) const
{
    if (point.size() != static_cast<std::size_t>(dimension())) {
        throw std::invalid_argument("CubicalComplex::locate: point has wrong number of coordinates");
    }
    std::array<std::size_t, max_dimension> pos{};
    for (int a = 0; a < dimension(); ++a) {
        const double x = point[static_cast<std::size_t>(a)];
        if (std::isnan(x)) {
            throw std::invalid_argument("CubicalComplex::locate: NaN coordinate");
        }
        const auto& b = breakpoints(a);
        const auto it = std::lower_bound(b.begin(), b.end(), x);
        const auto i = static_cast<std::size_t>(it - b.begin());
        pos[static_cast<std::size_t>(a)] = (it != b.end() && *it == x) ? 2 * i + 1 : 2 * i;
    }
    return cell_at(std::span<const std::size_t>(pos.data(), static_cast<std::size_t>(dimension())));
}

void CubicalComplex::check(CellId c) const
{
    if (c.index >= size()) {
        throw std::out_of_range("CubicalComplex: unknown cell id " + std::to_string(c.index));
    }
}

ComplexPtr build_complex(int dimension, std::vector<std::vector<double>> grid_lines)
{
    if (dimension < 1 || dimension > CubicalComplex::max_dimension) {
        throw std::invalid_argument("build_complex: dimension must be 1 or 2");
    }
    if (grid_lines.size() != static_cast<std::size_t>(dimension)) {
        throw std::invalid_argument("build_complex: expected one breakpoint list per axis");
    }
    return std::make_shared<const CubicalComplex>(std::move(grid_lines));
}

} // namespace hcont
