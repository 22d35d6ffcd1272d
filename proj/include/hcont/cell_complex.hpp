#ifndef HCONT_CELL_COMPLEX_HPP
#define HCONT_CELL_COMPLEX_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hcont {

// Index of a cell inside a CubicalComplex. Ids follow canonical order:
// lexicographic over the per-axis positions, each axis ordered left to right
// (e0, v0, e1, v1, ..., ek).
struct CellId {
    std::size_t index = 0;

    friend auto operator<=>(CellId, CellId) = default;
};

// Regular cubical decomposition of R or R^2 induced by axis-aligned grid
// lines.
//
// Along an axis with k breakpoints b_0 < ... < b_{k-1} there are 2k+1
// positions: even position 2i is the open edge e_i (e_0 = (-inf, b_0),
// e_k = (b_{k-1}, +inf)) and odd position 2i+1 is the vertex v_i = {b_i}.
// A cell is one position per axis; its dimension is the number of axes on
// which it sits on an edge. The outer cells are unbounded, so the complex
// covers the whole open box and has no boundary.
class CubicalComplex {
public:
    static constexpr int max_dimension = 2;

    // One strictly increasing, finite, nonempty breakpoint list per axis.
    explicit CubicalComplex(std::vector<std::vector<double>> breakpoints);

    int dimension() const noexcept { return static_cast<int>(breakpoints_.size()); }
    const std::vector<double>& breakpoints(int axis) const { return breakpoints_.at(static_cast<std::size_t>(axis)); }
    std::size_t size() const noexcept { return stars_.size(); }

    // Number of positions (2k+1) along an axis.
    std::size_t extent(int axis) const { return 2 * breakpoints(axis).size() + 1; }

    std::vector<std::size_t> positions(CellId c) const;
    CellId cell_at(std::span<const std::size_t> positions) const;

    int cell_dimension(CellId c) const;
    bool is_top(CellId c) const { return cell_dimension(c) == dimension(); }
    std::vector<CellId> top_cells() const;

    // All cells whose closure contains c, c included, in canonical order.
    std::span<const CellId> star(CellId c) const;

    // Canonical text code: per axis "v<i>" or "e<i>", axes joined by ','.
    std::string code(CellId c) const;
    CellId from_code(std::string_view code) const;

    // Cell containing the point. A coordinate equal to a breakpoint lands
    // on the vertex position of that axis.
    CellId locate(std::span<const double> point) const;

    void check(CellId c) const;

    friend bool operator==(const CubicalComplex& a, const CubicalComplex& b) noexcept
    {
        return a.breakpoints_ == b.breakpoints_;
    }

private:
    std::vector<std::vector<double>> breakpoints_;
    std::vector<std::vector<CellId>> stars_;
};

using ComplexPtr = std::shared_ptr<const CubicalComplex>;

// dimension must be 1 or 2 and match the number of axes in grid_lines.
ComplexPtr build_complex(int dimension, std::vector<std::vector<double>> grid_lines);

} // namespace hcont

#endif
