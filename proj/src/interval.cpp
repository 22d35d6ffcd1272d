#include "hcont/interval.hpp"

#include <array>
#include <charconv>
#include <ostream>

namespace hcont {

ExtReal abs(ExtReal x) noexcept
{
    return x < ExtReal(0.0) ? ExtReal(-x.value()) : x;
}

ExtReal min(ExtReal a, ExtReal b) noexcept { return b < a ? b : a; }
ExtReal max(ExtReal a, ExtReal b) noexcept { return a < b ? b : a; }

std::string to_string(ExtReal x)
{
    if (x.is_neg_inf()) return "-inf";
    if (x.is_pos_inf()) return "+inf";
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x.value());
    return std::string(buf.data(), res.ptr);
}

std::ostream& operator<<(std::ostream& os, ExtReal x) { return os << to_string(x); }

ExtReal width(const Interval& a) noexcept
{
    if (a.is_degenerate()) {
        return ExtReal(0.0);
    }
    if (a.lo().is_finite() && a.hi().is_finite()) {
        return ExtReal(a.hi().value() - a.lo().value());
    }
    return ExtReal::pos_inf();
}

ExtReal modulus(const Interval& a) noexcept { return max(abs(a.lo()), abs(a.hi())); }

bool interval_leq(const Interval& a, const Interval& b) noexcept
{
    return a.lo() <= b.lo() && a.hi() <= b.hi();
}

bool interval_subset(const Interval& a, const Interval& b) noexcept
{
    return b.lo() <= a.lo() && a.hi() <= b.hi();
}

Interval hull(const Interval& a, const Interval& b) noexcept
{
    return {min(a.lo(), b.lo()), max(a.hi(), b.hi())};
}

std::string to_string(const Interval& a)
{
    return "[" + to_string(a.lo()) + ", " + to_string(a.hi()) + "]";
}

std::ostream& operator<<(std::ostream& os, const Interval& a) { return os << to_string(a); }

} // namespace hcont
