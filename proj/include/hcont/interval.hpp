#ifndef HCONT_INTERVAL_HPP
#define HCONT_INTERVAL_HPP

#include <compare>
#include <iosfwd>
#include <limits>
#include <stdexcept>
#include <string>

namespace hcont {

// A point of the extended real line R ∪ {-inf, +inf}.
//
// Backed by an IEEE double with NaN rejected at construction, so the order
// is total and comparisons are exact. Negative zero is folded into +0 so
// that equal values always serialize identically.
class ExtReal {
public:
    constexpr ExtReal() noexcept = default;

    // NOLINTNEXTLINE(google-explicit-constructor)
    ExtReal(double v) : value_(v == 0.0 ? 0.0 : v)
    {
        if (v != v) {
            throw std::invalid_argument("ExtReal: NaN is not an extended real");
        }
    }

    static ExtReal neg_inf() noexcept { return ExtReal(tag{}, -std::numeric_limits<double>::infinity()); }
    static ExtReal pos_inf() noexcept { return ExtReal(tag{}, std::numeric_limits<double>::infinity()); }

    double value() const noexcept { return value_; }
    bool is_finite() const noexcept { return value_ - value_ == 0.0; }
    bool is_neg_inf() const noexcept { return value_ == -std::numeric_limits<double>::infinity(); }
    bool is_pos_inf() const noexcept { return value_ == std::numeric_limits<double>::infinity(); }

    friend bool operator==(ExtReal a, ExtReal b) noexcept { return a.value_ == b.value_; }
    friend std::strong_ordering operator<=>(ExtReal a, ExtReal b) noexcept
    {
        if (a.value_ < b.value_) return std::strong_ordering::less;
        if (b.value_ < a.value_) return std::strong_ordering::greater;
        return std::strong_ordering::equal;
    }

private:
    struct tag {};
    constexpr ExtReal(tag, double v) noexcept : value_(v) {}

    double value_ = 0.0;
};

// |x| with |±inf| = +inf.
ExtReal abs(ExtReal x) noexcept;
ExtReal min(ExtReal a, ExtReal b) noexcept;
ExtReal max(ExtReal a, ExtReal b) noexcept;

// "-inf", "+inf", or the shortest round-trip decimal literal.
std::string to_string(ExtReal x);
std::ostream& operator<<(std::ostream& os, ExtReal x);

// Closed extended interval [lo, hi] with lo <= hi.
//
// Degenerate intervals [x, x] stand for the point x itself, including the
// points at infinity.
class Interval {
public:
    // NOLINTNEXTLINE(google-explicit-constructor)
    Interval(ExtReal point) noexcept : lo_(point), hi_(point) {}
    Interval(double point) : Interval(ExtReal(point)) {}

    Interval(ExtReal lo, ExtReal hi) : lo_(lo), hi_(hi)
    {
        if (hi < lo) {
            throw std::invalid_argument("Interval: lower endpoint " + to_string(lo) +
                                        " exceeds upper endpoint " + to_string(hi));
        }
    }

    ExtReal lo() const noexcept { return lo_; }
    ExtReal hi() const noexcept { return hi_; }
    bool is_degenerate() const noexcept { return lo_ == hi_; }
    bool contains(ExtReal x) const noexcept { return lo_ <= x && x <= hi_; }

    friend bool operator==(const Interval&, const Interval&) noexcept = default;

private:
    ExtReal lo_;
    ExtReal hi_;
};

// hi - lo, with +inf whenever an endpoint is infinite, except that the
// degenerate intervals at infinity have width 0.
ExtReal width(const Interval& a) noexcept;

// max(|lo|, |hi|).
ExtReal modulus(const Interval& a) noexcept;

// Endpoint-wise order: a.lo <= b.lo and a.hi <= b.hi.
bool interval_leq(const Interval& a, const Interval& b) noexcept;

// Set inclusion a ⊆ b.
bool interval_subset(const Interval& a, const Interval& b) noexcept;

// Smallest interval containing both.
Interval hull(const Interval& a, const Interval& b) noexcept;

std::string to_string(const Interval& a);
std::ostream& operator<<(std::ostream& os, const Interval& a);

} // namespace hcont

#endif
