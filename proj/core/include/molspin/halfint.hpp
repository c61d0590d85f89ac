#pragma once

#include <compare>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace molspin {

/// Half-integer angular momentum quantum number, stored as twice its value.
/// Keeps selection rules exact: no floating-point comparisons anywhere in the
/// angular momentum layer.
class HalfInt {
public:
    constexpr HalfInt() : twice_(0) {}
    constexpr HalfInt(int integer_value) : twice_(2 * integer_value) {}

    static constexpr HalfInt from_twice(int twice) {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }

    constexpr auto operator<=>(const HalfInt&) const = default;

    HalfInt abs() const { return from_twice(std::abs(twice_)); }

    /// "2", "-1/2", "0", ...
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    int twice_;
};

inline constexpr HalfInt half() { return HalfInt::from_twice(1); }

/// Parses "3", "-1/2" style strings.
inline HalfInt parse_half_int(const std::string& s) {
    auto slash = s.find('/');
    if (slash == std::string::npos) return HalfInt(std::stoi(s));
    if (s.substr(slash + 1) != "2") throw std::invalid_argument("half-integer must have denominator 2: " + s);
    return HalfInt::from_twice(std::stoi(s.substr(0, slash)));
}

}  // namespace molspin
