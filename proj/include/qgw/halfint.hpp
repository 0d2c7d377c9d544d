#pragma once

#include <compare>
#include <optional>
#include <string>

namespace qgw {

// Half-integer spin label, stored as twice its value.
struct HalfInt {
    int twice = 0;

    constexpr HalfInt() = default;
    constexpr /*implicit*/ HalfInt(int whole) : twice(2 * whole) {}
    static constexpr HalfInt from_twice(int t) {
        HalfInt h;
        h.twice = t;
        return h;
    }
    static constexpr HalfInt half() { return from_twice(1); }

    bool is_integral() const { return twice % 2 == 0; }
    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) { return from_twice(a.twice + b.twice); }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) { return from_twice(a.twice - b.twice); }
    friend constexpr HalfInt operator-(HalfInt a) { return from_twice(-a.twice); }

    HalfInt abs() const { return from_twice(twice < 0 ? -twice : twice); }
    // matrix side of the spin-l corepresentation
    std::size_t dim() const { return static_cast<std::size_t>(twice + 1); }

    std::string to_string() const {
        if (twice % 2 == 0) return std::to_string(twice / 2);
        return std::to_string(twice) + "/2";
    }

    // accepts "2", "3/2", "-1/2"
    static std::optional<HalfInt> parse(const std::string& s) {
        try {
            auto slash = s.find('/');
            if (slash == std::string::npos) return HalfInt(std::stoi(s));
            if (s.substr(slash + 1) != "2") return std::nullopt;
            return from_twice(std::stoi(s.substr(0, slash)));
        } catch (...) {
            return std::nullopt;
        }
    }
};

} // namespace qgw
