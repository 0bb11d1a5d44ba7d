#pragma once

#include <charconv>
#include <compare>
#include <cstdlib>
#include <string>
#include <string_view>

#include "uqp/error.hpp"

namespace uqp {

/// Exact integer or half-integer, stored as twice its value.
class HalfInt {
public:
    constexpr HalfInt() = default;

    static constexpr HalfInt from_twice(int twice) noexcept {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt integer(int n) noexcept { return from_twice(2 * n); }

    /// Parses "3", "-2", "3/2" or "-7/2". Anything else (including decimals) throws.
    static HalfInt parse(std::string_view text) {
        auto fail = [&] {
            return invalid_argument_error("not an integer or half-integer: '" + std::string(text) + "'");
        };
        if (text.empty()) throw fail();
        const auto slash = text.find('/');
        const auto num_text = text.substr(0, slash);
        int num = 0;
        auto [end, ec] = std::from_chars(num_text.data(), num_text.data() + num_text.size(), num);
        if (ec != std::errc{} || end != num_text.data() + num_text.size()) throw fail();
        if (slash == std::string_view::npos) return integer(num);
        if (text.substr(slash + 1) != "2") throw fail();
        if (num % 2 == 0) throw fail(); // "4/2" is not canonical
        return from_twice(num);
    }

    constexpr int twice() const noexcept { return twice_; }
    constexpr double value() const noexcept { return 0.5 * twice_; }
    constexpr bool is_integer() const noexcept { return twice_ % 2 == 0; }

    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

    constexpr HalfInt operator-() const noexcept { return from_twice(-twice_); }
    constexpr HalfInt& operator+=(HalfInt o) noexcept {
        twice_ += o.twice_;
        return *this;
    }
    constexpr HalfInt& operator-=(HalfInt o) noexcept {
        twice_ -= o.twice_;
        return *this;
    }
    friend constexpr HalfInt operator+(HalfInt a, HalfInt b) noexcept { return a += b; }
    friend constexpr HalfInt operator-(HalfInt a, HalfInt b) noexcept { return a -= b; }
    friend constexpr HalfInt operator+(HalfInt a, int n) noexcept { return a + integer(n); }
    friend constexpr HalfInt operator-(HalfInt a, int n) noexcept { return a - integer(n); }

    friend constexpr auto operator<=>(HalfInt, HalfInt) = default;

private:
    int twice_ = 0;
};

constexpr HalfInt abs(HalfInt h) noexcept { return HalfInt::from_twice(std::abs(h.twice())); }

} // namespace uqp
