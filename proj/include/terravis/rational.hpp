#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace terravis {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

namespace detail {

inline bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
        if (c < '0' || c > '9') return false;
    return true;
}

} // namespace detail

/// Parses an exact rational from "123", "-4", "2.5", or "a/b".
/// Decimals become exact fractions; no floating point is involved.
/// Throws std::invalid_argument on anything else.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&] { throw std::invalid_argument("malformed numeral: '" + std::string(text) + "'"); };

    std::string_view s = text;
    bool negative = false;
    if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
        negative = s.front() == '-';
        s.remove_prefix(1);
    }
    if (s.empty()) fail();

    Rational value;
    if (auto slash = s.find('/'); slash != std::string_view::npos) {
        std::string_view num = s.substr(0, slash);
        std::string_view den = s.substr(slash + 1);
        if (!detail::all_digits(num) || !detail::all_digits(den)) fail();
        BigInt d{std::string(den)};
        if (d == 0) fail();
        value = Rational(BigInt{std::string(num)}, d);
    } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
        std::string_view whole = s.substr(0, dot);
        std::string_view frac = s.substr(dot + 1);
        if (whole.empty() && frac.empty()) fail();
        if (!whole.empty() && !detail::all_digits(whole)) fail();
        if (!frac.empty() && !detail::all_digits(frac)) fail();
        BigInt w = whole.empty() ? BigInt{0} : BigInt{std::string(whole)};
        BigInt f = frac.empty() ? BigInt{0} : BigInt{std::string(frac)};
        BigInt scale = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
        value = Rational(w * scale + f, scale);
    } else {
        if (!detail::all_digits(s)) fail();
        value = Rational(BigInt{std::string(s)});
    }
    return negative ? -value : value;
}

/// Renders a rational in a form parse_rational accepts: "n" or "n/d".
inline std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

} // namespace terravis
