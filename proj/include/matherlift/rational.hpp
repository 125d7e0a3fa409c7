#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "matherlift/errors.hpp"

namespace matherlift {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational numbers. cpp_rational keeps values in lowest terms with a
/// positive denominator, which is exactly the contract we need; nothing in
/// the library ever rounds.
using Rational = boost::multiprecision::cpp_rational;

inline BigInt rat_num(const Rational& q) { return numerator(q); }
inline BigInt rat_den(const Rational& q) { return denominator(q); }

inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

/// "p" for integers, "p/q" otherwise. Matches the interchange format.
inline std::string rational_to_string(const Rational& q) {
    if (is_integer(q)) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

/// Parses "p" or "p/q" with optional leading sign. Decimal points are
/// rejected: there is no floating-point mode.
inline Rational parse_rational(std::string_view text) {
    auto fail = [&]() -> Rational {
        throw parse_error("not a rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();
    std::size_t slash = text.find('/');
    auto digits_ok = [&](std::string_view part, bool allow_sign) {
        if (part.empty()) return false;
        std::size_t i = 0;
        if (allow_sign && (part[0] == '+' || part[0] == '-')) i = 1;
        if (i == part.size()) return false;
        for (; i < part.size(); ++i)
            if (part[i] < '0' || part[i] > '9') return false;
        return true;
    };
    if (slash == std::string_view::npos) {
        if (!digits_ok(text, true)) return fail();
        return Rational(BigInt(std::string(text)));
    }
    std::string_view num = text.substr(0, slash);
    std::string_view den = text.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) return fail();
    BigInt d{std::string(den)};
    if (d == 0) throw parse_error("zero denominator in '" + std::string(text) + "'");
    Rational q{BigInt{std::string(num)}};
    q /= Rational(d);
    return q;
}

} // namespace matherlift
