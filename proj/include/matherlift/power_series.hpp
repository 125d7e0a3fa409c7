#pragma once

#include <string>
#include <vector>

#include "matherlift/errors.hpp"
#include "matherlift/rational.hpp"

namespace matherlift {

inline constexpr std::size_t kDefaultTruncation = 16;

/// Truncated univariate power series: coefficients of t^0 .. t^truncation.
/// Used for local curve parametrizations; everything above the truncation
/// is unknown, not zero.
struct PowerSeries1 {
    std::string var = "t";
    std::size_t truncation = kDefaultTruncation;
    std::vector<Rational> coeff; // size truncation + 1

    PowerSeries1() : coeff(kDefaultTruncation + 1) {}

    PowerSeries1(std::string variable, std::size_t trunc)
        : var(std::move(variable)), truncation(trunc), coeff(trunc + 1) {}

    static PowerSeries1 monomial(std::size_t power, const Rational& c,
                                 std::size_t trunc = kDefaultTruncation,
                                 std::string variable = "t") {
        PowerSeries1 s(std::move(variable), trunc);
        if (power <= trunc) s.coeff[power] = c;
        return s;
    }

    static PowerSeries1 from_coeffs(std::vector<Rational> low_coeffs,
                                    std::size_t trunc = kDefaultTruncation,
                                    std::string variable = "t") {
        PowerSeries1 s(std::move(variable), trunc);
        for (std::size_t i = 0; i < low_coeffs.size() && i <= trunc; ++i)
            s.coeff[i] = low_coeffs[i];
        return s;
    }

    bool identically_zero_to_truncation() const {
        for (const Rational& c : coeff)
            if (c != 0) return false;
        return true;
    }

    PowerSeries1 operator+(const PowerSeries1& o) const {
        check_compatible(o);
        PowerSeries1 r(var, truncation);
        for (std::size_t i = 0; i <= truncation; ++i) r.coeff[i] = coeff[i] + o.coeff[i];
        return r;
    }

    PowerSeries1 operator*(const PowerSeries1& o) const {
        check_compatible(o);
        PowerSeries1 r(var, truncation);
        for (std::size_t i = 0; i <= truncation; ++i)
            for (std::size_t j = 0; i + j <= truncation; ++j)
                r.coeff[i + j] += coeff[i] * o.coeff[j];
        return r;
    }

    PowerSeries1 scaled(const Rational& c) const {
        PowerSeries1 r(var, truncation);
        for (std::size_t i = 0; i <= truncation; ++i) r.coeff[i] = coeff[i] * c;
        return r;
    }

    /// d/dt; the top coefficient of the derivative is unknown and dropped,
    /// so the truncation shrinks by one.
    PowerSeries1 derivative() const {
        if (truncation == 0) throw precondition_error("derivative of order-0 truncation");
        PowerSeries1 r(var, truncation - 1);
        for (std::size_t i = 1; i <= truncation; ++i)
            r.coeff[i - 1] = coeff[i] * Rational(i);
        return r;
    }

    void check_compatible(const PowerSeries1& o) const {
        if (var != o.var || truncation != o.truncation)
            throw variable_context_error("power series variable/truncation mismatch");
    }
};

/// Order of vanishing: the smallest index with a nonzero coefficient.
/// An all-zero window is indeterminate -- the caller must retry with a
/// larger truncation (or certify the series zero by other means).
inline std::size_t series_order(const PowerSeries1& s) {
    for (std::size_t i = 0; i <= s.truncation; ++i)
        if (s.coeff[i] != 0) return i;
    throw indeterminate_order_error(
        "series is zero up to truncation " + std::to_string(s.truncation) +
        "; re-run with the truncation doubled");
}

} // namespace matherlift
