#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdint>
#include <string>

#include "planarinv/errors.hpp"

namespace planarinv {

// Exact rational arithmetic. All symbol-space coefficients and all orientation
// predicates run over Rat; no floating point enters those paths.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Exact conversion: every finite double is a dyadic rational.
inline Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw ParseError("non-finite coordinate");
    if (x == 0.0) return Rat(0);
    int exp = 0;
    double m = std::frexp(x, &exp);  // x = m * 2^exp, 0.5 <= |m| < 1
    // 53 doublings make the mantissa integral.
    auto mant = static_cast<std::int64_t>(std::ldexp(m, 53));
    exp -= 53;
    Rat r(mant);
    if (exp >= 0) {
        r *= Rat(BigInt(1) << exp);
    } else {
        r /= Rat(BigInt(1) << (-exp));
    }
    return r;
}

// Parses a plain decimal literal ("-12.0345", "1e-3" is not accepted) exactly.
inline Rat rat_from_decimal(const std::string& s) {
    if (s.empty()) throw ParseError("empty decimal literal");
    size_t i = 0;
    bool neg = false;
    if (s[i] == '+' || s[i] == '-') {
        neg = (s[i] == '-');
        ++i;
    }
    BigInt digits = 0;
    long frac_len = 0;
    bool seen_digit = false, seen_dot = false;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c == '.') {
            if (seen_dot) throw ParseError("bad decimal literal: " + s);
            seen_dot = true;
        } else if (c >= '0' && c <= '9') {
            digits = digits * 10 + (c - '0');
            if (seen_dot) ++frac_len;
            seen_digit = true;
        } else {
            throw ParseError("bad decimal literal: " + s);
        }
    }
    if (!seen_digit) throw ParseError("bad decimal literal: " + s);
    BigInt den = 1;
    for (long k = 0; k < frac_len; ++k) den *= 10;
    Rat r(digits, den);
    return neg ? -r : r;
}

// "p" or "p/q".
inline Rat rat_from_fraction(const std::string& s) {
    try {
        return Rat(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational literal: " + s);
    }
}

inline std::string rat_to_string(const Rat& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

inline double rat_to_double(const Rat& r) { return static_cast<double>(r); }

}  // namespace planarinv
