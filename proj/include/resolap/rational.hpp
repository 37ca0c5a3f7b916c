#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace resolap {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& r) { return r.template convert_to<double>(); }

// "p" for integers, "p/q" otherwise (q > 0, lowest terms).
inline std::string to_frac_string(const Rational& r) {
    const BigInt num = numerator(r), den = denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
inline Rational parse_rational(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    const auto slash = s.find('/');
    auto parse_int = [](std::string_view t) -> BigInt {
        if (t.empty()) throw std::invalid_argument("empty integer literal");
        std::size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) throw std::invalid_argument("sign without digits");
        for (; i < t.size(); ++i)
            if (t[i] < '0' || t[i] > '9')
                throw std::invalid_argument("bad digit in rational literal: " + std::string(t));
        return BigInt(std::string(t));
    };
    if (slash == std::string_view::npos) return Rational(parse_int(s));
    const BigInt num = parse_int(s.substr(0, slash));
    const BigInt den = parse_int(s.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
}

// Largest nonnegative integer n with n <= v / sqrt(b_sq), i.e. n^2 * b_sq <= v^2.
// Exact even though v / sqrt(b_sq) is irrational in general.
inline BigInt floor_over_sqrt(const Rational& v, const Rational& b_sq) {
    if (v < 0 || b_sq <= 0) throw std::invalid_argument("floor_over_sqrt: bad arguments");
    const Rational v2 = v * v;
    BigInt n = BigInt(std::max(0.0, to_double(v) / std::sqrt(to_double(b_sq)))); // seed
    while (Rational(n * n) * b_sq > v2) --n;
    while (Rational((n + 1) * (n + 1)) * b_sq <= v2) ++n;
    return n;
}

}  // namespace resolap
