#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace pluecker::polyring {

using BigInt = boost::multiprecision::cpp_int;

/// Exact arbitrary-precision rational. The backend keeps values in lowest
/// terms with a positive denominator, so equality is plain representation
/// equality and arithmetic never rounds.
using Rational = boost::multiprecision::cpp_rational;

inline Rational make_rational(long long num, long long den = 1) {
    if (den == 0) throw std::invalid_argument("rational with zero denominator");
    Rational q{BigInt(num)};
    q /= BigInt(den);
    return q;
}

inline bool is_integer(const Rational& q) {
    return boost::multiprecision::denominator(q) == 1;
}

/// "p/q" with the "/q" omitted for integers.
inline std::string to_string(const Rational& q) {
    std::string s = boost::multiprecision::numerator(q).str();
    if (!is_integer(q)) {
        s += "/";
        s += boost::multiprecision::denominator(q).str();
    }
    return s;
}

inline long long to_long(const Rational& q) {
    if (!is_integer(q)) throw std::domain_error("rational is not an integer: " + to_string(q));
    return boost::multiprecision::numerator(q).convert_to<long long>();
}

inline double to_double(const Rational& q) { return q.convert_to<double>(); }

} // namespace pluecker::polyring
