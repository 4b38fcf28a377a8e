#pragma once

#include "pluecker/rational.hpp"

#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

namespace pluecker::numeric {

using polyring::Rational;
using Complex = std::complex<double>;

struct Monomial3 {
    int x = 0, y = 0, z = 0;
    int degree() const { return x + y + z; }
    auto operator<=>(const Monomial3&) const = default;
};

struct ParseError : std::runtime_error {
    ParseError(const std::string& message, std::size_t position)
        : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
          position(position) {}
    std::size_t position;
};

/// Homogeneous trivariate polynomial with exact rational coefficients.
class PlaneCurve {
public:
    /// Grammar: signed sum of terms; a term is an optional rational
    /// coefficient (with optional '*') followed by a product of x|y|z
    /// factors, each with an optional '^' positive exponent. Whitespace is
    /// ignored. Rejects non-homogeneous input and the zero polynomial.
    static PlaneCurve parse(std::string_view text);

    static PlaneCurve from_terms(std::map<Monomial3, Rational> terms);

    /// Dense random curve with small integer coefficients, deterministic in
    /// the seed. Smooth and bitangent-generic with probability 1; callers
    /// that need certainty check the solve results.
    static PlaneCurve random(int degree, std::uint64_t seed);

    int degree() const { return degree_; }
    const std::map<Monomial3, Rational>& terms() const { return terms_; }
    std::string str() const;

private:
    int degree_ = 0;
    std::map<Monomial3, Rational> terms_;
};

} // namespace pluecker::numeric
