#pragma once

#include "pluecker/rational.hpp"

#include <span>
#include <string>
#include <vector>

namespace pluecker::polyring {

/// Polynomial in the single formal symbol d with exact rational coefficients.
///
/// Coefficients are stored densely, index = power of d, with no trailing
/// zeros; two polynomials are equal iff their coefficient lists are. The
/// zero polynomial has an empty list and degree() == kZeroDegree.
class FormalPoly {
public:
    static constexpr int kZeroDegree = -1;

    FormalPoly() = default;
    explicit FormalPoly(Rational constant);
    explicit FormalPoly(std::vector<Rational> coeffs);

    /// The symbol d itself.
    static FormalPoly symbol();
    static FormalPoly constant(long long c) { return FormalPoly(make_rational(c)); }
    /// Convenience for linear factors a*d + b.
    static FormalPoly linear(const Rational& a, const Rational& b);

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool is_zero() const { return coef_.empty(); }
    bool is_constant() const { return coef_.size() <= 1; }
    Rational coeff(std::size_t power) const;
    const std::vector<Rational>& coeffs() const { return coef_; }

    FormalPoly operator-() const;
    FormalPoly& operator+=(const FormalPoly& rhs);
    FormalPoly& operator-=(const FormalPoly& rhs);
    friend FormalPoly operator+(FormalPoly lhs, const FormalPoly& rhs) { return lhs += rhs; }
    friend FormalPoly operator-(FormalPoly lhs, const FormalPoly& rhs) { return lhs -= rhs; }
    friend FormalPoly operator*(const FormalPoly& lhs, const FormalPoly& rhs);

    FormalPoly scaled(const Rational& c) const;

    /// Exact Horner evaluation at a rational point.
    Rational evaluate(const Rational& at) const;

    friend bool operator==(const FormalPoly&, const FormalPoly&) = default;

    /// Terms in decreasing degree: "d^4 - 2*d^3 - 9*d^2 + 18*d",
    /// "1/2*d^4 - d^3 - 9/2*d^2 + 9*d", "0".
    std::string str() const;
    /// Same, without spaces around the sign separators ("d-2").
    std::string str_compact() const;

private:
    std::vector<Rational> coef_;
    void trim();
    std::string render(bool spaced) const;
};

/// True iff the product of the factors expands exactly to `expanded`.
/// Factored displays are checked this way; no factorization is performed.
bool equals_expansion(std::span<const FormalPoly> factors, const FormalPoly& expanded);

/// "d(d-2)(d-3)(d+3)": single-term factors bare, others parenthesized.
std::string factored_str(std::span<const FormalPoly> factors);

} // namespace pluecker::polyring
