#include "pluecker/formal_poly.hpp"

#include <algorithm>
#include <sstream>

namespace pluecker::polyring {

FormalPoly::FormalPoly(Rational constant) {
    if (constant != 0) coef_.push_back(std::move(constant));
}

FormalPoly::FormalPoly(std::vector<Rational> coeffs) : coef_(std::move(coeffs)) { trim(); }

FormalPoly FormalPoly::symbol() {
    return FormalPoly(std::vector<Rational>{Rational(0), Rational(1)});
}

FormalPoly FormalPoly::linear(const Rational& a, const Rational& b) {
    return FormalPoly(std::vector<Rational>{b, a});
}

Rational FormalPoly::coeff(std::size_t power) const {
    return power < coef_.size() ? coef_[power] : Rational(0);
}

void FormalPoly::trim() {
    while (!coef_.empty() && coef_.back() == 0) coef_.pop_back();
}

FormalPoly FormalPoly::operator-() const {
    FormalPoly out(*this);
    for (auto& c : out.coef_) c = -c;
    return out;
}

FormalPoly& FormalPoly::operator+=(const FormalPoly& rhs) {
    if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
    for (std::size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] += rhs.coef_[i];
    trim();
    return *this;
}

FormalPoly& FormalPoly::operator-=(const FormalPoly& rhs) {
    if (coef_.size() < rhs.coef_.size()) coef_.resize(rhs.coef_.size());
    for (std::size_t i = 0; i < rhs.coef_.size(); ++i) coef_[i] -= rhs.coef_[i];
    trim();
    return *this;
}

FormalPoly operator*(const FormalPoly& lhs, const FormalPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<Rational> out(lhs.coef_.size() + rhs.coef_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < lhs.coef_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coef_.size(); ++j)
            out[i + j] += lhs.coef_[i] * rhs.coef_[j];
    return FormalPoly(std::move(out));
}

FormalPoly FormalPoly::scaled(const Rational& c) const {
    if (c == 0) return {};
    FormalPoly out(*this);
    for (auto& x : out.coef_) x *= c;
    return out;
}

Rational FormalPoly::evaluate(const Rational& at) const {
    Rational acc(0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

std::string FormalPoly::render(bool spaced) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = coef_[k];
        if (c == 0) continue;
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (spaced ? (negative ? " - " : " + ") : (negative ? "-" : "+"));
        }
        Rational mag = negative ? Rational(-c) : c;
        if (k == 0) {
            out << to_string(mag);
        } else {
            if (mag != 1) out << to_string(mag) << "*";
            out << (k == 1 ? "d" : "d^" + std::to_string(k));
        }
        first = false;
    }
    return out.str();
}

std::string FormalPoly::str() const { return render(true); }
std::string FormalPoly::str_compact() const { return render(false); }

bool equals_expansion(std::span<const FormalPoly> factors, const FormalPoly& expanded) {
    FormalPoly prod = FormalPoly::constant(1);
    for (const auto& f : factors) prod = prod * f;
    return prod == expanded;
}

std::string factored_str(std::span<const FormalPoly> factors) {
    std::string out;
    for (const auto& f : factors) {
        const std::string body = f.str_compact();
        std::size_t terms = 0;
        for (std::size_t i = 0; i < f.coeffs().size(); ++i)
            if (f.coeffs()[i] != 0) ++terms;
        if (terms > 1)
            out += "(" + body + ")";
        else
            out += body;
    }
    return out;
}

} // namespace pluecker::polyring
