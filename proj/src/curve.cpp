#include "pluecker/curve.hpp"

#include "pluecker/rng.hpp"

#include <cctype>
#include <sstream>

namespace pluecker::numeric {

namespace {

struct Parser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }
    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }
    std::size_t mark() {
        skip_ws();
        return pos;
    }
    bool eat(char c) {
        if (peek() == c) {
            ++pos;
            return true;
        }
        return false;
    }

    polyring::BigInt integer() {
        skip_ws();
        const std::size_t start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == start) throw ParseError("expected a number", start);
        return polyring::BigInt(std::string(text.substr(start, pos - start)));
    }

    Rational coefficient() {
        Rational q{integer()};
        if (eat('/')) {
            const std::size_t den_pos = pos;
            polyring::BigInt den = integer();
            if (den == 0) throw ParseError("zero denominator", den_pos);
            q /= den;
        }
        return q;
    }

    // term := [coefficient ['*']] factor*   with factor := x|y|z ['^' int]
    void term(std::map<Monomial3, Rational>& acc, int sign) {
        const std::size_t term_pos = mark();
        Rational coeff{1};
        bool saw_anything = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = coefficient();
            saw_anything = true;
            eat('*');
        }
        Monomial3 mono;
        while (true) {
            const char c = peek();
            int* slot = nullptr;
            if (c == 'x') slot = &mono.x;
            else if (c == 'y') slot = &mono.y;
            else if (c == 'z') slot = &mono.z;
            else break;
            ++pos;
            saw_anything = true;
            int exponent = 1;
            if (eat('^')) {
                const std::size_t exp_pos = pos;
                const polyring::BigInt e = integer();
                if (e <= 0 || e > 64) throw ParseError("exponent must be a small positive integer", exp_pos);
                exponent = e.convert_to<int>();
            }
            *slot += exponent;
            eat('*');
        }
        if (!saw_anything) throw ParseError("expected a term", term_pos);
        if (mono.degree() == 0)
            throw ParseError("constant term: a plane curve must be homogeneous of positive degree",
                             term_pos);
        if (sign < 0) coeff = -coeff;
        acc[mono] += coeff;
    }

    std::map<Monomial3, Rational> run() {
        std::map<Monomial3, Rational> acc;
        int sign = 1;
        if (eat('+')) sign = 1;
        else if (eat('-')) sign = -1;
        term(acc, sign);
        const int degree = acc.begin()->first.degree();
        while (true) {
            const char c = peek();
            if (c == '\0') break;
            if (c == '+') sign = 1;
            else if (c == '-') sign = -1;
            else throw ParseError("expected '+' or '-'", pos);
            ++pos;
            const std::size_t tp = mark();
            std::map<Monomial3, Rational> one;
            term(one, sign);
            if (one.begin()->first.degree() != degree)
                throw ParseError("non-homogeneous: term of degree " +
                                     std::to_string(one.begin()->first.degree()) +
                                     " in a degree-" + std::to_string(degree) + " polynomial",
                                 tp);
            for (auto& [m, c2] : one) acc[m] += c2;
        }
        return acc;
    }
};

} // namespace

PlaneCurve PlaneCurve::from_terms(std::map<Monomial3, Rational> terms) {
    for (auto it = terms.begin(); it != terms.end();) {
        if (it->second == 0) it = terms.erase(it);
        else ++it;
    }
    if (terms.empty()) throw std::invalid_argument("zero polynomial is not a curve");
    PlaneCurve out;
    out.degree_ = terms.begin()->first.degree();
    if (out.degree_ <= 0) throw std::invalid_argument("curve must have positive degree");
    for (const auto& [m, c] : terms)
        if (m.degree() != out.degree_) throw std::invalid_argument("non-homogeneous terms");
    out.terms_ = std::move(terms);
    return out;
}

PlaneCurve PlaneCurve::parse(std::string_view text) {
    Parser parser{text};
    auto acc = parser.run();
    for (auto it = acc.begin(); it != acc.end();) {
        if (it->second == 0) it = acc.erase(it);
        else ++it;
    }
    if (acc.empty()) throw ParseError("all terms cancel: the zero polynomial is not a curve", 0);
    return from_terms(std::move(acc));
}

PlaneCurve PlaneCurve::random(int degree, std::uint64_t seed) {
    if (degree <= 0) throw std::invalid_argument("curve must have positive degree");
    Rng rng(seed * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
    std::map<Monomial3, Rational> terms;
    for (int i = 0; i <= degree; ++i) {
        for (int j = 0; i + j <= degree; ++j) {
            const int k = degree - i - j;
            long long c = 0;
            while (c == 0) c = static_cast<long long>(rng.next_u64() % 19) - 9;
            terms[{i, j, k}] = polyring::make_rational(c);
        }
    }
    return from_terms(std::move(terms));
}

std::string PlaneCurve::str() const {
    std::ostringstream out;
    bool first = true;
    // Iterate in graded-lex style: higher x powers first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        const Rational mag = negative ? Rational(-c) : c;
        std::string vars;
        auto put = [&](const char* name, int e) {
            if (e == 0) return;
            if (!vars.empty()) vars += "*";
            vars += name;
            if (e > 1) vars += "^" + std::to_string(e);
        };
        put("x", m.x);
        put("y", m.y);
        put("z", m.z);
        if (vars.empty()) {
            out << polyring::to_string(mag);
        } else {
            if (mag != 1) out << polyring::to_string(mag) << "*";
            out << vars;
        }
    }
    return out.str();
}

} // namespace pluecker::numeric
