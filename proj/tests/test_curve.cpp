#include <doctest.h>

#include "pluecker/curve.hpp"
#include "pluecker/solver.hpp"

using namespace pluecker::numeric;
using pluecker::polyring::make_rational;

TEST_CASE("parsing the standard examples") {
    const PlaneCurve fermat = PlaneCurve::parse("x^4 + y^4 + z^4");
    CHECK(fermat.degree() == 4);
    CHECK(fermat.terms().size() == 3);
    CHECK(fermat.str() == "x^4 + y^4 + z^4");

    const PlaneCurve trott = PlaneCurve::parse(
        "144x^4 + 144y^4 - 225x^2z^2 - 225y^2z^2 + 350x^2y^2 + 81z^4");
    CHECK(trott.degree() == 4);
    CHECK(trott.terms().size() == 6);
    CHECK(trott.terms().at(Monomial3{2, 2, 0}) == 350);
    CHECK(trott.terms().at(Monomial3{0, 0, 4}) == 81);
}

TEST_CASE("parser accepts stars, fractions and arbitrary whitespace") {
    const PlaneCurve a = PlaneCurve::parse("3/2 * x^2*y + y^3   -z^2 * x");
    CHECK(a.degree() == 3);
    CHECK(a.terms().at(Monomial3{2, 1, 0}) == make_rational(3, 2));
    CHECK(a.terms().at(Monomial3{1, 0, 2}) == -1);

    // Repeated variables multiply.
    const PlaneCurve b = PlaneCurve::parse("x*x*y^2");
    CHECK(b.terms().count(Monomial3{2, 2, 0}) == 1);
}

TEST_CASE("parser errors carry positions") {
    CHECK_THROWS_AS(PlaneCurve::parse("x^2 + y"), ParseError);
    try {
        PlaneCurve::parse("x^2 + y");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.position == 6);  // the offending term
        CHECK(std::string(e.what()).find("non-homogeneous") != std::string::npos);
    }

    CHECK_THROWS_AS(PlaneCurve::parse(""), ParseError);
    CHECK_THROWS_AS(PlaneCurve::parse("x^2 + * y^2"), ParseError);
    CHECK_THROWS_AS(PlaneCurve::parse("x^0 + y"), ParseError);
    CHECK_THROWS_AS(PlaneCurve::parse("5"), ParseError);
    CHECK_THROWS_AS(PlaneCurve::parse("1/0 x^2"), ParseError);
    CHECK_THROWS_AS(PlaneCurve::parse("x^2 - x^2"), ParseError);  // cancels to zero
    CHECK_THROWS_AS(PlaneCurve::parse("x^2 + w^2"), ParseError);
}

TEST_CASE("restriction to a line") {
    const PlaneCurve fermat = PlaneCurve::parse("x^4 + y^4 + z^4");
    const Vec3c a{1.0, 0.0, 0.0}, b{0.0, 1.0, 0.0};
    const auto p = restrict_to_line(fermat, a, b);
    REQUIRE(p.size() == 5);
    CHECK(std::abs(p[0] - 1.0) < 1e-14);
    CHECK(std::abs(p[4] - 1.0) < 1e-14);
    for (int k : {1, 2, 3}) CHECK(std::abs(p[k]) < 1e-14);

    // Tangent line of a conic: double root at t = 0.
    const PlaneCurve conic = PlaneCurve::parse("x^2 + y^2 - z^2");
    const auto q = restrict_to_line(conic, Vec3c{1.0, 0.0, 1.0}, Vec3c{0.0, 1.0, 0.0});
    REQUIRE(q.size() == 3);
    CHECK(std::abs(q[0]) < 1e-14);
    CHECK(std::abs(q[1]) < 1e-14);
    CHECK(std::abs(q[2] - 1.0) < 1e-14);

    // A line inside a reducible curve.
    const PlaneCurve reducible = PlaneCurve::parse("x*y^3");
    CHECK_THROWS_AS(restrict_to_line(reducible, Vec3c{0.0, 1.0, 0.0}, Vec3c{0.0, 0.0, 1.0}),
                    std::domain_error);

    // Degenerate frame: both points equal.
    CHECK_THROWS_AS(restrict_to_line(fermat, a, a), std::invalid_argument);
}

TEST_CASE("realness by phase rotation") {
    CHECK(phase_realizable(Vec3c{1.0, -2.0, 0.5}, 1e-8));
    CHECK_FALSE(phase_realizable(Vec3c{1.0, Complex(0.0, 1.0), 0.0}, 1e-3));
    CHECK(phase_realizable(Vec3c{Complex(0, 1), Complex(0, 2), Complex(0, 3)}, 1e-8));

    const auto rep = real_representative(Vec3c{Complex(0, 1), Complex(0, 2), Complex(0, 3)});
    CHECK(rep[0] == doctest::Approx(1.0));
    CHECK(rep[2] == doctest::Approx(3.0));
}

TEST_CASE("random curves are reproducible") {
    const PlaneCurve a = PlaneCurve::random(4, 7);
    const PlaneCurve b = PlaneCurve::random(4, 7);
    CHECK(a.terms() == b.terms());
    CHECK(a.degree() == 4);
    CHECK(a.terms().size() == 15);  // dense quartic
    CHECK(PlaneCurve::random(4, 8).terms() != a.terms());
}
