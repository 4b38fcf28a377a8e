#pragma once

#include "pluecker/formal_poly.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pluecker::chow {

using polyring::FormalPoly;
using polyring::Rational;

/// Exponent vector over a space's generators, one entry per generator.
using Exponents = std::vector<int>;

/// Presentation of a Chow ring used for computation: named degree-1
/// generators, per-generator nilpotency bounds, and a total top-degree
/// integral table (monomials not listed integrate to 0).
///
/// Relations that are not monomial (such as the incidence-variety relation
/// between the two hyperplane pullbacks) are deliberately NOT rewritten
/// into the monomial basis; they are enforced through the integral table
/// and the pairing-based equality test.
struct SpaceModel {
    std::string name;
    std::vector<std::string> generators;
    int dimension = 0;
    std::vector<int> nilpotency;                   // generator^bound == 0
    std::map<Exponents, Rational> integral_table;  // keys have total degree == dimension

    int generator_index(std::string_view gen) const;          // throws on unknown name
    bool monomial_vanishes(const Exponents& exps) const;      // nilpotency or dimension
    Rational integral_of(const Exponents& top_monomial) const;
    /// All degree-k monomials surviving the nilpotency bounds.
    std::vector<Exponents> monomials_of_degree(int k) const;
};

/// A^*(P^n) = Q[H]/(H^{n+1}) with integral H^n = 1.
const SpaceModel& projective_space(int n);

/// The one-pointed space of lines: the incidence variety in P^2 x (P^2)^v.
/// Generators eta (mark constrained to a line) and iota (image line through
/// a point); dimension 3; eta^3 = iota^3 = 0; eta^2*iota = eta*iota^2 = pt.
const SpaceModel& x1_space();

/// The two-pointed space of lines: the blow-up of P^2 x P^2 along the
/// diagonal. Generators h1, h2 (hyperplane pullbacks) and e (the exceptional
/// divisor, which is the boundary); dimension 4; h1^3 = h2^3 = 0.
/// Table: h1^2 h2^2 = 1; a+b=3,c=1 -> 0; a+b=2,c=2 -> -1; h_i e^3 = -3;
/// e^4 = -6 (minus the degree-2 Segre class of the tangent bundle of P^2).
const SpaceModel& x2_space();

/// Element of a modeled Chow ring: free combination of generator monomials
/// with FormalPoly coefficients. Monomials killed by nilpotency or exceeding
/// the dimension are dropped on construction; zero coefficients are pruned.
/// Values are immutable after construction; all operations are pure.
class ChowClass {
public:
    explicit ChowClass(const SpaceModel& space) : space_(&space) {}

    /// A single named term, e.g. {{"h1", 2}, {"e", 1}} with a coefficient.
    /// Throws on unknown generator names or total degree > dimension.
    static ChowClass from_terms(
        const SpaceModel& space,
        const std::vector<std::pair<std::vector<std::pair<std::string, int>>, FormalPoly>>& terms);
    static ChowClass generator(const SpaceModel& space, std::string_view name);
    static ChowClass one(const SpaceModel& space);
    static ChowClass monomial(const SpaceModel& space, const Exponents& exps,
                              FormalPoly coeff = FormalPoly::constant(1));

    const SpaceModel& space() const { return *space_; }
    const std::map<Exponents, FormalPoly>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }  // zero as a free polynomial
    /// True iff all terms share one degree; a zero class is homogeneous of any degree.
    bool is_homogeneous(int* degree_out = nullptr) const;
    ChowClass degree_part(int k) const;
    std::vector<int> degrees_present() const;

    ChowClass operator-() const;
    friend ChowClass operator+(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator-(const ChowClass& a, const ChowClass& b);
    friend ChowClass operator*(const ChowClass& a, const ChowClass& b);
    ChowClass scaled(const FormalPoly& c) const;
    ChowClass scaled(const Rational& c) const { return scaled(FormalPoly(c)); }
    ChowClass pow(int k) const;

    /// Substitute a rational value for the formal symbol in every coefficient.
    ChowClass evaluate_d(const Rational& value) const;

    /// Pair the top-degree part against the integral table; lower-degree
    /// parts contribute 0.
    FormalPoly integrate() const;

    /// Terms sorted by degree then lexicographically, e.g.
    /// "(d^2-2*d)*h1^2 + (d)*h1*h2". Non-constant coefficients in parens.
    std::string str() const;

private:
    const SpaceModel* space_;
    std::map<Exponents, FormalPoly> terms_;
    void accumulate(const Exponents& exps, const FormalPoly& coeff);
    friend void check_same_space(const ChowClass& a, const ChowClass& b);
};

/// Equality modulo relations: the difference pairs to zero against every
/// monomial of complementary degree (numerical equivalence, which on these
/// spaces coincides with rational equivalence).
bool classes_equal(const ChowClass& a, const ChowClass& b);

/// The cotangent-line class at a mark. On the one-pointed space (the only
/// mark) it is iota - 2*eta; on the two-pointed space psi_1 = h2 - h1 and
/// psi_2 = h1 - h2.
ChowClass psi(const SpaceModel& space, int mark);

/// Pullback along the map forgetting the given mark, from the one-pointed
/// to the two-pointed space. Ring homomorphism determined on generators:
/// eta -> h_{3-i} (the surviving mark's hyperplane pullback) and
/// iota -> h1 + h2 - e (the strict transform of the collinearity divisor).
ChowClass pullback_pi(int forgotten_mark, const ChowClass& on_x1);

/// Pushforward along the common section of the two forgetful maps, whose
/// image is the boundary divisor: sigma_*(a) = e * pi_2^*(a).
ChowClass pushforward_sigma(const ChowClass& on_x1);

/// The involution of the two-pointed space exchanging the marks: h1 <-> h2.
ChowClass swap_marks(const ChowClass& on_x2);

/// Inhomogeneous class c_0 + c_1 + ... with c_0 = 1 exactly.
class TotalChern {
public:
    explicit TotalChern(ChowClass value);
    const ChowClass& value() const { return value_; }
    ChowClass component(int k) const { return value_.degree_part(k); }

private:
    ChowClass value_;
};

/// Total Chern class of the order-k jet bundle of a line bundle along the
/// fibers of a curve family: the jet filtration has line-bundle graded
/// pieces L (x) Omega^j, so c = prod_{j=0..k} (1 + c1(L) + j*c1(Omega)).
TotalChern jet_total_chern(const ChowClass& c1_line, const ChowClass& c1_cotangent, int order);

/// c1 of the dual of a line bundle.
ChowClass chern_dual_line(const ChowClass& c1);

/// Whitney product for an extension of bundles.
TotalChern chern_whitney_product(const TotalChern& sub, const TotalChern& quot);

/// dim of the space of n-pointed rational stable maps of degree d to P^r.
long long moduli_dim(long long r, long long map_degree, long long n);

} // namespace pluecker::chow
