#include "pluecker/json_io.hpp"

namespace pluecker::io {

namespace {

using chow::ChowClass;
using numeric::Complex;
using numeric::Vec3c;
using polyring::FormalPoly;
using polyring::make_rational;

ordered_json poly_or_int(const FormalPoly& p) {
    if (p.is_constant() && polyring::is_integer(p.coeff(0)))
        return ordered_json(polyring::to_long(p.coeff(0)));
    return ordered_json(p.str());
}

ordered_json complex_json(const Complex& z) { return ordered_json::array({z.real(), z.imag()}); }

ordered_json vec3_json(const Vec3c& v) {
    return ordered_json::array({complex_json(v[0]), complex_json(v[1]), complex_json(v[2])});
}

ordered_json summary_json(int degree, long expected, long found) {
    return {{"degree", degree},
            {"expected", expected},
            {"found", found},
            {"agrees", expected == found}};
}

} // namespace

ordered_json report_json(const derivation::DerivationReport& report) {
    ordered_json doc;
    doc["schema_version"] = 1;
    doc["phi1"] = report.phi1.str();
    doc["phi2"] = report.phi2.str();
    doc["phi_x"] = report.phi_x.str();
    doc["phi_x3"] = report.phi_x3.str();
    doc["lambda_2p1_p2"] = report.lambda_2p1_p2.str();
    ordered_json intermediates;
    for (const auto& [name, value] : report.intermediate_integrals)
        intermediates[name] = poly_or_int(value);
    doc["intermediates"] = intermediates;
    doc["lambda_2p1_2p2_integral"] = {
        {"polynomial", report.lambda_2p1_2p2_integral.str()},
        {"factored", polyring::factored_str(report.lambda_factors)},
        {"factoring_verified",
         polyring::equals_expansion(report.lambda_factors, report.lambda_2p1_2p2_integral)},
    };
    ordered_json bc = {{"polynomial", report.bitangent_count.str()}};
    ordered_json fc = {{"polynomial", report.flex_count.str()}};
    for (long long d = 2; d <= 6; ++d) {
        bc["at_" + std::to_string(d)] =
            polyring::to_long(report.bitangent_count.evaluate(make_rational(d)));
        fc["at_" + std::to_string(d)] =
            polyring::to_long(report.flex_count.evaluate(make_rational(d)));
    }
    doc["bitangent_count"] = bc;
    doc["flex_count"] = fc;
    return doc;
}

ordered_json bitangents_json(int degree, long expected,
                             const std::vector<numeric::TangencySolution>& solutions) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : solutions)
        arr.push_back({{"dual", vec3_json(s.line.dual)},
                       {"t1", complex_json(s.t1)},
                       {"t2", complex_json(s.t2)},
                       {"residual", s.residual},
                       {"is_real", s.is_real}});
    return {{"schema_version", 1},
            {"summary", summary_json(degree, expected, static_cast<long>(solutions.size()))},
            {"solutions", arr}};
}

ordered_json flexes_json(int degree, long expected,
                         const std::vector<numeric::FlexSolution>& solutions) {
    ordered_json arr = ordered_json::array();
    for (const auto& s : solutions)
        arr.push_back(
            {{"point", vec3_json(s.point)}, {"residual", s.residual}, {"is_real", s.is_real}});
    return {{"schema_version", 1},
            {"summary", summary_json(degree, expected, static_cast<long>(solutions.size()))},
            {"solutions", arr}};
}

std::vector<std::pair<std::string, bool>> identity_checks() {
    using chow::classes_equal;
    const auto& x1 = chow::x1_space();
    const auto& x2 = chow::x2_space();
    const ChowClass eta = ChowClass::generator(x1, "eta");
    const ChowClass iota = ChowClass::generator(x1, "iota");
    const ChowClass h1 = ChowClass::generator(x2, "h1");
    const ChowClass h2 = ChowClass::generator(x2, "h2");
    const ChowClass e = ChowClass::generator(x2, "e");
    const ChowClass psi_x = chow::psi(x1, 1);
    const FormalPoly one = FormalPoly::constant(1);

    std::vector<std::pair<std::string, bool>> out;
    out.emplace_back("(a) iota*eta^2 = eta*iota^2 = pt",
                     (iota * eta * eta).integrate() == one &&
                         (eta * iota * iota).integrate() == one);
    out.emplace_back("(b) eta*iota = eta^2 + iota^2 (first lemma)",
                     classes_equal(eta * iota, eta * eta + iota * iota));
    out.emplace_back("(c) psi = iota - 2*eta via its pairings (second lemma)",
                     (psi_x * eta * eta).integrate() == one &&
                         (psi_x * iota * iota).integrate() == FormalPoly::constant(-2));
    out.emplace_back("(d) h_i^3 = 0", (h1 * h1 * h1).is_zero() && (h2 * h2 * h2).is_zero());
    out.emplace_back("(e) psi_i = pullback of psi + e",
                     classes_equal(chow::psi(x2, 1), chow::pullback_pi(2, psi_x) + e) &&
                         classes_equal(chow::psi(x2, 2), chow::pullback_pi(1, psi_x) + e));
    bool f_ok = true, g_ok = true;
    for (const auto& m : x2.monomials_of_degree(2)) {
        const ChowClass probe = ChowClass::monomial(x2, m);
        for (int mark : {1, 2}) {
            f_ok = f_ok && (e * chow::psi(x2, mark) * probe).integrate().is_zero();
            g_ok = g_ok &&
                   ((e * e + e * chow::pullback_pi(mark, psi_x)) * probe).integrate().is_zero();
        }
    }
    out.emplace_back("(f) e*psi_i pairs to zero", f_ok);
    out.emplace_back("(g) e^2 = -e * pullback of psi as a pairing identity", g_ok);
    out.emplace_back("(h) e*h1 = e*h2", classes_equal(e * h1, e * h2));
    const ChowClass phi_x = derivation::tangency_cycle_1pt();
    out.emplace_back(
        "(i) section pushforward of phi_x = e*phi_1 = e*phi_2",
        classes_equal(chow::pushforward_sigma(phi_x), e * derivation::tangency_cycle(1)) &&
            classes_equal(chow::pushforward_sigma(phi_x), e * derivation::tangency_cycle(2)));
    out.emplace_back("(j) h_i is the pullback of eta under the other forgetful map",
                     classes_equal(h1, chow::pullback_pi(2, eta)) &&
                         classes_equal(h2, chow::pullback_pi(1, eta)));
    const ChowClass etaZ = eta.scaled(FormalPoly::symbol());
    out.emplace_back("jet route: order-1 top Chern class equals phi_x",
                     classes_equal(chow::jet_total_chern(etaZ, psi_x, 1).component(2), phi_x));
    out.emplace_back(
        "jet route: order-2 top Chern class equals phi_x3",
        classes_equal(chow::jet_total_chern(etaZ, psi_x, 2).component(3),
                      derivation::inflection_cycle_1pt()));
    return out;
}

} // namespace pluecker::io
