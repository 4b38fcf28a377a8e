#include "pluecker/derivation.hpp"

#include <stdexcept>

namespace pluecker::derivation {

using chow::classes_equal;
using chow::ChowClass;
using chow::jet_total_chern;
using chow::psi;
using chow::pullback_pi;
using chow::pushforward_sigma;
using chow::x1_space;
using chow::x2_space;

namespace {

const FormalPoly kD = FormalPoly::symbol();

/// d*eta(Z): the mark lands on the curve.
ChowClass curve_incidence_1pt() {
    return ChowClass::generator(x1_space(), "eta").scaled(kD);
}

/// d*h_i(Z): the given mark lands on the curve.
ChowClass curve_incidence(int mark) {
    if (mark != 1 && mark != 2) throw std::invalid_argument("mark must be 1 or 2");
    return ChowClass::generator(x2_space(), mark == 1 ? "h1" : "h2").scaled(kD);
}

/// d*h_i + psi_i - e: the degree-1 factor imposing second-order vanishing
/// at the given mark on top of incidence.
ChowClass tangency_factor(int mark) {
    return curve_incidence(mark) + psi(x2_space(), mark) -
           ChowClass::generator(x2_space(), "e");
}

} // namespace

ChowClass tangency_cycle(int mark) {
    return curve_incidence(mark) * tangency_factor(mark);
}

ChowClass tangency_cycle_1pt() {
    const ChowClass etaZ = curve_incidence_1pt();
    return etaZ * (etaZ + psi(x1_space(), 1));
}

ChowClass inflection_cycle_1pt() {
    const ChowClass etaZ = curve_incidence_1pt();
    const ChowClass psi_x = psi(x1_space(), 1);
    const ChowClass direct = etaZ * (etaZ + psi_x) * (etaZ + psi_x.scaled(Rational(2)));
    // The same class as the Euler class of the order-2 jet bundle.
    const ChowClass via_jets = jet_total_chern(etaZ, psi_x, 2).component(3);
    if (!classes_equal(direct, via_jets))
        throw std::logic_error("inflection cycle disagrees with the jet-bundle route");
    return direct;
}

FormalPoly inflection_count() { return inflection_cycle_1pt().integrate(); }

ChowClass bitangency_stage1() {
    return curve_incidence(2) * tangency_cycle(1) -
           pushforward_sigma(tangency_cycle_1pt()).scaled(Rational(kBoundaryMultiplicity));
}

ChowClass bitangency_class() {
    return tangency_factor(2) * bitangency_stage1() -
           pushforward_sigma(inflection_cycle_1pt()).scaled(Rational(kBoundaryMultiplicity));
}

FormalPoly bitangency_integral() { return bitangency_class().integrate(); }

std::vector<FormalPoly> bitangency_integral_factors() {
    const Rational one(1);
    std::vector<FormalPoly> factors = {
        kD,
        FormalPoly::linear(one, Rational(-2)),
        FormalPoly::linear(one, Rational(-3)),
        FormalPoly::linear(one, Rational(3)),
    };
    if (!polyring::equals_expansion(factors, bitangency_integral()))
        throw std::logic_error("factored form fails to expand to the bitangency integral");
    return factors;
}

FormalPoly bitangent_count() {
    return bitangency_integral().scaled(Rational(1, 2));
}

FormalPoly flex_count() { return inflection_count(); }

Rational bitangent_count_at(long long degree) {
    return bitangent_count().evaluate(Rational(degree));
}

Rational flex_count_at(long long degree) {
    return flex_count().evaluate(Rational(degree));
}

const FormalPoly& DerivationReport::intermediate(const std::string& name) const {
    for (const auto& [key, value] : intermediate_integrals)
        if (key == name) return value;
    throw std::out_of_range("no intermediate named '" + name + "'");
}

DerivationReport derivation_report() {
    const auto& x2 = x2_space();
    const ChowClass h1 = ChowClass::generator(x2, "h1");
    const ChowClass h2 = ChowClass::generator(x2, "h2");
    const ChowClass e = ChowClass::generator(x2, "e");
    const ChowClass psi1 = psi(x2, 1);
    const ChowClass psi2 = psi(x2, 2);

    DerivationReport report{
        .phi1 = tangency_cycle(1),
        .phi2 = tangency_cycle(2),
        .phi_x = tangency_cycle_1pt(),
        .phi_x3 = inflection_cycle_1pt(),
        .lambda_2p1_p2 = bitangency_stage1(),
        .lambda_2p1_2p2_integral = bitangency_integral(),
        .bitangent_count = derivation::bitangent_count(),
        .flex_count = derivation::flex_count(),
        .lambda_factors = bitangency_integral_factors(),
        .intermediate_integrals = {},
    };

    auto put = [&](std::string name, FormalPoly value) {
        report.intermediate_integrals.emplace_back(std::move(name), std::move(value));
    };
    put("eta1^2.eta2^2", (h1 * h1 * h2 * h2).integrate());
    put("eta1^2.eta2.psi2", (h1 * h1 * h2 * psi2).integrate());
    put("eta2^2.eta1.psi1", (h2 * h2 * h1 * psi1).integrate());
    put("eta1.eta2.psi1.psi2", (h1 * h2 * psi1 * psi2).integrate());
    put("eta1^2.beta^2", (h1 * h1 * e * e).integrate());
    put("eta1.beta^3", (h1 * e * e * e).integrate());
    put("phi1.phi2", (report.phi1 * report.phi2).integrate());
    put("boundary_correction",
        (tangency_factor(2) * pushforward_sigma(report.phi_x)).integrate());
    put("phi_x3", report.phi_x3.integrate());
    return report;
}

} // namespace pluecker::derivation
