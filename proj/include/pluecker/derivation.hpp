#pragma once

#include "pluecker/chow.hpp"

#include <string>
#include <utility>
#include <vector>

namespace pluecker::derivation {

using chow::ChowClass;
using polyring::FormalPoly;
using polyring::Rational;

/// Multiplicity of the boundary pieces removed in both cleanup stages of the
/// bitangent computation. Kept as a named constant so an excess-intersection
/// treatment could replace it.
inline constexpr long long kBoundaryMultiplicity = 2;

/// Cycle of maps tangent to a degree-d curve at the given mark, on the
/// two-pointed space: d*h_i*(d*h_i + psi_i - e). The boundary term -e
/// discards maps whose contracted twig lands inside the curve.
ChowClass tangency_cycle(int mark);

/// Same on the one-pointed space (which has no boundary): d*eta*(d*eta + psi).
ChowClass tangency_cycle_1pt();

/// Cycle of inflection tangents on the one-pointed space, computed directly
/// as d*eta*(d*eta + psi)*(d*eta + 2*psi) and cross-checked against the top
/// Chern class of the order-2 jet bundle.
ChowClass inflection_cycle_1pt();

/// Its integral: 3d^2 - 6d.
FormalPoly inflection_count();

/// First cleanup stage: maps tangent at mark 1 whose second mark meets the
/// curve away from a contracted twig: d*h2*Phi_1 - 2*sigma_*(Phi).
ChowClass bitangency_stage1();

/// Degree-4 bitangency class: both marks tangent, boundary contributions
/// removed with multiplicity 2.
ChowClass bitangency_class();

/// Integral of the bitangency class: d^4 - 2d^3 - 9d^2 + 18d, counting
/// tangent lines with an ordered pair of tangency marks.
FormalPoly bitangency_integral();

/// The factored form of the bitangency integral, d(d-2)(d-3)(d+3);
/// verified against the expansion, never produced by factoring.
std::vector<FormalPoly> bitangency_integral_factors();

/// Number of bitangents of a generic degree-d plane curve (mark order
/// quotiented out): half the bitangency integral.
FormalPoly bitangent_count();

/// Number of inflection tangents: 3d^2 - 6d.
FormalPoly flex_count();

Rational bitangent_count_at(long long degree);
Rational flex_count_at(long long degree);

/// Everything the computation produces, with each intermediate integral
/// under a stable name (used verbatim in the CLI and JSON output).
struct DerivationReport {
    ChowClass phi1;
    ChowClass phi2;
    ChowClass phi_x;
    ChowClass phi_x3;
    ChowClass lambda_2p1_p2;
    FormalPoly lambda_2p1_2p2_integral;
    FormalPoly bitangent_count;
    FormalPoly flex_count;
    std::vector<FormalPoly> lambda_factors;
    std::vector<std::pair<std::string, FormalPoly>> intermediate_integrals;

    const FormalPoly& intermediate(const std::string& name) const;
};

/// Runs the whole pipeline from the ring primitives; nothing here reads the
/// integral values back from a table of known answers.
DerivationReport derivation_report();

} // namespace pluecker::derivation
