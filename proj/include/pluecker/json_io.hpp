#pragma once

#include "pluecker/derivation.hpp"
#include "pluecker/solver.hpp"

#include <json.hpp>

#include <string>
#include <utility>
#include <vector>

namespace pluecker::io {

using ordered_json = nlohmann::ordered_json;

/// Stable JSON document for the derivation report; field names match the
/// report's intermediate names. schema_version 1.
ordered_json report_json(const derivation::DerivationReport& report);

/// {"summary": {degree, expected, found, agrees}, "solutions": [...]} with
/// solution fields {dual, t1, t2, residual, is_real}.
ordered_json bitangents_json(int degree, long expected,
                             const std::vector<numeric::TangencySolution>& solutions);

/// Same envelope with {point, residual, is_real} solutions.
ordered_json flexes_json(int degree, long expected,
                         const std::vector<numeric::FlexSolution>& solutions);

/// Named identity checks of the modeled rings, all expected to hold.
std::vector<std::pair<std::string, bool>> identity_checks();

} // namespace pluecker::io
