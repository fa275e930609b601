#pragma once

// Verification suites: golden tables for S1 to S4 and exhaustive identity
// checks for one rank. Every check is a PropertyCheck, so suites compose.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hecke/cells.hpp"
#include "hecke/hecke.hpp"

namespace hecke {

struct VerifyReport {
  std::string suite;
  int n = 0;
  std::vector<PropertyCheck> checks;
  /// True when no asserted check failed.
  bool passed() const;
};

/// Suite names accepted by run_verify.
const std::vector<std::string>& verify_suites();

/// Golden data of S2: bases in standard coordinates and the four structure
/// constant tables, compared through their JSON encodings.
std::vector<PropertyCheck> s2_golden_checks();
/// Golden data of S3: KL and dual KL elements, the KL table, the mixed
/// KL times dual KL table and the left cells.
std::vector<PropertyCheck> s3_golden_checks();
/// S4 cell data: left cell sizes and the involution Hasse diagram.
std::vector<PropertyCheck> s4_cell_checks();
/// Cyclic module claims in S3, for KL and dual KL generators.
std::vector<PropertyCheck> s3_cyclic_checks();
/// The S4 element whose cyclic module is smaller than its coideal span.
std::vector<PropertyCheck> s4_cyclic_checks();

/// All identity checks for the algebra H, exhaustive over its elements.
std::vector<PropertyCheck> identity_checks(const HeckeAlgebra& H, const CellData& C, int jobs = 1);

/// "paper-tables": golden checks for every rank up to min(n, 4).
/// "identities": identity_checks at rank n.
/// Throws std::invalid_argument for other suite names.
VerifyReport run_verify(std::string_view suite, const HeckeAlgebraPtr& H, int jobs = 1);

nlohmann::ordered_json to_json(const VerifyReport& r);

}  // namespace hecke
