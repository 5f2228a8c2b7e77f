#pragma once

#include "tetra/json_io.hpp"
#include "tetra/tetra_poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace tetra {

struct VerificationReport {
  std::string identity;
  int n = 0;
  bool equal = false;
  std::optional<std::string> first_diff_monomial;
  long elapsed_ms = 0;
  std::string lhs;  // rendered left-hand side, informational
};

/// Identities: rr, asm, tsscpp, tsscpp-count, schur, formulas. "formulas"
/// yields one report per admissible color set with a closed form.
std::vector<VerificationReport> verify_identity(const std::string& identity, int n,
                                                const Budget& budget = {});
const std::vector<std::string>& identity_names();

Json to_json(const VerificationReport& r);

}  // namespace tetra
