#include "tetra/verify.hpp"

#include "tetra/errors.hpp"
#include "tetra/formulas.hpp"
#include "tetra/identities.hpp"

#include <chrono>
#include <functional>

namespace tetra {

namespace {

using Clock = std::chrono::steady_clock;

long millis_since(Clock::time_point start) {
  return static_cast<long>(
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count());
}

VerificationReport compare(const std::string& name, int n, const std::function<SparsePoly()>& lhs,
                           const std::function<SparsePoly()>& rhs) {
  const auto start = Clock::now();
  const SparsePoly a = lhs();
  const SparsePoly b = rhs();
  VerificationReport r;
  r.identity = name;
  r.n = n;
  if (auto diff = first_difference(a, b)) r.first_diff_monomial = diff->to_string();
  r.equal = !r.first_diff_monomial;
  r.elapsed_ms = millis_since(start);
  r.lhs = a.to_string();
  return r;
}

VerificationReport lambda_count_report(int n) {
  const auto start = Clock::now();
  const QPoly lhs = tsscpp_lambda_count(n);
  const QPoly rhs = (QPoly{1, 1}).pow(static_cast<unsigned>(n * (n - 1) / 2));
  VerificationReport r;
  r.identity = "tsscpp-count";
  r.n = n;
  const QPoly diff = lhs - rhs;
  if (!diff.is_zero()) r.first_diff_monomial = Monomial::lambda_power(diff.valuation()).to_string();
  r.equal = diff.is_zero();
  r.elapsed_ms = millis_since(start);
  r.lhs = lhs.to_string("lambda");
  return r;
}

std::vector<VerificationReport> formula_reports(int n, const Budget& budget) {
  if (n < 2) throw InvalidInput("formula verification needs n >= 2");
  std::vector<VerificationReport> out;
  auto parent = std::make_shared<const TetraPoset>(TetraPoset::build(n));
  for (const ColorSet& s : admissible_color_sets()) {
    const auto family = formula_family(s);
    if (!family) continue;
    const auto start = Clock::now();
    const Subposet p(parent, s);
    VerificationReport r;
    r.identity = "formulas:" + s.letters();
    r.n = n;
    const BigInt enumerated = count_ideals(p, CountMethod::Enumerate, budget);
    const BigInt closed = formula_count(n, s);
    if (enumerated != closed) r.first_diff_monomial = "count " + enumerated.str() + " != " + closed.str();
    r.lhs = enumerated.str();
    if (!r.first_diff_monomial && has_q_formula(s)) {
      const Subposet target = *family == FormulaFamily::AdjacentPairDual ? p.dual() : p;
      const QPoly gf = rank_gf(target, CountMethod::Enumerate, budget);
      const QPoly expected = formula_rank_gf(n, s);
      const QPoly diff = gf - expected;
      if (!diff.is_zero()) r.first_diff_monomial = "q^" + std::to_string(diff.valuation());
      r.lhs = gf.to_string();
    }
    r.equal = !r.first_diff_monomial;
    r.elapsed_ms = millis_since(start);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

const std::vector<std::string>& identity_names() {
  static const std::vector<std::string> names{"rr", "asm", "tsscpp", "tsscpp-count", "schur", "formulas"};
  return names;
}

std::vector<VerificationReport> verify_identity(const std::string& identity, int n, const Budget& budget) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (identity == "rr")
    return {compare("rr", n, [n] { return tournament_gf(n); }, [n] { return robbins_rumsey_rhs(n); })};
  if (identity == "asm")
    return {compare("asm", n, [n] { return tournament_gf(n); }, [n] { return asm_expansion_rhs(n); })};
  if (identity == "tsscpp")
    return {compare("tsscpp", n, [n] { return tournament_gf(n); }, [n] { return tsscpp_expansion_rhs(n); })};
  if (identity == "tsscpp-count") return {lambda_count_report(n)};
  if (identity == "schur")
    return {compare("schur", n, [n] { return schur_staircase_product(n); }, [n] { return schur_staircase_sum(n); })};
  if (identity == "formulas") return formula_reports(n, budget);
  throw InvalidInput("unknown identity '" + identity + "'");
}

Json to_json(const VerificationReport& r) {
  Json out;
  out["identity"] = r.identity;
  out["n"] = r.n;
  out["status"] = r.equal ? "equal" : "mismatch";
  if (r.first_diff_monomial) out["first_diff_monomial"] = *r.first_diff_monomial;
  out["elapsed_ms"] = r.elapsed_ms;
  out["lhs"] = r.lhs;
  return out;
}

}  // namespace tetra
