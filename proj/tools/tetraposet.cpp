// Command-line front end for the tetrahedral poset library.
//
// Exit codes: 0 success, 2 invalid input, 3 no formula available,
// 4 constraint-family mismatch, 5 identity mismatch.

#include "tetra/errors.hpp"
#include "tetra/formulas.hpp"
#include "tetra/identities.hpp"
#include "tetra/json_io.hpp"
#include "tetra/objects.hpp"
#include "tetra/tetra_poset.hpp"
#include "tetra/verify.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace tetra;

enum ExitCode { kOk = 0, kInvalid = 2, kNoFormula = 3, kMismatch = 4, kIdentityMismatch = 5 };

Subposet make_subposet(int n, const std::string& letters, bool dual = false) {
  Subposet p = Subposet::of(n, ColorSet::parse(letters));
  return dual ? p.dual() : p;
}

Json read_json(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path);
    if (!in) throw InvalidInput("cannot open input file '" + path + "'");
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("input is not valid JSON: ") + e.what());
  }
}

struct CountArgs {
  int n = 0;
  std::string colors;
  bool q = false;
  bool json = false;
  std::string method = "dp";
};

int run_count(const CountArgs& a) {
  const ColorSet s = ColorSet::parse(a.colors);
  if (auto bad = admissibility_violation(s)) {
    std::cerr << "error: color set {" << s.letters() << "} is not admissible: " << *bad << "\n";
    return kInvalid;
  }
  BigInt count;
  std::optional<QPoly> gf;
  if (a.method == "formula") {
    if (a.n < 1) throw InvalidInput("n must be at least 1");
    count = formula_count(a.n, s);
    if (a.q) gf = formula_rank_gf(a.n, s);
  } else {
    const Subposet p = Subposet::of(a.n, s);
    const Budget budget = Budget::from_env();
    const CountMethod method = a.method == "enum" ? CountMethod::Enumerate : CountMethod::Auto;
    if (a.q) {
      gf = rank_gf(p, method, budget);
      count = gf->at_one();
    } else {
      count = count_ideals(p, method, budget);
    }
  }
  if (a.json) {
    Json out;
    out["n"] = a.n;
    out["colors"] = s.letters();
    out["method"] = a.method;
    out["count"] = count.str();
    if (gf) out["rank_gf"] = to_json(*gf);
    std::cout << out.dump() << "\n";
  } else {
    std::cout << count.str() << "\n";
    if (gf) std::cout << gf->to_string() << "\n";
  }
  return kOk;
}

struct ConvertArgs {
  std::string from, to, input = "-", colors;
  int n = 0;
};

StaircaseArray to_array(const ConvertArgs& a, const Json& in) {
  if (a.from == "asm") return mt_to_array(asm_to_mt(asm_from_json(in)));
  if (a.from == "mt") return mt_to_array(mt_from_json(in));
  if (a.from == "tsscpp") return tsscpp_to_array(tsscpp_from_json(in));
  if (a.from == "tournament") return tournament_to_array(tournament_from_json(in));
  if (a.from == "array") return array_from_json(in);
  if (a.colors.empty() || a.n < 1) throw InvalidInput("--from ideal needs --n and --colors");
  const Subposet p = make_subposet(a.n, a.colors);
  return ideal_to_array(p, ideal_from_json(p, in));
}

Json from_array(const ConvertArgs& a, const StaircaseArray& x) {
  if (a.to == "asm") return to_json(mt_to_asm(array_to_mt(x)));
  if (a.to == "mt") return to_json(array_to_mt(x));
  if (a.to == "tsscpp") return to_json(array_to_tsscpp(x));
  if (a.to == "tournament") return to_json(array_to_tournament(x));
  if (a.to == "array") return to_json(x);
  if (a.colors.empty()) throw InvalidInput("--to ideal needs --colors");
  const Subposet p = make_subposet(x.n(), a.colors);
  return ideal_to_json(p.parent(), array_to_ideal(p, x));
}

int run_convert(const ConvertArgs& a) {
  const StaircaseArray x = to_array(a, read_json(a.input));
  std::cout << from_array(a, x).dump() << "\n";
  return kOk;
}

int run_verify(const std::string& identity, int n, bool no_timing) {
  const auto reports = verify_identity(identity, n, Budget::from_env());
  int code = kOk;
  for (auto r : reports) {
    if (no_timing) r.elapsed_ms = 0;
    std::cout << to_json(r).dump() << "\n";
    if (!r.equal) {
      std::cerr << "mismatch in " << r.identity << " at n=" << r.n << ": first differing monomial "
                << r.first_diff_monomial.value_or("?") << "\n";
      code = kIdentityMismatch;
    }
  }
  return code;
}

int run_export_dot(int n, const std::string& colors, bool dual, const std::string& output) {
  const std::string dot = to_dot(make_subposet(n, colors, dual));
  if (output == "-") {
    std::cout << dot;
    return kOk;
  }
  std::ofstream out(output);
  if (!out) throw std::runtime_error("cannot open output file '" + output + "'");
  out << dot;
  if (!out) throw std::runtime_error("write to '" + output + "' failed");
  return kOk;
}

int run_seed_list(const std::string& family, int n, const std::string& colors) {
  auto emit = [](const Json& j) { std::cout << j.dump() << "\n"; };
  const Budget budget = Budget::from_env();
  if (family == "asm") {
    for_each_asm(n, [&](const Asm& a) { emit(to_json(a)); });
  } else if (family == "mt") {
    for_each_asm(n, [&](const Asm& a) { emit(to_json(asm_to_mt(a))); });
  } else if (family == "tsscpp") {
    enumerate_arrays(n, kTsscppColors, [&](const StaircaseArray& x) { emit(to_json(array_to_tsscpp(x))); },
                     budget.max_ideals);
  } else if (family == "tournament") {
    for_each_tournament(n, [&](const Tournament& t) { emit(to_json(t)); });
  } else if (family == "array") {
    if (colors.empty()) throw InvalidInput("--family array needs --colors");
    enumerate_arrays(n, ColorSet::parse(colors), [&](const StaircaseArray& x) { emit(to_json(x)); },
                     budget.max_ideals);
  } else {
    if (colors.empty()) throw InvalidInput("--family ideal needs --colors");
    const Subposet p = make_subposet(n, colors);
    enumerate_ideals(p, [&](const OrderIdeal& ideal) { emit(ideal_to_json(p.parent(), ideal)); }, budget);
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetrahedral poset toolkit: order ideals, bijections and tournament identities"};
  app.require_subcommand(1);

  CountArgs count;
  auto* c = app.add_subcommand("count", "Count order ideals of T_n(S)");
  c->add_option("--n", count.n, "Order n")->required();
  c->add_option("--colors", count.colors, "Compact color set, e.g. gybo")->required();
  c->add_flag("--q", count.q, "Also print the rank generating function");
  c->add_option("--method", count.method, "dp, enum or formula")
      ->check(CLI::IsMember({"dp", "enum", "formula"}));
  c->add_flag("--json", count.json, "JSON output");

  ConvertArgs conv;
  const std::vector<std::string> kinds{"asm", "mt", "array", "tsscpp", "tournament", "ideal"};
  auto* cv = app.add_subcommand("convert", "Convert between ASMs, TSSCPPs, tournaments, arrays and ideals");
  cv->add_option("--from", conv.from)->required()->check(CLI::IsMember(kinds));
  cv->add_option("--to", conv.to)->required()->check(CLI::IsMember(kinds));
  cv->add_option("--input", conv.input, "JSON input file, - for stdin");
  cv->add_option("--colors", conv.colors, "Color set for ideals");
  cv->add_option("--n", conv.n, "Order for ideal input");

  std::string identity;
  int verify_n = 0;
  bool no_timing = false;
  auto* v = app.add_subcommand("verify", "Verify an identity by exact expansion");
  v->add_option("--identity", identity)->required()->check(CLI::IsMember(identity_names()));
  v->add_option("--n", verify_n)->required();
  v->add_flag("--no-timing", no_timing, "Report elapsed_ms as 0 for reproducible output");

  int dot_n = 0;
  std::string dot_colors, dot_output = "-";
  bool dot_dual = false;
  auto* d = app.add_subcommand("export-dot", "Write the colored Hasse diagram as DOT");
  d->add_option("--n", dot_n)->required();
  d->add_option("--colors", dot_colors)->required();
  d->add_option("--output", dot_output, "Output file, - for stdout");
  d->add_flag("--dual", dot_dual, "Export the dual poset");

  int poset_n = 0;
  std::string poset_colors;
  bool poset_dual = false;
  auto* ps = app.add_subcommand("poset", "Print T_n(S) as JSON");
  ps->add_option("--n", poset_n)->required();
  ps->add_option("--colors", poset_colors)->required();
  ps->add_flag("--dual", poset_dual);

  std::string family, seed_colors;
  int seed_n = 0;
  auto* sl = app.add_subcommand("seed-list", "Enumerate objects as JSON lines");
  sl->add_option("--family", family)->required()->check(CLI::IsMember(kinds));
  sl->add_option("--n", seed_n)->required();
  sl->add_option("--colors", seed_colors, "Color set for arrays and ideals");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kInvalid;
  }

  try {
    if (c->parsed()) return run_count(count);
    if (cv->parsed()) return run_convert(conv);
    if (v->parsed()) return run_verify(identity, verify_n, no_timing);
    if (d->parsed()) return run_export_dot(dot_n, dot_colors, dot_dual, dot_output);
    if (ps->parsed()) {
      std::cout << poset_to_json(make_subposet(poset_n, poset_colors, poset_dual)).dump() << "\n";
      return kOk;
    }
    if (sl->parsed()) return run_seed_list(family, seed_n, seed_colors);
  } catch (const NoFormula& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kNoFormula;
  } catch (const ConstraintMismatch& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kMismatch;
  } catch (const InvalidInput& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kInvalid;
}
