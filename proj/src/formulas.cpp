#include "tetra/formulas.hpp"

#include "tetra/errors.hpp"

#include <functional>
#include <vector>

namespace tetra {

namespace {

void require_n(int n, int min = 1) {
  if (n < min) throw InvalidInput("formula needs n >= " + std::to_string(min) + ", got " + std::to_string(n));
}

// Calls f(i, j, k) for 1 <= i <= j <= k <= n - 1.
void for_each_triple(int n, const std::function<void(int, int, int)>& f) {
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j)
      for (int k = j; k <= n - 1; ++k) f(i, j, k);
}

// prod over the triple index of [num(i,j,k)]_q / [den(i,j,k)]_q.
QPoly q_triple_quotient(int n, const std::function<unsigned(int, int, int)>& num,
                        const std::function<unsigned(int, int, int)>& den) {
  QPoly top = QPoly::constant(1), bottom = QPoly::constant(1);
  for_each_triple(n, [&](int i, int j, int k) {
    top *= QPoly::q_integer(num(i, j, k));
    bottom *= QPoly::q_integer(den(i, j, k));
  });
  return top.exact_div(bottom);
}

BigInt triple_quotient(int n, const std::function<long(int, int, int)>& num,
                       const std::function<long(int, int, int)>& den) {
  ExactRational r;
  for_each_triple(n, [&](int i, int j, int k) { r.multiply(num(i, j, k), den(i, j, k)); });
  return r.integer_value();
}

}  // namespace

QPoly q_factorial(unsigned m) {
  QPoly r = QPoly::constant(1);
  for (unsigned k = 2; k <= m; ++k) r *= QPoly::q_integer(k);
  return r;
}

QPoly q_binomial(unsigned n, unsigned k) {
  if (k > n) return {};
  return q_factorial(n).exact_div(q_factorial(k) * q_factorial(n - k));
}

QPoly q_factorial_product(int n) {
  require_n(n);
  QPoly r = QPoly::constant(1);
  for (int j = 1; j <= n; ++j) r *= q_factorial(j);
  return r;
}

QPoly q_factorial_product_triple(int n) {
  require_n(n);
  return q_triple_quotient(n, [](int i, int, int) { return i + 1; }, [](int i, int, int) { return i; });
}

QPoly q_binomial_product(int n) {
  require_n(n);
  QPoly r = QPoly::constant(1);
  for (int j = 1; j <= n; ++j) r *= q_binomial(n, j);
  return r;
}

QPoly q_binomial_product_triple(int n) {
  require_n(n);
  return q_triple_quotient(n, [](int, int j, int) { return j + 1; }, [](int, int j, int) { return j; });
}

QPoly three_color_product(int n) {
  require_n(n);
  QPoly r = QPoly::constant(1);
  for (int j = 1; j <= n - 1; ++j) r *= (QPoly::constant(1) + QPoly::monomial(j)).pow(n - j);
  return r;
}

QPoly three_color_product_triple(int n) {
  require_n(n);
  return q_triple_quotient(n, [](int i, int j, int) { return i + j; },
                           [](int i, int j, int) { return i + j - 1; });
}

QPoly carlitz_riordan(int j) {
  if (j < 0) throw InvalidInput("q-Catalan index must be nonnegative");
  std::vector<QPoly> c{QPoly::constant(1), QPoly::constant(1)};
  for (int m = 2; m <= j; ++m) {
    QPoly sum;
    for (int k = 1; k <= m; ++k) sum += (c[k - 1] * c[m - k]).shifted(k - 1);
    c.push_back(std::move(sum));
  }
  return c[j];
}

BigInt catalan(int j) {
  if (j < 0) throw InvalidInput("Catalan index must be nonnegative");
  return exact_divide(binomial(2 * j, j), j + 1);
}

std::pair<BigInt, QPoly> catalan_product(int n) {
  require_n(n);
  BigInt count = 1;
  QPoly gf = QPoly::constant(1);
  for (int j = 1; j <= n; ++j) {
    QPoly cj = carlitz_riordan(j);
    count *= cj.at_one();
    gf *= cj;
  }
  return {count, gf};
}

BigInt catalan_product_closed(int n) {
  require_n(n);
  BigInt r = 1;
  for (int j = 1; j <= n; ++j) r *= catalan(j);
  return r;
}

BigInt catalan_product_triple(int n) {
  require_n(n);
  return triple_quotient(n, [](int i, int j, int) { return i + j + 2; }, [](int i, int j, int) { return i + j; });
}

BigInt asm_number(int n) {
  require_n(n);
  ExactRational r;
  for (int j = 0; j <= n - 1; ++j) r.multiply(factorial(3 * j + 1), factorial(n + j));
  return r.integer_value();
}

BigInt asm_number_triple(int n) {
  require_n(n);
  return triple_quotient(n, [](int i, int j, int k) { return i + j + k + 1; },
                         [](int i, int j, int k) { return i + j + k - 1; });
}

BigInt tspp_number(int n) {
  require_n(n, 2);
  ExactRational r;
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i; j <= n - 1; ++j) r.multiply(i + j + n - 2, i + 2 * j - 2);
  return r.integer_value();
}

BigInt tspp_number_triple(int n) {
  require_n(n, 2);
  return triple_quotient(n, [](int i, int j, int k) { return i + j + k - 1; },
                         [](int i, int j, int k) { return i + j + k - 2; });
}

std::string family_name(FormulaFamily f) {
  switch (f) {
    case FormulaFamily::SingleColor: return "single-color";
    case FormulaFamily::OppositePair: return "opposite-pair";
    case FormulaFamily::AdjacentPair: return "adjacent-pair";
    case FormulaFamily::AdjacentPairDual: return "adjacent-pair-dual";
    case FormulaFamily::ThreeColor: return "three-color";
    case FormulaFamily::FourColor: return "four-color";
    case FormulaFamily::AllSix: return "all-six";
  }
  return "unknown";
}

std::optional<FormulaFamily> formula_family(const ColorSet& s) {
  if (!is_admissible(s)) return std::nullopt;
  auto any_of = [&](std::initializer_list<const char*> sets) {
    for (const char* letters : sets)
      if (s == ColorSet::parse(letters)) return true;
    return false;
  };
  switch (s.size()) {
    case 1: return FormulaFamily::SingleColor;
    case 2:
      if (any_of({"go", "rs", "by"})) return FormulaFamily::OppositePair;
      if (any_of({"bg", "bs", "yo", "gs"})) return FormulaFamily::AdjacentPair;
      if (any_of({"ry", "rg", "yg", "bo"})) return FormulaFamily::AdjacentPairDual;
      return std::nullopt;
    case 3:
      if (any_of({"rgy", "bgs"})) return std::nullopt;
      return FormulaFamily::ThreeColor;
    case 4: return FormulaFamily::FourColor;
    case 6: return FormulaFamily::AllSix;
    default: return std::nullopt;
  }
}

BigInt formula_count(int n, const ColorSet& s) {
  const auto family = formula_family(s);
  if (!family) throw NoFormula("no product formula is known for T_n(" + s.letters() + ")");
  switch (*family) {
    case FormulaFamily::SingleColor: return q_factorial_product(n).at_one();
    case FormulaFamily::OppositePair: return q_binomial_product(n).at_one();
    case FormulaFamily::AdjacentPair:
    case FormulaFamily::AdjacentPairDual: return catalan_product(n).first;
    case FormulaFamily::ThreeColor: require_n(n); return pow2(static_cast<unsigned>(n * (n - 1) / 2));
    case FormulaFamily::FourColor: return asm_number(n);
    case FormulaFamily::AllSix: return tspp_number(n);
  }
  throw InternalError("unhandled formula family");
}

bool has_q_formula(const ColorSet& s) {
  const auto family = formula_family(s);
  return family && *family != FormulaFamily::FourColor && *family != FormulaFamily::AllSix;
}

QPoly formula_rank_gf(int n, const ColorSet& s) {
  if (!has_q_formula(s)) throw NoFormula("no q-product formula is known for T_n(" + s.letters() + ")");
  switch (*formula_family(s)) {
    case FormulaFamily::SingleColor: return q_factorial_product(n);
    case FormulaFamily::OppositePair: return q_binomial_product(n);
    case FormulaFamily::AdjacentPair:
    case FormulaFamily::AdjacentPairDual: return catalan_product(n).second;
    case FormulaFamily::ThreeColor: return three_color_product(n);
    default: break;
  }
  throw InternalError("unhandled q-formula family");
}

}  // namespace tetra
