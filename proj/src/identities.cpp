#include "tetra/identities.hpp"

#include "tetra/errors.hpp"
#include "tetra/row_shuffle.hpp"

namespace tetra {

int ArrayStats::row_value_equality(int i, int k) const {
  auto it = row_value_equalities.find({i, k});
  return it == row_value_equalities.end() ? 0 : it->second;
}

int ArrayStats::row_value_content(int i, int k) const {
  auto it = row_content.find({i, k});
  return it == row_content.end() ? 0 : it->second;
}

ArrayStats array_stats(const StaircaseArray& x) {
  const int n = x.n();
  ArrayStats st;
  st.n = n;
  st.per_row.assign(n + 1, 0);
  st.per_diagonal.assign(n + 1, 0);
  st.content.assign(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const int v = x.at(i, j);
      ++st.content[v];
      ++st.row_content[{i, v}];
      if (j == 0 || i == n) continue;
      const int southwest = x.at(i + 1, j - 1);
      if (v == southwest) {
        ++st.E;
        ++st.per_row[i];
        ++st.per_diagonal[i + j];
        ++st.row_value_equalities[{i, v}];
      }
      if (v > x.at(i, j - 1) && v < southwest) ++st.N;
    }
  }
  return st;
}

AsmStats asm_stats(const Asm& a) {
  const int n = a.n();
  AsmStats st;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (a.at(i, j) == -1) ++st.negatives;
      if (a.at(i, j) == 0) continue;
      for (int k = 1; k < i; ++k)
        for (int l = j + 1; l <= n; ++l) st.inversions += a.at(i, j) * a.at(k, l);
    }
  return st;
}

namespace {

SparsePoly one_plus_lambda_pow(unsigned e) {
  SparsePoly base = SparsePoly::constant(1) + SparsePoly::term(Monomial::lambda_power(1));
  return base.pow(e);
}

Monomial content_monomial(const ArrayStats& st, unsigned lambda) {
  Monomial m = Monomial::lambda_power(lambda);
  m.x.assign(st.n, 0);
  for (int k = 1; k <= st.n; ++k) m.x[k - 1] = static_cast<unsigned>(st.content[k] - 1);
  m.normalize();
  return m;
}

SparsePoly pairwise_product(int n, bool with_lambda) {
  if (n < 1) throw InvalidInput("n must be at least 1");
  SparsePoly p = SparsePoly::constant(1);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      Monomial upset = Monomial::variable(j);
      if (with_lambda) upset.lambda = 1;
      p *= SparsePoly::term(Monomial::variable(i)) + SparsePoly::term(upset);
    }
  return p;
}

}  // namespace

SparsePoly tournament_gf(int n) { return pairwise_product(n, true); }

SparsePoly schur_staircase_product(int n) { return pairwise_product(n, false); }

SparsePoly asm_expansion_rhs(int n) {
  SparsePoly sum;
  enumerate_arrays(n, kAsmColors, [&](const StaircaseArray& alpha) {
    const ArrayStats st = array_stats(alpha);
    sum += SparsePoly::term(content_monomial(st, st.E)) * one_plus_lambda_pow(st.N);
  });
  return sum;
}

SparsePoly robbins_rumsey_rhs(int n) {
  SparsePoly sum;
  for_each_asm(n, [&](const Asm& a) {
    const AsmStats st = asm_stats(a);
    if (st.inversions < st.negatives) throw InternalError("ASM with I(A) < N(A)");
    Monomial m = Monomial::lambda_power(static_cast<unsigned>(st.inversions - st.negatives));
    m.x.assign(n, 0);
    for (int j = 1; j <= n; ++j) {
      int e = 0;
      for (int i = 1; i <= n; ++i) e += (n - i) * a.at(i, j);
      if (e < 0) throw InternalError("negative x exponent in the Robbins-Rumsey term");
      m.x[j - 1] = static_cast<unsigned>(e);
    }
    m.normalize();
    sum += SparsePoly::term(m) * one_plus_lambda_pow(static_cast<unsigned>(st.negatives));
  });
  return sum;
}

SparsePoly tsscpp_expansion_rhs(int n) {
  SparsePoly sum;
  enumerate_arrays(n, kTsscppTournamentColors, [&](const StaircaseArray& alpha) {
    const ArrayStats st = array_stats(alpha);
    Monomial prefix = Monomial::lambda_power(static_cast<unsigned>(st.E));
    prefix.x.assign(n, 0);
    for (int i = 1; i <= n - 1; ++i) prefix.x[i - 1] = static_cast<unsigned>(n - i - st.per_row[i]);
    prefix.normalize();
    SparsePoly shuffles;
    enumerate_row_shuffles(alpha, [&](const StaircaseArray& shuffled) {
      const ArrayStats sh = array_stats(shuffled);
      Monomial m;
      m.x.assign(n, 0);
      for (int d = 1; d <= n; ++d) m.x[d - 1] = static_cast<unsigned>(sh.per_diagonal[d]);
      m.normalize();
      shuffles.add_term(m, 1);
    });
    sum += SparsePoly::term(prefix) * shuffles;
  });
  return sum;
}

BigInt shuffle_count_formula(const StaircaseArray& alpha) {
  const ArrayStats st = array_stats(alpha);
  const int n = alpha.n();
  BigInt product = 1;
  for (int i = 1; i <= n - 1; ++i)
    for (int k = i; k <= n - 1; ++k)
      product *= binomial(st.row_value_content(i + 1, k), st.row_value_equality(i, k));
  return product;
}

QPoly tsscpp_lambda_count(int n) {
  std::vector<BigInt> coeffs(static_cast<std::size_t>(n) * (n - 1) / 2 + 1);
  enumerate_arrays(n, kTsscppTournamentColors, [&](const StaircaseArray& alpha) {
    coeffs[array_stats(alpha).E] += shuffle_count_formula(alpha);
  });
  return QPoly(std::move(coeffs));
}

SparsePoly schur_staircase_sum(int n) {
  SparsePoly sum;
  enumerate_arrays(n, kSchurColors, [&](const StaircaseArray& alpha) {
    sum.add_term(content_monomial(array_stats(alpha), 0), 1);
  });
  return sum;
}

bool schur_staircase_check(int n) { return schur_staircase_sum(n) == schur_staircase_product(n); }

}  // namespace tetra
