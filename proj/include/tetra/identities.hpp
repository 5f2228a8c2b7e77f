#pragma once

#include "tetra/objects.hpp"
#include "tetra/qpoly.hpp"
#include "tetra/sparse_poly.hpp"
#include "tetra/staircase_array.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tetra {

/// Diagonal-equality and content statistics of a staircase array. The
/// southwest neighbour of x_{i,j} is x_{i+1,j-1}, the west neighbour
/// x_{i,j-1}; cells without the neighbour contribute nothing.
struct ArrayStats {
  int n = 0;
  int E = 0;
  std::vector<int> per_row;                   // E_i, index i (0 unused)
  std::vector<int> per_diagonal;              // E^d, index d = i + j (0..n)
  std::map<std::pair<int, int>, int> row_value_equalities;  // E_{i,k}
  std::vector<int> content;                   // C_k, index k (0 unused)
  std::map<std::pair<int, int>, int> row_content;           // C_{i,k}
  int N = 0;

  int row_value_equality(int i, int k) const;
  int row_value_content(int i, int k) const;
};

ArrayStats array_stats(const StaircaseArray& x);

struct AsmStats {
  long inversions = 0;  // I(A)
  int negatives = 0;    // number of -1 entries
};

AsmStats asm_stats(const Asm& a);

/// prod_{i<j} (x_i + lambda x_j), expanded.
SparsePoly tournament_gf(int n);
/// prod_{i<j} (x_i + x_j).
SparsePoly schur_staircase_product(int n);

SparsePoly asm_expansion_rhs(int n);
SparsePoly robbins_rumsey_rhs(int n);
SparsePoly tsscpp_expansion_rhs(int n);
/// Sum over TSSCPP arrays of lambda^E * prod binom(C_{i+1,k}, E_{i,k}), as a
/// polynomial in lambda.
QPoly tsscpp_lambda_count(int n);
/// prod over 1 <= i <= k <= n-1 of binom(C_{i+1,k}, E_{i,k}).
BigInt shuffle_count_formula(const StaircaseArray& alpha);

/// Sum over Y_n({g,y,o}) of prod x_k^(C_k - 1).
SparsePoly schur_staircase_sum(int n);
bool schur_staircase_check(int n);

}  // namespace tetra
