#pragma once

#include "tetra/bigint.hpp"
#include "tetra/color.hpp"
#include "tetra/qpoly.hpp"

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace tetra {

/// Integer array of staircase shape: row i (1-based) holds entries
/// x_{i,0}, ..., x_{i,n-i}. The column j = 0 is stored and pinned to i.
class StaircaseArray {
 public:
  /// The minimal array x_{i,j} = i.
  explicit StaircaseArray(int n = 1);
  /// Takes ragged rows including the forced column; checks shape and the
  /// bounds i <= x_{i,j} <= i + j, throwing InvalidInput otherwise.
  static StaircaseArray from_rows(std::vector<std::vector<int>> rows);
  static StaircaseArray minimal(int n) { return StaircaseArray(n); }
  static StaircaseArray maximal(int n);

  int n() const { return n_; }
  int row_length(int i) const { return n_ - i + 1; }
  int at(int i, int j) const { return rows_[i - 1][j]; }
  /// Unchecked write; callers keep the bounds invariant.
  void set(int i, int j, int v) { rows_[i - 1][j] = v; }
  bool in_shape(int i, int j) const { return i >= 1 && i <= n_ && j >= 0 && j <= n_ - i; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  std::string to_string() const;

  friend bool operator==(const StaircaseArray&, const StaircaseArray&) = default;
  friend auto operator<=>(const StaircaseArray&, const StaircaseArray&) = default;

 private:
  int n_;
  std::vector<std::vector<int>> rows_;
};

/// First violated bound or color inequality, or empty when x is in Y_n(S).
/// Requires g in S (InvalidInput otherwise).
std::string violation(const StaircaseArray& x, const ColorSet& s);
bool validate(const StaircaseArray& x, const ColorSet& s);

/// Sum over all entries of x_{i,j} - i.
long weight(const StaircaseArray& x);

using ArrayVisitor = std::function<void(const StaircaseArray&)>;

/// Visits every member of Y_n(S) once, filling diagonal by diagonal.
/// Refuses (BudgetExceeded) when |Y_n(S)| exceeds `max_arrays`.
void enumerate_arrays(int n, const ColorSet& s, const ArrayVisitor& visit,
                      const BigInt& max_arrays = BigInt(100'000'000));
std::vector<StaircaseArray> all_arrays(int n, const ColorSet& s);

/// |Y_n(S)| and its weight generating function by a cell-by-cell transfer
/// DP; no enumeration.
BigInt count_arrays(int n, const ColorSet& s);
QPoly array_weight_gf(int n, const ColorSet& s);

}  // namespace tetra
