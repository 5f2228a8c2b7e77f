#include "tetra/row_shuffle.hpp"

#include "tetra/errors.hpp"
#include "tetra/objects.hpp"

#include <map>
#include <utility>

namespace tetra {

StaircaseArray sort_to_tsscpp(const StaircaseArray& beta) {
  const auto bad = violation(beta, kTournamentColors);
  if (!bad.empty()) throw ConstraintMismatch("sort_to_tsscpp needs a tournament array: " + bad);
  StaircaseArray x = beta;
  const int n = x.n();
  for (int i = n - 1; i >= 1; --i) {
    bool swapped = true;
    while (swapped) {
      swapped = false;
      for (int p = 1; p + 1 <= n - i; ++p) {
        if (x.at(i, p) <= x.at(i, p + 1)) continue;
        // Rows below i are sorted, so an inversion sits over equal
        // southwest neighbours.
        if (x.at(i + 1, p - 1) != x.at(i + 1, p))
          throw InternalError("out-of-order entries over unequal southwest neighbours in row " +
                              std::to_string(i) + " of " + beta.to_string());
        for (int t = 0; t < i; ++t) {
          const int a = x.at(i - t, p + t);
          x.set(i - t, p + t, x.at(i - t, p + 1 + t));
          x.set(i - t, p + 1 + t, a);
        }
        swapped = true;
      }
    }
  }
  const auto broken = violation(x, kTsscppTournamentColors);
  if (!broken.empty()) throw InternalError("sorted array fails " + broken + " for input " + beta.to_string());
  return x;
}

void enumerate_row_shuffles(const StaircaseArray& alpha,
                            const std::function<void(const StaircaseArray&)>& visit) {
  const auto bad = violation(alpha, kTsscppTournamentColors);
  if (!bad.empty()) throw ConstraintMismatch("row shuffles need a TSSCPP tournament array: " + bad);
  const int n = alpha.n();
  StaircaseArray x = alpha;

  // Row i keeps x_{i,0} = i; the entries at j >= 1 are redistributed so that
  // each lands on its southwest neighbour or one below it.
  auto fill_row = [&](auto&& self, int i, int p, std::map<int, int>& remaining) -> void {
    if (i == 0) {
      visit(x);
      return;
    }
    if (p > n - i) {
      std::map<int, int> above;
      if (i > 1)
        for (int j = 1; j <= n - i + 1; ++j) ++above[alpha.at(i - 1, j)];
      self(self, i - 1, 1, above);
      return;
    }
    const int sw = x.at(i + 1, p - 1);
    for (int v : {sw - 1, sw}) {
      auto it = remaining.find(v);
      if (it == remaining.end() || it->second == 0) continue;
      --it->second;
      x.set(i, p, v);
      self(self, i, p + 1, remaining);
      ++it->second;
    }
    x.set(i, p, alpha.at(i, p));
  };

  if (n == 1) {
    visit(x);
    return;
  }
  std::map<int, int> bottom{{alpha.at(n - 1, 1), 1}};
  fill_row(fill_row, n - 1, 1, bottom);
}

std::vector<StaircaseArray> row_shuffles(const StaircaseArray& alpha) {
  std::vector<StaircaseArray> out;
  enumerate_row_shuffles(alpha, [&](const StaircaseArray& x) { out.push_back(x); });
  return out;
}

}  // namespace tetra
