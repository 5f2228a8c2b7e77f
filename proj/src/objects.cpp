#include "tetra/objects.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <utility>

namespace tetra {

namespace {

std::string pos(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

// ---------------------------------------------------------------- Asm

Asm::Asm(std::vector<std::vector<int>> entries) : a_(std::move(entries)) {
  const int n = static_cast<int>(a_.size());
  if (n < 1) throw InvalidInput("ASM must have at least one row");
  for (const auto& row : a_)
    if (static_cast<int>(row.size()) != n) throw InvalidInput("ASM must be square");
  std::vector<int> col(n, 0);
  for (int i = 0; i < n; ++i) {
    int partial = 0;
    for (int j = 0; j < n; ++j) {
      const int v = a_[i][j];
      if (v < -1 || v > 1) throw InvalidInput("ASM entry at " + pos(i + 1, j + 1) + " not in {-1,0,1}");
      partial += v;
      col[j] += v;
      if (partial < 0 || partial > 1)
        throw InvalidInput("ASM row " + std::to_string(i + 1) + " partial sum leaves {0,1} at column " +
                           std::to_string(j + 1));
      if (col[j] < 0 || col[j] > 1)
        throw InvalidInput("ASM column " + std::to_string(j + 1) + " partial sum leaves {0,1} at row " +
                           std::to_string(i + 1));
    }
    if (partial != 1) throw InvalidInput("ASM row " + std::to_string(i + 1) + " does not sum to 1");
  }
  for (int j = 0; j < n; ++j)
    if (col[j] != 1) throw InvalidInput("ASM column " + std::to_string(j + 1) + " does not sum to 1");
}

Asm Asm::identity(int n) {
  if (n < 1) throw InvalidInput("ASM order must be at least 1");
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 1;
  return Asm(std::move(a));
}

// ---------------------------------------------------------------- MonotoneTriangle

MonotoneTriangle::MonotoneTriangle(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const int n = static_cast<int>(rows_.size());
  if (n < 1) throw InvalidInput("monotone triangle must have at least one row");
  for (int r = 1; r <= n; ++r) {
    if (static_cast<int>(rows_[r - 1].size()) != r)
      throw InvalidInput("monotone triangle row " + std::to_string(r) + " must have " + std::to_string(r) +
                         " entries");
    for (int c = 1; c <= r; ++c) {
      const int v = at(r, c);
      if (v < 1 || v > n) throw InvalidInput("monotone triangle entry " + pos(r, c) + " outside [1, n]");
      if (c < r && !(v < at(r, c + 1)))
        throw InvalidInput("monotone triangle row " + std::to_string(r) + " not strictly increasing");
    }
  }
  for (int c = 1; c <= n; ++c)
    if (at(n, c) != c) throw InvalidInput("monotone triangle bottom row must be 1..n");
  for (int r = 2; r <= n; ++r) {
    for (int c = 1; c < r; ++c) {
      if (!(at(r, c) <= at(r - 1, c) && at(r - 1, c) <= at(r, c + 1)))
        throw InvalidInput("monotone triangle interlacing fails at " + pos(r - 1, c));
    }
  }
}

MonotoneTriangle asm_to_mt(const Asm& a) {
  const int n = a.n();
  std::vector<std::vector<int>> rows(n);
  std::vector<int> col(n + 1, 0);
  for (int r = 1; r <= n; ++r) {
    for (int c = 1; c <= n; ++c) {
      col[c] += a.at(r, c);
      if (col[c] == 1) rows[r - 1].push_back(c);
    }
  }
  return MonotoneTriangle(std::move(rows));
}

Asm mt_to_asm(const MonotoneTriangle& m) {
  const int n = m.n();
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  for (int r = 1; r <= n; ++r) {
    for (int v : m.rows()[r - 1]) a[r - 1][v - 1] += 1;
    if (r >= 2)
      for (int v : m.rows()[r - 2]) a[r - 1][v - 1] -= 1;
  }
  return Asm(std::move(a));
}

// Rotating the triangle puts the c-th entry of triangle row n-j at x_{c,j}.
StaircaseArray mt_to_array(const MonotoneTriangle& m) {
  const int n = m.n();
  StaircaseArray x(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) x.set(i, j, m.at(n - j, i));
  const auto bad = violation(x, kAsmColors);
  if (!bad.empty()) throw InternalError("rotated monotone triangle fails " + bad);
  return x;
}

MonotoneTriangle array_to_mt(const StaircaseArray& x) {
  const auto bad = violation(x, kAsmColors);
  if (!bad.empty()) throw ConstraintMismatch("array is not an ASM array: " + bad);
  const int n = x.n();
  std::vector<std::vector<int>> rows(n);
  for (int r = 1; r <= n; ++r)
    for (int c = 1; c <= r; ++c) rows[r - 1].push_back(x.at(c, n - r));
  return MonotoneTriangle(std::move(rows));
}

// ---------------------------------------------------------------- Tsscpp

std::string tsscpp_violation(const std::vector<std::vector<int>>& t) {
  const int size = static_cast<int>(t.size());
  if (size < 2 || size % 2 != 0) return "TSSCPP matrix must be 2n x 2n with n >= 1";
  for (const auto& row : t)
    if (static_cast<int>(row.size()) != size) return "TSSCPP matrix must be square";
  for (int i = 0; i < size; ++i) {
    for (int j = 0; j < size; ++j) {
      const int v = t[i][j];
      if (v < 0 || v > size) return "height at " + pos(i + 1, j + 1) + " outside [0, 2n]";
      if (j + 1 < size && v < t[i][j + 1]) return "row " + std::to_string(i + 1) + " not weakly decreasing";
      if (i + 1 < size && v < t[i + 1][j]) return "column " + std::to_string(j + 1) + " not weakly decreasing";
      if (v + t[size - 1 - i][size - 1 - j] != size)
        return "not self-complementary at " + pos(i + 1, j + 1);
    }
  }
  auto member = [&](int i, int j, int k) { return k <= t[i - 1][j - 1]; };
  for (int i = 1; i <= size; ++i)
    for (int j = 1; j <= size; ++j)
      for (int k = 1; k <= size; ++k)
        if (member(i, j, k) != member(j, i, k) || member(i, j, k) != member(i, k, j))
          return "not totally symmetric at cell (" + std::to_string(i) + "," + std::to_string(j) + "," +
                 std::to_string(k) + ")";
  return {};
}

Tsscpp::Tsscpp(std::vector<std::vector<int>> heights) : t_(std::move(heights)) {
  const auto bad = tsscpp_violation(t_);
  if (!bad.empty()) throw InvalidInput(bad);
}

// Fundamental domain t_{a,b}, n+1 <= a <= b <= 2n, read so that
// x_{i,j} = i + t_{2n+1-i-j, 2n-j}.
StaircaseArray tsscpp_to_array(const Tsscpp& t) {
  const int n = t.n();
  StaircaseArray x(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const int v = i + t.at(2 * n + 1 - i - j, 2 * n - j);
      if (v < i || v > i + j) throw InternalError("TSSCPP fundamental domain exceeds its bounds at " + pos(i, j));
      x.set(i, j, v);
    }
  }
  const auto bad = violation(x, kTsscppColors);
  if (!bad.empty()) throw InternalError("TSSCPP array fails " + bad);
  return x;
}

Tsscpp array_to_tsscpp(const StaircaseArray& x) {
  const auto bad = violation(x, kTsscppColors);
  if (!bad.empty()) throw ConstraintMismatch("array is not a TSSCPP array: " + bad);
  const int n = x.n();
  const int size = 2 * n;
  // Wedge value t_{a,b} for n+1 <= a <= b <= 2n.
  auto wedge = [&](int a, int b) {
    const int i = b - a + 1, j = size - b;
    return x.at(i, j) - i;
  };
  // A cell with two coordinates above n is a permutation of a wedge cell;
  // any other cell is the complement of one.
  auto member = [&](int p, int q, int r) {
    auto in_upper = [&](int u, int v, int w) {
      std::array<int, 3> c{u, v, w};
      std::sort(c.begin(), c.end());
      if (c[1] <= n) return std::optional<bool>{};
      return std::optional<bool>{c[0] <= wedge(c[1], c[2])};
    };
    if (auto m = in_upper(p, q, r)) return *m;
    auto m = in_upper(size + 1 - p, size + 1 - q, size + 1 - r);
    return !*m;
  };
  std::vector<std::vector<int>> heights(size, std::vector<int>(size, 0));
  for (int p = 1; p <= size; ++p) {
    for (int q = 1; q <= size; ++q) {
      int h = 0;
      while (h < size && member(p, q, h + 1)) ++h;
      for (int k = h + 1; k <= size; ++k)
        if (member(p, q, k)) throw InternalError("reconstructed cell set is not a plane partition");
      heights[p - 1][q - 1] = h;
    }
  }
  const auto broken = tsscpp_violation(heights);
  if (!broken.empty()) throw InternalError("reconstructed TSSCPP invalid: " + broken);
  return Tsscpp(std::move(heights));
}

// ---------------------------------------------------------------- Tournament

Tournament::Tournament(int n) : n_(n) {
  if (n < 1) throw InvalidInput("tournament needs at least one vertex");
  upsets_.assign(static_cast<std::size_t>(n) * (n - 1) / 2, false);
}

std::size_t Tournament::index(int i, int j) const {
  if (!(1 <= i && i < j && j <= n_)) throw InvalidInput("game " + pos(i, j) + " out of range");
  // Pairs ordered (1,2), (1,3), ..., (1,n), (2,3), ...
  const std::size_t before = static_cast<std::size_t>(i - 1) * (2 * n_ - i) / 2;
  return before + static_cast<std::size_t>(j - i - 1);
}

bool Tournament::upset(int i, int j) const { return upsets_[index(i, j)]; }

void Tournament::set_upset(int i, int j, bool value) { upsets_[index(i, j)] = value; }

int Tournament::upsets() const { return static_cast<int>(std::count(upsets_.begin(), upsets_.end(), true)); }

int Tournament::wins(int v) const {
  int w = 0;
  for (int u = 1; u <= n_; ++u) {
    if (u < v && upset(u, v)) ++w;
    if (u > v && !upset(v, u)) ++w;
  }
  return w;
}

Tournament Tournament::from_games(int n, const std::vector<std::array<int, 3>>& games) {
  Tournament t(n);
  std::vector<bool> seen(t.upsets_.size(), false);
  for (const auto& [a, b, winner] : games) {
    const int i = std::min(a, b), j = std::max(a, b);
    if (i < 1 || j > n || i == j) throw InvalidInput("game " + pos(a, b) + " out of range");
    if (winner != i && winner != j) throw InvalidInput("winner of game " + pos(a, b) + " is not a player");
    const auto k = t.index(i, j);
    if (seen[k]) throw InvalidInput("game " + pos(i, j) + " listed twice");
    seen[k] = true;
    t.upsets_[k] = winner == j;
  }
  if (std::find(seen.begin(), seen.end(), false) != seen.end())
    throw InvalidInput("tournament is missing games");
  return t;
}

std::vector<std::array<int, 3>> Tournament::games() const {
  std::vector<std::array<int, 3>> out;
  for (int i = 1; i <= n_; ++i)
    for (int j = i + 1; j <= n_; ++j) out.push_back({i, j, winner(i, j)});
  return out;
}

// x_{i,j} encodes game (i, i+j): equal to its southwest neighbour on an
// upset, one less otherwise.
StaircaseArray tournament_to_array(const Tournament& t) {
  const int n = t.n();
  StaircaseArray x(n);
  for (int d = 2; d <= n; ++d)
    for (int i = d - 1; i >= 1; --i) {
      const int j = d - i;
      x.set(i, j, x.at(i + 1, j - 1) - (t.upset(i, d) ? 0 : 1));
    }
  return x;
}

Tournament array_to_tournament(const StaircaseArray& x) {
  const auto bad = violation(x, kTournamentColors);
  if (!bad.empty()) throw ConstraintMismatch("array is not a tournament array: " + bad);
  Tournament t(x.n());
  for (int i = 1; i <= x.n(); ++i)
    for (int j = 1; j <= x.n() - i; ++j) t.set_upset(i, i + j, x.at(i, j) == x.at(i + 1, j - 1));
  return t;
}

bool tsscpp_tournament_check(const Tournament& t) {
  for (int v = 2; v <= t.n(); ++v) {
    for (int u = 1; u <= v - 1; ++u) {
      int k = 0, m = 0;
      for (int w = u; w <= v - 1; ++w) k += t.upset(w, v);
      for (int w = u; w <= v - 2; ++w) m += t.upset(w, v - 1);
      if (m > k) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------- generators

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
  if (n < 1) throw InvalidInput("ASM order must be at least 1");
  std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
  std::vector<int> col(n, 0);
  // Fill row-major; `partial` is the running row sum.
  auto rec = [&](auto&& self, int r, int c, int partial) -> void {
    if (c == n) {
      if (partial != 1) return;
      if (r == n - 1) {
        if (std::all_of(col.begin(), col.end(), [](int s) { return s == 1; })) visit(Asm(a));
        return;
      }
      self(self, r + 1, 0, 0);
      return;
    }
    for (int v : {0, 1, -1}) {
      const int p = partial + v, s = col[c] + v;
      if (p < 0 || p > 1 || s < 0 || s > 1) continue;
      a[r][c] = v;
      col[c] = s;
      self(self, r, c + 1, p);
      col[c] -= v;
      a[r][c] = 0;
    }
  };
  rec(rec, 0, 0, 0);
}

void for_each_tournament(int n, const std::function<void(const Tournament&)>& visit) {
  Tournament t(n);
  const std::size_t games = static_cast<std::size_t>(n) * (n - 1) / 2;
  if (games >= 40) throw BudgetExceeded("too many tournaments to enumerate");
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << games); ++mask) {
    std::size_t bit = 0;
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) t.set_upset(i, j, (mask >> bit++) & 1u);
    visit(t);
  }
}

}  // namespace tetra
