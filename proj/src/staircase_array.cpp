#include "tetra/staircase_array.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <functional>
#include <array>
#include <map>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <unordered_map>
#include <sstream>
#include <utility>

namespace tetra {

StaircaseArray::StaircaseArray(int n) : n_(n) {
  if (n < 1) throw InvalidInput("staircase array order must be at least 1");
  rows_.resize(n);
  for (int i = 1; i <= n; ++i) rows_[i - 1].assign(n - i + 1, i);
}

StaircaseArray StaircaseArray::from_rows(std::vector<std::vector<int>> rows) {
  const int n = static_cast<int>(rows.size());
  if (n < 1) throw InvalidInput("staircase array needs at least one row");
  StaircaseArray x(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[i - 1];
    if (static_cast<int>(row.size()) != n - i + 1) {
      throw InvalidInput("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                         " entries, expected " + std::to_string(n - i + 1));
    }
    for (int j = 0; j <= n - i; ++j) {
      if (row[j] < i || row[j] > i + j) {
        throw InvalidInput("entry x_{" + std::to_string(i) + "," + std::to_string(j) + "} = " +
                           std::to_string(row[j]) + " outside [" + std::to_string(i) + ", " +
                           std::to_string(i + j) + "]");
      }
    }
  }
  x.rows_ = std::move(rows);
  return x;
}

StaircaseArray StaircaseArray::maximal(int n) {
  StaircaseArray x(n);
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j <= n - i; ++j) x.set(i, j, i + j);
  return x;
}

std::string StaircaseArray::to_string() const {
  std::ostringstream os;
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (r) os << " / ";
    for (std::size_t j = 0; j < rows_[r].size(); ++j) os << (j ? " " : "") << rows_[r][j];
  }
  return os.str();
}

namespace {

std::string cell(int i, int j) { return "x_{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

void require_green(const ColorSet& s) {
  if (!s.contains(Color::Green)) throw InvalidInput("staircase arrays Y_n(S) require g in S");
}

}  // namespace

std::string violation(const StaircaseArray& x, const ColorSet& s) {
  require_green(s);
  const int n = x.n();
  for (int i = 1; i <= n; ++i) {
    for (int j = 0; j <= n - i; ++j) {
      const int v = x.at(i, j);
      if (v < i || v > i + j) return "bounds: " + cell(i, j) + " = " + std::to_string(v);
      if (s.contains(Color::Orange) && x.in_shape(i + 1, j) && !(v < x.at(i + 1, j)))
        return "orange: " + cell(i, j) + " < " + cell(i + 1, j);
      if (s.contains(Color::Red) && x.in_shape(i - 1, j + 1) && !(v <= x.at(i - 1, j + 1) + 1))
        return "red: " + cell(i, j) + " <= " + cell(i - 1, j + 1) + " + 1";
      if (s.contains(Color::Yellow) && x.in_shape(i, j + 1) && !(v <= x.at(i, j + 1)))
        return "yellow: " + cell(i, j) + " <= " + cell(i, j + 1);
      if (s.contains(Color::Blue) && x.in_shape(i + 1, j - 1) && !(v <= x.at(i + 1, j - 1)))
        return "blue: " + cell(i, j) + " <= " + cell(i + 1, j - 1);
      if (s.contains(Color::Silver) && x.in_shape(i, j - 1) && !(v <= x.at(i, j - 1) + 1))
        return "silver: " + cell(i, j) + " <= " + cell(i, j - 1) + " + 1";
    }
  }
  return {};
}

bool validate(const StaircaseArray& x, const ColorSet& s) { return violation(x, s).empty(); }

long weight(const StaircaseArray& x) {
  long w = 0;
  for (int i = 1; i <= x.n(); ++i)
    for (int j = 0; j <= x.n() - i; ++j) w += x.at(i, j) - i;
  return w;
}

namespace {

// Allowed value range for cell (i, j), j >= 1, given every cell on earlier
// diagonals and the cells (i', d - i') with i' < i on the same diagonal.
// Only constraints whose other endpoint is already filled are applied.
std::pair<int, int> cell_range(const StaircaseArray& x, const ColorSet& s, int i, int j) {
  int lo = i, hi = i + j;
  if (i >= 2) {
    const int ne = x.at(i - 1, j + 1);
    if (s.contains(Color::Red)) hi = std::min(hi, ne + 1);
    if (s.contains(Color::Blue)) lo = std::max(lo, ne);
    if (s.contains(Color::Orange)) lo = std::max(lo, x.at(i - 1, j) + 1);
  }
  const int west = x.at(i, j - 1);
  if (s.contains(Color::Yellow)) lo = std::max(lo, west);
  if (s.contains(Color::Silver)) hi = std::min(hi, west + 1);
  return {lo, hi};
}

// Cells with j >= 1 ordered by diagonal d = i + j, then by row.
std::vector<std::pair<int, int>> fill_order(int n) {
  std::vector<std::pair<int, int>> cells;
  for (int d = 2; d <= n; ++d)
    for (int i = 1; i < d; ++i) cells.emplace_back(i, d - i);
  return cells;
}

}  // namespace

void enumerate_arrays(int n, const ColorSet& s, const ArrayVisitor& visit, const BigInt& max_arrays) {
  require_green(s);
  if (n < 1) throw InvalidInput("n must be at least 1");
  const BigInt total = count_arrays(n, s);
  if (total > max_arrays) {
    throw BudgetExceeded("Y_" + std::to_string(n) + "(" + s.letters() + ") has " + total.str() +
                         " arrays, above the enumeration budget " + max_arrays.str());
  }
  const auto cells = fill_order(n);
  StaircaseArray x(n);
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == cells.size()) {
      visit(x);
      return;
    }
    const auto [i, j] = cells[k];
    const auto [lo, hi] = cell_range(x, s, i, j);
    for (int v = lo; v <= hi; ++v) {
      x.set(i, j, v);
      self(self, k + 1);
    }
    x.set(i, j, i);
  };
  rec(rec, 0);
}

std::vector<StaircaseArray> all_arrays(int n, const ColorSet& s) {
  std::vector<StaircaseArray> out;
  enumerate_arrays(n, s, [&](const StaircaseArray& x) { out.push_back(x); });
  return out;
}

namespace {

struct CountAcc {
  using Value = BigInt;
  static Value one() { return 1; }
  static Value weighted(const Value& v, long) { return v; }
};

struct GfAcc {
  using Value = QPoly;
  static Value one() { return QPoly::constant(1); }
  static Value weighted(const Value& v, long w) { return v.shifted(static_cast<std::size_t>(w)); }
};

// Cell-by-cell transfer DP. Cells with j >= 1 are visited in one of a few
// sweep orders (by row, column or diagonal); the state is the tuple of values
// of visited cells that still have an unvisited constraint partner.
struct Link {
  int a, b, k;  // x_a <= x_b + k
};

struct Layout {
  std::vector<std::pair<int, int>> cells;
  std::vector<Link> links;
};

Layout layout(int n, const ColorSet& s) {
  Layout L;
  std::map<std::pair<int, int>, int> id;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n - i; ++j) {
      id[{i, j}] = static_cast<int>(L.cells.size());
      L.cells.emplace_back(i, j);
    }
  auto link = [&](int i, int j, int i2, int j2, int k) {
    auto a = id.find({i, j}), b = id.find({i2, j2});
    if (a != id.end() && b != id.end()) L.links.push_back({a->second, b->second, k});
  };
  for (const auto& [i, j] : std::vector<std::pair<int, int>>(L.cells)) {
    if (s.contains(Color::Orange)) link(i, j, i + 1, j, -1);
    if (s.contains(Color::Red)) link(i, j, i - 1, j + 1, 1);
    if (s.contains(Color::Yellow)) link(i, j, i, j + 1, 0);
    if (s.contains(Color::Blue)) link(i, j, i + 1, j - 1, 0);
    if (s.contains(Color::Silver)) link(i, j, i, j - 1, 1);
  }
  return L;
}

struct Sweep {
  std::vector<int> order;
  std::vector<int> last;  // last position at which each cell is still needed
};

Sweep make_sweep(const Layout& L, std::vector<int> order) {
  Sweep sw;
  const std::size_t m = order.size();
  std::vector<int> pos(m);
  for (std::size_t p = 0; p < m; ++p) pos[order[p]] = static_cast<int>(p);
  sw.last.assign(m, -1);
  for (const auto& l : L.links) {
    sw.last[l.a] = std::max(sw.last[l.a], pos[l.b]);
    sw.last[l.b] = std::max(sw.last[l.b], pos[l.a]);
  }
  sw.order = std::move(order);
  return sw;
}

using Cell = std::pair<int, int>;
using SweepKey = std::tuple<int, int> (*)(const Cell&);

// Row, column and diagonal sweeps.
const std::array<SweepKey, 3> kSweepKeys = {
    [](const Cell& c) { return std::tuple{c.first, c.second}; },
    [](const Cell& c) { return std::tuple{c.second, c.first}; },
    [](const Cell& c) { return std::tuple{c.first + c.second, c.first}; },
};

Sweep sweep_for(const Layout& L, std::size_t which) {
  std::vector<int> order(L.cells.size());
  for (std::size_t k = 0; k < order.size(); ++k) order[k] = static_cast<int>(k);
  const SweepKey key = kSweepKeys[which];
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return key(L.cells[a]) < key(L.cells[b]); });
  return make_sweep(L, std::move(order));
}

template <class Acc>
typename Acc::Value array_dp(int n, const ColorSet& s, std::size_t which, std::size_t* work = nullptr,
                             std::size_t work_limit = SIZE_MAX) {
  using Value = typename Acc::Value;
  const Layout L = layout(n, s);
  const Sweep sw = sweep_for(L, which);

  std::vector<int> frontier;  // cell ids, aligned with the state string
  std::unordered_map<std::string, Value> states;
  states.emplace(std::string{}, Acc::one());
  for (std::size_t p = 0; p < sw.order.size(); ++p) {
    const int c = sw.order[p];
    const auto [i, j] = L.cells[c];
    std::vector<int> slot(L.cells.size(), -1);
    for (std::size_t t = 0; t < frontier.size(); ++t) slot[frontier[t]] = static_cast<int>(t);

    struct Bound {
      int slot, k;
      bool upper;
    };
    std::vector<Bound> bounds;
    for (const auto& l : L.links) {
      if (l.a == c && slot[l.b] >= 0) bounds.push_back({slot[l.b], l.k, true});
      if (l.b == c && slot[l.a] >= 0) bounds.push_back({slot[l.a], -l.k, false});
    }
    std::vector<int> kept;
    std::vector<int> next_frontier;
    for (std::size_t t = 0; t < frontier.size(); ++t)
      if (sw.last[frontier[t]] > static_cast<int>(p)) {
        kept.push_back(static_cast<int>(t));
        next_frontier.push_back(frontier[t]);
      }
    const bool keep_c = sw.last[c] > static_cast<int>(p);
    if (keep_c) next_frontier.push_back(c);

    std::unordered_map<std::string, Value> next;
    next.reserve(states.size() * 2);
    for (const auto& [key, acc] : states) {
      int lo = i, hi = i + j;
      for (const auto& b : bounds) {
        const int other = static_cast<unsigned char>(key[b.slot]);
        if (b.upper)
          hi = std::min(hi, other + b.k);
        else
          lo = std::max(lo, other + b.k);
      }
      if (lo > hi) continue;
      std::string base;
      base.reserve(next_frontier.size());
      for (int t : kept) base.push_back(key[t]);
      for (int v = lo; v <= hi; ++v) {
        std::string k2 = base;
        if (keep_c) k2.push_back(static_cast<char>(v));
        auto weighted = Acc::weighted(acc, v - i);
        auto [it, inserted] = next.try_emplace(std::move(k2), weighted);
        if (!inserted) it->second += weighted;
      }
    }
    if (work) {
      *work += next.size();
      if (*work > work_limit) return Value{};
    }
    states = std::move(next);
    frontier = std::move(next_frontier);
  }
  Value total{};
  for (const auto& [key, acc] : states) total += acc;
  return total;
}

// Sweep with the fewest DP states on a small instance, cached per S.
std::size_t choose_sweep(const ColorSet& s) {
  static std::mutex mutex;
  static std::map<std::string, std::size_t> cache;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(s.letters()); it != cache.end()) return it->second;
  std::size_t best = 0, best_work = SIZE_MAX;
  for (std::size_t which = 0; which < kSweepKeys.size(); ++which) {
    std::size_t work = 0;
    array_dp<CountAcc>(8, s, which, &work, best_work);
    if (work < best_work) {
      best_work = work;
      best = which;
    }
  }
  cache.emplace(s.letters(), best);
  return best;
}

template <class Acc>
typename Acc::Value counted(int n, const ColorSet& s) {
  require_green(s);
  if (n < 1) throw InvalidInput("n must be at least 1");
  if (n > 120) throw InvalidInput("array DP supports n <= 120");
  return array_dp<Acc>(n, s, choose_sweep(s));
}

}  // namespace

BigInt count_arrays(int n, const ColorSet& s) { return counted<CountAcc>(n, s); }

QPoly array_weight_gf(int n, const ColorSet& s) { return counted<GfAcc>(n, s); }

}  // namespace tetra
