#include "tetra/tetra_poset.hpp"

#include "tetra/errors.hpp"

#include <boost/container_hash/hash.hpp>

#include <algorithm>
#include <array>
#include <map>
#include <mutex>
#include <cstdlib>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace tetra {

std::string Vertex::label() const {
  return std::to_string(c1) + "," + std::to_string(c2) + "," + std::to_string(c3);
}

Vertex color_step(Color c) {
  switch (c) {
    case Color::Red: return {1, 0, 0};
    case Color::Green: return {0, 1, 0};
    case Color::Yellow: return {0, 0, 1};
    case Color::Blue: return {-1, 1, 0};    // g - r
    case Color::Orange: return {-1, 0, 1};  // y - r
    case Color::Silver: return {0, 1, -1};  // g - y
  }
  throw InternalError("unknown color");
}

// ---------------------------------------------------------------- TetraPoset

TetraPoset TetraPoset::build(int n) {
  if (n < 1) throw InvalidInput("T_n needs n >= 1, got " + std::to_string(n));
  TetraPoset t;
  t.n_ = n;
  const int m = n - 1;  // coordinates range over [0, n-2]
  t.index_.assign(static_cast<std::size_t>(m) * m * m, -1);
  for (int a = 0; a < m; ++a)
    for (int b = 0; a + b < m; ++b)
      for (int c = 0; a + b + c < m; ++c) {
        t.index_[(static_cast<std::size_t>(a) * m + b) * m + c] = static_cast<long>(t.vertices_.size());
        t.vertices_.push_back({a, b, c});
      }
  for (Color col : kAllColors) {
    auto& list = t.edges_[static_cast<std::size_t>(col)];
    const Vertex step = color_step(col);
    for (VertexId id = 0; id < t.vertices_.size(); ++id)
      if (auto hi = t.find(t.vertices_[id] + step)) list.push_back({id, *hi});
  }
  return t;
}

std::optional<VertexId> TetraPoset::find(const Vertex& v) const {
  const int m = n_ - 1;
  if (v.c1 < 0 || v.c2 < 0 || v.c3 < 0 || v.c1 + v.c2 + v.c3 > n_ - 2) return std::nullopt;
  const long id = index_[(static_cast<std::size_t>(v.c1) * m + v.c2) * m + v.c3];
  if (id < 0) return std::nullopt;
  return static_cast<VertexId>(id);
}

std::size_t TetraPoset::edge_count() const {
  std::size_t total = 0;
  for (const auto& e : edges_) total += e.size();
  return total;
}

// ---------------------------------------------------------------- Subposet

Subposet::Subposet(std::shared_ptr<const TetraPoset> parent, ColorSet colors)
    : Subposet(std::move(parent), colors, false) {}

Subposet::Subposet(std::shared_ptr<const TetraPoset> parent, ColorSet colors, bool dual)
    : parent_(std::move(parent)), colors_(colors), dual_(dual) {
  if (!parent_) throw InvalidInput("subposet needs a parent poset");
  if (auto bad = admissibility_violation(colors_))
    throw InvalidInput("color set {" + colors_.letters() + "} is not admissible: " + *bad);

  const std::size_t count = parent_->size();
  lower_.assign(count, {});
  upper_.assign(count, {});
  for (Color c : colors_.colors()) {
    for (const Edge& e : parent_->edges(c)) {
      const Edge r = dual_ ? Edge{e.high, e.low} : e;
      relations_.push_back(r);
      lower_[r.high].push_back(r.low);
      upper_[r.low].push_back(r.high);
    }
  }

  // c1 + 3 c2 + 2 c3 strictly increases along every color step.
  linear_.resize(count);
  std::iota(linear_.begin(), linear_.end(), VertexId{0});
  auto key = [&](VertexId id) {
    const Vertex& v = parent_->vertex(id);
    return v.c1 + 3 * v.c2 + 2 * v.c3;
  };
  std::stable_sort(linear_.begin(), linear_.end(), [&](VertexId a, VertexId b) {
    return dual_ ? key(a) > key(b) : key(a) < key(b);
  });

  const std::size_t words = (count + 63) / 64;
  above_.assign(count, std::vector<std::uint64_t>(words, 0));
  for (auto it = linear_.rbegin(); it != linear_.rend(); ++it) {
    auto& mine = above_[*it];
    for (VertexId hi : upper_[*it]) {
      mine[hi / 64] |= std::uint64_t{1} << (hi % 64);
      for (std::size_t w = 0; w < words; ++w) mine[w] |= above_[hi][w];
    }
  }
}

Subposet Subposet::of(int n, const ColorSet& colors) {
  return Subposet(std::make_shared<const TetraPoset>(TetraPoset::build(n)), colors);
}

Subposet Subposet::dual() const { return Subposet(parent_, colors_, !dual_); }

bool Subposet::less(VertexId u, VertexId v) const { return (above_[u][v / 64] >> (v % 64)) & 1u; }

std::vector<std::vector<VertexId>> Subposet::components() const {
  std::vector<VertexId> root(size());
  std::iota(root.begin(), root.end(), VertexId{0});
  auto find = [&](VertexId v) {
    while (root[v] != v) v = root[v] = root[root[v]];
    return v;
  };
  for (const Edge& e : relations_) root[find(e.low)] = find(e.high);
  std::vector<std::vector<VertexId>> out;
  std::unordered_map<VertexId, std::size_t> slot;
  for (VertexId v = 0; v < size(); ++v) {
    auto [it, inserted] = slot.try_emplace(find(v), out.size());
    if (inserted) out.emplace_back();
    out[it->second].push_back(v);
  }
  return out;
}

// ---------------------------------------------------------------- ideals

std::size_t OrderIdeal::size() const {
  return static_cast<std::size_t>(std::count(members.begin(), members.end(), true));
}

std::vector<Vertex> OrderIdeal::sorted_vertices(const TetraPoset& t) const {
  std::vector<Vertex> out;
  for (VertexId v = 0; v < members.size(); ++v)
    if (members[v]) out.push_back(t.vertex(v));
  std::sort(out.begin(), out.end());
  return out;
}

bool is_ideal(const Subposet& p, const OrderIdeal& ideal) {
  if (ideal.members.size() != p.size()) return false;
  return std::all_of(p.relations().begin(), p.relations().end(),
                     [&](const Edge& e) { return !ideal.members[e.high] || ideal.members[e.low]; });
}

Budget Budget::from_env() {
  Budget b;
  if (const char* env = std::getenv("TETRAPOSET_BUDGET")) {
    try {
      b.max_ideals = BigInt(std::string(env));
    } catch (const std::exception&) {
      throw InvalidInput(std::string("TETRAPOSET_BUDGET is not an integer: ") + env);
    }
  }
  return b;
}

namespace {

struct CountAcc {
  using Value = BigInt;
  static Value one() { return 1; }
  static Value grow(const Value& v) { return v; }
};

struct GfAcc {
  using Value = QPoly;
  static Value one() { return QPoly::constant(1); }
  static Value grow(const Value& v) { return v.shifted(1); }
};

using Key = std::vector<std::uint64_t>;

struct KeyHash {
  std::size_t operator()(const Key& k) const { return boost::hash_range(k.begin(), k.end()); }
};

bool bit(const Key& k, std::size_t i) { return (k[i / 64] >> (i % 64)) & 1u; }
void set_bit(Key& k, std::size_t i) { k[i / 64] |= std::uint64_t{1} << (i % 64); }

// Frontier DP along a linear order of one connected component. The state
// records membership of the processed vertices that still have an
// unprocessed upper cover; that set is fixed at each step, so a state is a
// bit vector aligned with it.
template <class Acc>
typename Acc::Value frontier_dp(const Subposet& p, const std::vector<VertexId>& order,
                                const Budget& budget, std::size_t* work = nullptr,
                                std::size_t work_limit = SIZE_MAX) {
  using Value = typename Acc::Value;
  const std::size_t count = order.size();
  std::unordered_map<VertexId, std::size_t> position;
  for (std::size_t k = 0; k < count; ++k) position[order[k]] = k;
  std::vector<long> last_use(count, -1);
  for (std::size_t k = 0; k < count; ++k)
    for (VertexId hi : p.upper_covers(order[k]))
      last_use[k] = std::max(last_use[k], static_cast<long>(position.at(hi)));

  std::vector<std::size_t> active;  // positions
  std::unordered_map<Key, Value, KeyHash> states;
  states.emplace(Key{}, Acc::one());

  for (std::size_t step = 0; step < count; ++step) {
    const VertexId v = order[step];
    std::unordered_map<std::size_t, std::size_t> slot_of;
    for (std::size_t s = 0; s < active.size(); ++s) slot_of[active[s]] = s;
    std::vector<std::size_t> pred_slots;
    for (VertexId lo : p.lower_covers(v)) {
      auto it = slot_of.find(position.at(lo));
      if (it == slot_of.end()) throw InternalError("frontier DP lost a lower cover");
      pred_slots.push_back(it->second);
    }
    std::vector<std::size_t> kept;
    std::vector<std::size_t> next_active;
    for (std::size_t s = 0; s < active.size(); ++s) {
      if (last_use[active[s]] > static_cast<long>(step)) {
        kept.push_back(s);
        next_active.push_back(active[s]);
      }
    }
    const bool keep_v = last_use[step] > static_cast<long>(step);
    if (keep_v) next_active.push_back(step);
    const std::size_t words = (next_active.size() + 63) / 64;

    std::unordered_map<Key, Value, KeyHash> next;
    next.reserve(states.size() * 2);
    for (const auto& [key, value] : states) {
      Key base(words, 0);
      for (std::size_t t = 0; t < kept.size(); ++t)
        if (bit(key, kept[t])) set_bit(base, t);
      auto add = [&](Key k, const Value& val) {
        auto [it, inserted] = next.try_emplace(std::move(k), val);
        if (!inserted) it->second += val;
      };
      add(base, value);
      const bool can_join =
          std::all_of(pred_slots.begin(), pred_slots.end(), [&](std::size_t s) { return bit(key, s); });
      if (can_join) {
        Key with = base;
        if (keep_v) set_bit(with, kept.size());
        add(std::move(with), Acc::grow(value));
      }
    }
    if (next.size() > budget.max_dp_states)
      throw BudgetExceeded("frontier DP exceeded " + std::to_string(budget.max_dp_states) + " states");
    if (work) {
      *work += next.size();
      if (*work > work_limit) throw BudgetExceeded("trial abandoned");
    }
    states = std::move(next);
    active = std::move(next_active);
  }
  Value total{};
  for (const auto& [key, value] : states) total += value;
  return total;
}

// Linear orders by a weight on lattice coordinates, ties broken by vertex id.
// The weight must increase along every relation of the poset.
using Weight = std::array<int, 3>;

std::vector<Weight> valid_weights(const Subposet& p) {
  std::vector<Vertex> steps;
  for (Color c : p.colors().colors()) {
    Vertex d = color_step(c);
    if (p.is_dual()) d = {-d.c1, -d.c2, -d.c3};
    steps.push_back(d);
  }
  std::vector<Weight> out;
  for (int a = -3; a <= 3; ++a)
    for (int b = -3; b <= 3; ++b)
      for (int c = -3; c <= 3; ++c)
        if (std::all_of(steps.begin(), steps.end(),
                        [&](const Vertex& d) { return a * d.c1 + b * d.c2 + c * d.c3 > 0; }))
          out.push_back({a, b, c});
  return out;
}

std::vector<VertexId> order_by(const Subposet& p, const std::vector<VertexId>& comp, const Weight& w) {
  auto key = [&](VertexId v) {
    const Vertex& x = p.parent().vertex(v);
    return w[0] * x.c1 + w[1] * x.c2 + w[2] * x.c3;
  };
  std::vector<VertexId> order = comp;
  std::stable_sort(order.begin(), order.end(), [&](VertexId u, VertexId v) { return key(u) < key(v); });
  return order;
}

// The best order depends on S but hardly on n, so it is chosen once per
// (S, dual) by counting DP states on a small instance.
Weight choose_weight(const Subposet& p, const Budget& budget) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, bool>, Weight> cache;
  const auto cache_key = std::make_pair(p.colors().letters(), p.is_dual());
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(cache_key); it != cache.end()) return it->second;
  }
  const auto weights = valid_weights(p);
  if (weights.empty()) throw InternalError("no linear order found for {" + p.colors().letters() + "}");
  Subposet trial = Subposet::of(std::min(p.n(), 7), p.colors());
  if (p.is_dual()) trial = trial.dual();
  const auto comps = trial.components();
  Weight best = weights.front();
  std::size_t best_work = SIZE_MAX;
  for (const auto& w : weights) {
    std::size_t work = 0;
    try {
      for (const auto& comp : comps) frontier_dp<CountAcc>(trial, order_by(trial, comp, w), budget, &work, best_work);
    } catch (const BudgetExceeded&) {
      continue;
    }
    if (work < best_work) {
      best_work = work;
      best = w;
    }
  }
  std::lock_guard lock(mutex);
  cache.emplace(cache_key, best);
  return best;
}

template <class Acc>
typename Acc::Value frontier_product(const Subposet& p, const Budget& budget) {
  const Weight w = choose_weight(p, budget);
  typename Acc::Value total = Acc::one();
  for (const auto& comp : p.components()) total *= frontier_dp<Acc>(p, order_by(p, comp, w), budget);
  return total;
}

void check_vertices(const Subposet& p, const Budget& budget) {
  if (p.size() > budget.max_vertices)
    throw BudgetExceeded("poset has " + std::to_string(p.size()) + " vertices, budget is " +
                         std::to_string(budget.max_vertices));
}

bool array_model_applies(const Subposet& p) { return p.colors().contains(Color::Green); }

// Ideals of the dual are complements of ideals of p, so the rank generating
// function is reversed.
QPoly reversed(const QPoly& f, std::size_t size) {
  std::vector<BigInt> c(size + 1);
  for (std::size_t k = 0; k <= size; ++k) c[size - k] = f.coeff(k);
  return QPoly(std::move(c));
}

CountMethod resolve(const Subposet& p, CountMethod method) {
  if (method == CountMethod::Auto)
    return array_model_applies(p) ? CountMethod::ArrayDp : CountMethod::FrontierDp;
  if (method == CountMethod::ArrayDp && !array_model_applies(p))
    throw InvalidInput("array DP needs g in S");
  return method;
}

}  // namespace

BigInt count_ideals(const Subposet& p, CountMethod method, const Budget& budget) {
  check_vertices(p, budget);
  switch (resolve(p, method)) {
    case CountMethod::ArrayDp: return count_arrays(p.n(), p.colors());
    case CountMethod::FrontierDp: return frontier_product<CountAcc>(p, budget);
    default: {
      BigInt total = 0;
      enumerate_ideals(p, [&](const OrderIdeal&) { ++total; }, budget);
      return total;
    }
  }
}

QPoly rank_gf(const Subposet& p, CountMethod method, const Budget& budget) {
  check_vertices(p, budget);
  switch (resolve(p, method)) {
    case CountMethod::ArrayDp: {
      QPoly f = array_weight_gf(p.n(), p.colors());
      return p.is_dual() ? reversed(f, p.size()) : f;
    }
    case CountMethod::FrontierDp: return frontier_product<GfAcc>(p, budget);
    default: {
      std::vector<BigInt> tally(p.size() + 1);
      enumerate_ideals(p, [&](const OrderIdeal& ideal) { ++tally[ideal.size()]; }, budget);
      return QPoly(std::move(tally));
    }
  }
}

void enumerate_ideals(const Subposet& p, const IdealVisitor& visit, const Budget& budget) {
  const BigInt total = count_ideals(p, CountMethod::Auto, budget);
  if (total > budget.max_ideals)
    throw BudgetExceeded("poset has " + total.str() + " order ideals, above the enumeration budget " +
                         budget.max_ideals.str());
  const auto& order = p.linear_extension();
  OrderIdeal ideal{std::vector<bool>(p.size(), false)};
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == order.size()) {
      visit(ideal);
      return;
    }
    const VertexId v = order[k];
    self(self, k + 1);
    const auto& lower = p.lower_covers(v);
    if (std::all_of(lower.begin(), lower.end(), [&](VertexId u) { return ideal.members[u]; })) {
      ideal.members[v] = true;
      self(self, k + 1);
      ideal.members[v] = false;
    }
  };
  rec(rec, 0);
}

// ---------------------------------------------------------------- ideals <-> arrays

// Layer c3 = n - k of T_n is the component P_k of T_n({r,b,g}); its green
// chain with c1 = i - 1 has length j = k - i and feeds x_{i,j}.
StaircaseArray ideal_to_array(const Subposet& p, const OrderIdeal& ideal) {
  if (!array_model_applies(p)) throw InvalidInput("ideal_to_array needs g in S and a non-dual poset");
  if (!is_ideal(p, ideal)) throw InvalidInput("input is not an order ideal of T_n(" + p.colors().letters() + ")");
  const int n = p.n();
  StaircaseArray x(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n - i; ++j) {
      int filled = 0;
      while (filled < j && ideal.members[*p.parent().find({i - 1, filled, n - i - j})]) ++filled;
      x.set(i, j, i + filled);
    }
  }
  const auto bad = violation(x, p.colors());
  if (!bad.empty()) throw InternalError("ideal maps outside Y_n(S): " + bad);
  return x;
}

OrderIdeal array_to_ideal(const Subposet& p, const StaircaseArray& x) {
  if (!array_model_applies(p)) throw InvalidInput("array_to_ideal needs g in S and a non-dual poset");
  if (x.n() != p.n()) throw InvalidInput("array order does not match the poset");
  const auto bad = violation(x, p.colors());
  if (!bad.empty()) throw ConstraintMismatch("array is not in Y_n(" + p.colors().letters() + "): " + bad);
  const int n = p.n();
  OrderIdeal ideal{std::vector<bool>(p.size(), false)};
  for (VertexId id = 0; id < p.size(); ++id) {
    const Vertex& v = p.parent().vertex(id);
    const int i = v.c1 + 1, j = n - 1 - v.c1 - v.c3;
    ideal.members[id] = v.c2 < x.at(i, j) - i;
  }
  return ideal;
}

std::string to_dot(const Subposet& p) {
  const TetraPoset& t = p.parent();
  std::ostringstream os;
  os << "digraph \"T_" << p.n() << "(" << p.colors().letters() << ")" << (p.is_dual() ? "*" : "")
     << "\" {\n";
  for (VertexId v = 0; v < t.size(); ++v)
    os << "  v" << v << " [label=\"" << t.vertex(v).label() << "\"];\n";
  for (Color c : p.colors().colors()) {
    for (const Edge& e : t.edges(c)) {
      const VertexId from = p.is_dual() ? e.high : e.low;
      const VertexId to = p.is_dual() ? e.low : e.high;
      os << "  v" << from << " -> v" << to << " [color=" << color_name(c) << "];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace tetra
