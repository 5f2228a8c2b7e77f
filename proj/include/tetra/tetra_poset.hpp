#pragma once

#include "tetra/bigint.hpp"
#include "tetra/color.hpp"
#include "tetra/qpoly.hpp"
#include "tetra/staircase_array.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace tetra {

/// Lattice point c1*r + c2*g + c3*y of T_n.
struct Vertex {
  int c1 = 0;
  int c2 = 0;
  int c3 = 0;

  Vertex operator+(const Vertex& o) const { return {c1 + o.c1, c2 + o.c2, c3 + o.c3}; }
  std::string label() const;  // "c1,c2,c3"
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// Upward step of each color in lattice coordinates.
Vertex color_step(Color c);

using VertexId = std::size_t;

struct Edge {
  VertexId low;
  VertexId high;
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// The tetrahedral poset T_n with all six colored edge families.
class TetraPoset {
 public:
  /// n >= 1; T_1 is empty. InvalidInput otherwise.
  static TetraPoset build(int n);

  int n() const { return n_; }
  std::size_t size() const { return vertices_.size(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(VertexId id) const { return vertices_[id]; }
  std::optional<VertexId> find(const Vertex& v) const;
  const std::vector<Edge>& edges(Color c) const { return edges_[static_cast<std::size_t>(c)]; }
  std::size_t edge_count() const;

 private:
  TetraPoset() = default;
  int n_ = 0;
  std::vector<Vertex> vertices_;       // sorted lexicographically
  std::vector<long> index_;            // dense lookup by coordinates, -1 if absent
  std::array<std::vector<Edge>, 6> edges_;
};

/// T_n(S), or its dual, with the transitive closure of the chosen edges.
class Subposet {
 public:
  /// Requires an admissible S; InvalidInput names the violated rule.
  Subposet(std::shared_ptr<const TetraPoset> parent, ColorSet colors);
  static Subposet of(int n, const ColorSet& colors);

  const TetraPoset& parent() const { return *parent_; }
  int n() const { return parent_->n(); }
  const ColorSet& colors() const { return colors_; }
  bool is_dual() const { return dual_; }
  std::size_t size() const { return parent_->size(); }
  Subposet dual() const;

  /// Generating relations (low < high in this poset, already reversed for duals).
  const std::vector<Edge>& relations() const { return relations_; }
  const std::vector<VertexId>& lower_covers(VertexId v) const { return lower_[v]; }
  const std::vector<VertexId>& upper_covers(VertexId v) const { return upper_[v]; }
  /// Strict order of the transitive closure.
  bool less(VertexId u, VertexId v) const;
  /// Vertices sorted so that every relation goes forward.
  const std::vector<VertexId>& linear_extension() const { return linear_; }
  /// Connected components of the comparability graph, each sorted.
  std::vector<std::vector<VertexId>> components() const;

  friend bool operator==(const Subposet& a, const Subposet& b) {
    return a.n() == b.n() && a.colors_ == b.colors_ && a.dual_ == b.dual_;
  }

 private:
  Subposet(std::shared_ptr<const TetraPoset> parent, ColorSet colors, bool dual);
  std::shared_ptr<const TetraPoset> parent_;
  ColorSet colors_;
  bool dual_ = false;
  std::vector<Edge> relations_;
  std::vector<std::vector<VertexId>> lower_;
  std::vector<std::vector<VertexId>> upper_;
  std::vector<VertexId> linear_;
  std::vector<std::vector<std::uint64_t>> above_;  // closure bitsets
};

/// Membership vector over the vertices of the parent poset.
struct OrderIdeal {
  std::vector<bool> members;

  std::size_t size() const;
  bool contains(VertexId v) const { return members[v]; }
  std::vector<Vertex> sorted_vertices(const TetraPoset& t) const;
  friend bool operator==(const OrderIdeal&, const OrderIdeal&) = default;
};

bool is_ideal(const Subposet& p, const OrderIdeal& ideal);

/// Limits for the exponential paths. Counting is DP-only and limited by the
/// number of vertices and live DP states; enumeration refuses when the
/// number of ideals exceeds max_ideals.
struct Budget {
  std::size_t max_vertices = 4096;
  std::size_t max_dp_states = 20'000'000;
  BigInt max_ideals = BigInt(100'000'000);

  /// Defaults, with max_ideals taken from TETRAPOSET_BUDGET when set.
  static Budget from_env();
};

enum class CountMethod {
  Auto,          // array DP when g is present (duals by complement), else frontier DP
  ArrayDp,
  FrontierDp,
  Enumerate,
};

BigInt count_ideals(const Subposet& p, CountMethod method = CountMethod::Auto,
                    const Budget& budget = {});
QPoly rank_gf(const Subposet& p, CountMethod method = CountMethod::Auto,
              const Budget& budget = {});

using IdealVisitor = std::function<void(const OrderIdeal&)>;
/// Visits each ideal exactly once.
void enumerate_ideals(const Subposet& p, const IdealVisitor& visit, const Budget& budget = {});

/// Requires g in S and a non-dual poset.
StaircaseArray ideal_to_array(const Subposet& p, const OrderIdeal& ideal);
OrderIdeal array_to_ideal(const Subposet& p, const StaircaseArray& x);

/// Digraph with one statement per colored edge of the subposet.
std::string to_dot(const Subposet& p);

}  // namespace tetra
