#pragma once

#include "tetra/staircase_array.hpp"

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace tetra {

/// Families of arrays matched by the object bijections.
inline const ColorSet kAsmColors = ColorSet::parse("gyob");
inline const ColorSet kTsscppColors = ColorSet::parse("gyor");
inline const ColorSet kTournamentColors = ColorSet::parse("brg");
inline const ColorSet kTsscppTournamentColors = ColorSet::parse("brgy");
inline const ColorSet kSchurColors = ColorSet::parse("gyo");

/// Alternating sign matrix, 1-based access.
class Asm {
 public:
  /// Validates entries, row/column sums and partial sums (InvalidInput).
  explicit Asm(std::vector<std::vector<int>> entries);
  static Asm identity(int n);

  int n() const { return static_cast<int>(a_.size()); }
  int at(int i, int j) const { return a_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& entries() const { return a_; }

  friend bool operator==(const Asm&, const Asm&) = default;
  friend auto operator<=>(const Asm&, const Asm&) = default;

 private:
  std::vector<std::vector<int>> a_;
};

/// Monotone triangle; row r (1-based, from the top) has r entries.
class MonotoneTriangle {
 public:
  explicit MonotoneTriangle(std::vector<std::vector<int>> rows);

  int n() const { return static_cast<int>(rows_.size()); }
  int at(int r, int c) const { return rows_[r - 1][c - 1]; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }

  friend bool operator==(const MonotoneTriangle&, const MonotoneTriangle&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Totally symmetric self-complementary plane partition in a 2n box, stored as
/// the full 2n x 2n matrix of column heights.
class Tsscpp {
 public:
  explicit Tsscpp(std::vector<std::vector<int>> heights);

  int n() const { return static_cast<int>(t_.size()) / 2; }
  int at(int i, int j) const { return t_[i - 1][j - 1]; }
  const std::vector<std::vector<int>>& heights() const { return t_; }

  friend bool operator==(const Tsscpp&, const Tsscpp&) = default;

 private:
  std::vector<std::vector<int>> t_;
};

/// First violated TSSCPP invariant, or empty.
std::string tsscpp_violation(const std::vector<std::vector<int>>& heights);

/// Tournament on 1..n. An upset is a game won by the larger label.
class Tournament {
 public:
  explicit Tournament(int n);  // every game won by the smaller label
  /// Games as (i, j, winner) triples; each pair i < j exactly once.
  static Tournament from_games(int n, const std::vector<std::array<int, 3>>& games);

  int n() const { return n_; }
  bool upset(int i, int j) const;  // i < j
  void set_upset(int i, int j, bool value);
  int winner(int i, int j) const { return upset(i, j) ? j : i; }
  int upsets() const;
  int wins(int v) const;
  std::vector<std::array<int, 3>> games() const;

  friend bool operator==(const Tournament&, const Tournament&) = default;

 private:
  std::size_t index(int i, int j) const;
  int n_;
  std::vector<bool> upsets_;
};

MonotoneTriangle asm_to_mt(const Asm& a);
Asm mt_to_asm(const MonotoneTriangle& m);
StaircaseArray mt_to_array(const MonotoneTriangle& m);
/// Throws ConstraintMismatch unless x is in Y_n({g,y,o,b}).
MonotoneTriangle array_to_mt(const StaircaseArray& x);

StaircaseArray tsscpp_to_array(const Tsscpp& t);
/// Throws ConstraintMismatch unless x is in Y_n({g,y,o,r}).
Tsscpp array_to_tsscpp(const StaircaseArray& x);

StaircaseArray tournament_to_array(const Tournament& t);
/// Throws ConstraintMismatch unless x is in Y_n({b,r,g}).
Tournament array_to_tournament(const StaircaseArray& x);

/// Whenever v has k upsets against {u..v-1}, v-1 has at most k upsets
/// against {u..v-2}.
bool tsscpp_tournament_check(const Tournament& t);

/// Independent generators used by the verification suites.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);
void for_each_tournament(int n, const std::function<void(const Tournament&)>& visit);

}  // namespace tetra
