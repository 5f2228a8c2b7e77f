#pragma once

#include "tetra/bigint.hpp"
#include "tetra/qpoly.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tetra {

/// Exponent vector over lambda and x_1..x_n. `x[k-1]` is the exponent of x_k;
/// trailing zero exponents are never stored so equal monomials compare equal.
struct Monomial {
  unsigned lambda = 0;
  std::vector<unsigned> x;

  static Monomial lambda_power(unsigned e);
  static Monomial variable(std::size_t k, unsigned e = 1);  // x_k^e, k >= 1

  unsigned x_exponent(std::size_t k) const;  // 1-based
  unsigned total_degree() const;
  unsigned x_degree() const;
  Monomial operator*(const Monomial& o) const;
  void normalize();
  std::string to_string() const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lexicographic order: total degree first, then lambda, then x_1, x_2, ...
struct GradedLex {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Exact multivariate polynomial in lambda and x_1..x_n.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, BigInt, GradedLex>;

  SparsePoly() = default;
  static SparsePoly constant(const BigInt& c);
  static SparsePoly term(const Monomial& m, const BigInt& c = 1);

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const Terms& terms() const { return terms_; }
  BigInt coeff(const Monomial& m) const;
  bool has_lambda() const;
  unsigned max_lambda_degree() const;

  void add_term(const Monomial& m, const BigInt& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  SparsePoly pow(unsigned e) const;
  friend bool operator==(const SparsePoly&, const SparsePoly&) = default;

  /// Evaluates at lambda and x_k = xs[k-1]; missing x values default to 1.
  BigInt evaluate(const BigInt& lambda, std::span<const BigInt> xs = {}) const;
  /// Substitutes x_k := 1 and keeps lambda as the variable.
  QPoly lambda_part() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

/// Smallest monomial (in graded lex order) on which a and b differ.
std::optional<Monomial> first_difference(const SparsePoly& a, const SparsePoly& b);

/// x_k := q^(k-1). Rejects lambda-bearing input with InvalidInput.
QPoly principal_specialization(const SparsePoly& p);

}  // namespace tetra
