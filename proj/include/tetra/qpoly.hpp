#pragma once

#include "tetra/bigint.hpp"

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace tetra {

/// Univariate polynomial with big-integer coefficients.
///
/// Stored densely, lowest degree first, with no trailing zero coefficients;
/// the zero polynomial has an empty coefficient list. Used for rank
/// generating functions in q and for one-variable specializations in lambda.
class QPoly {
 public:
  QPoly() = default;
  QPoly(std::initializer_list<long> coeffs);
  explicit QPoly(std::vector<BigInt> coeffs);
  static QPoly constant(const BigInt& c);
  static QPoly monomial(std::size_t degree, const BigInt& c = 1);
  /// [m]_q = 1 + q + ... + q^(m-1); [0]_q = 0.
  static QPoly q_integer(unsigned m);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of the polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Coefficient of q^k (zero outside the stored range).
  BigInt coeff(std::size_t k) const;
  const std::vector<BigInt>& coefficients() const { return coeffs_; }
  /// Lowest exponent with a nonzero coefficient; -1 for zero.
  long valuation() const;

  BigInt evaluate(const BigInt& q) const;
  BigInt at_one() const;

  QPoly shifted(std::size_t by) const;  // times q^by
  QPoly pow(unsigned e) const;

  QPoly& operator+=(const QPoly& o);
  QPoly& operator-=(const QPoly& o);
  QPoly& operator*=(const QPoly& o);
  friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
  friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
  friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
  friend bool operator==(const QPoly&, const QPoly&) = default;

  struct DivResult;
  DivResult divide(const QPoly& divisor) const;
  /// Exact quotient; throws InternalError on a nonzero remainder.
  QPoly exact_div(const QPoly& divisor) const;

  std::string to_string(const std::string& var = "q") const;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

struct QPoly::DivResult {
  QPoly quotient;
  QPoly remainder;
};

}  // namespace tetra
