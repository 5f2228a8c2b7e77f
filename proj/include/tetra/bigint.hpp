#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace tetra {

using BigInt = boost::multiprecision::cpp_int;

BigInt factorial(unsigned n);
BigInt binomial(std::int64_t n, std::int64_t k);
BigInt pow2(unsigned e);

// Exact a / b; throws InternalError when b does not divide a.
BigInt exact_divide(const BigInt& a, const BigInt& b);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

// Running product of rational factors kept in lowest terms.
class ExactRational {
 public:
  void multiply(const BigInt& num, const BigInt& den);
  // Value of the product; throws InternalError unless it is an integer.
  BigInt integer_value() const;

 private:
  BigInt num_ = 1;
  BigInt den_ = 1;
};

}  // namespace tetra
