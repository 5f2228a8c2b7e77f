#include "tetra/bigint.hpp"

#include "tetra/errors.hpp"


namespace tetra {

BigInt factorial(unsigned n) {
  BigInt r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

BigInt binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt r = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;  // exact: r is binom(n-k+i, i) here
  }
  return r;
}

BigInt pow2(unsigned e) {
  BigInt r = 1;
  r <<= e;
  return r;
}

BigInt exact_divide(const BigInt& a, const BigInt& b) {
  if (b == 0) throw InternalError("exact_divide: division by zero");
  BigInt q, r;
  boost::multiprecision::divide_qr(a, b, q, r);
  if (r != 0) throw InternalError("exact_divide: " + a.str() + " is not divisible by " + b.str());
  return q;
}

void ExactRational::multiply(const BigInt& num, const BigInt& den) {
  if (den == 0) throw InternalError("ExactRational: zero denominator");
  num_ *= num;
  den_ *= den;
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

BigInt ExactRational::integer_value() const {
  if (den_ != 1) throw InternalError("product " + num_.str() + "/" + den_.str() + " is not an integer");
  return num_;
}

}  // namespace tetra
