#include "tetra/qpoly.hpp"

#include "tetra/errors.hpp"

#include <sstream>
#include <utility>

namespace tetra {

QPoly::QPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

QPoly::QPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const BigInt& c) { return QPoly(std::vector<BigInt>{c}); }

QPoly QPoly::monomial(std::size_t degree, const BigInt& c) {
  std::vector<BigInt> v(degree + 1);
  v[degree] = c;
  return QPoly(std::move(v));
}

QPoly QPoly::q_integer(unsigned m) { return QPoly(std::vector<BigInt>(m, BigInt(1))); }

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigInt QPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : BigInt(0); }

long QPoly::valuation() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k)
    if (coeffs_[k] != 0) return static_cast<long>(k);
  return -1;
}

BigInt QPoly::evaluate(const BigInt& q) const {
  BigInt r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * q + *it;
  return r;
}

BigInt QPoly::at_one() const {
  BigInt r = 0;
  for (const auto& c : coeffs_) r += c;
  return r;
}

QPoly QPoly::shifted(std::size_t by) const {
  if (is_zero()) return {};
  std::vector<BigInt> v(by);
  v.insert(v.end(), coeffs_.begin(), coeffs_.end());
  return QPoly(std::move(v));
}

QPoly QPoly::pow(unsigned e) const {
  QPoly result = constant(1);
  QPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

QPoly& QPoly::operator+=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigInt> r(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t a = 0; a < coeffs_.size(); ++a) {
    if (coeffs_[a] == 0) continue;
    for (std::size_t b = 0; b < o.coeffs_.size(); ++b) r[a + b] += coeffs_[a] * o.coeffs_[b];
  }
  coeffs_ = std::move(r);
  trim();
  return *this;
}

// Long division over the integers. Every step must divide exactly by the
// leading coefficient of the divisor, which always holds for the q-integer
// quotients used here.
QPoly::DivResult QPoly::divide(const QPoly& divisor) const {
  if (divisor.is_zero()) throw InternalError("QPoly::divide: division by zero");
  std::vector<BigInt> rem = coeffs_;
  const std::size_t dlen = divisor.coeffs_.size();
  const BigInt& lead = divisor.coeffs_.back();
  std::vector<BigInt> quot(rem.size() >= dlen ? rem.size() - dlen + 1 : 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const BigInt& top = rem[k + dlen - 1];
    if (top == 0) continue;
    BigInt q, r;
    boost::multiprecision::divide_qr(top, lead, q, r);
    if (r != 0) throw InternalError("QPoly::divide: leading coefficient does not divide");
    quot[k] = q;
    for (std::size_t i = 0; i < dlen; ++i) rem[k + i] -= q * divisor.coeffs_[i];
  }
  return {QPoly(std::move(quot)), QPoly(std::move(rem))};
}

QPoly QPoly::exact_div(const QPoly& divisor) const {
  auto [q, r] = divide(divisor);
  if (!r.is_zero())
    throw InternalError("QPoly::exact_div: nonzero remainder " + r.to_string() + " dividing " +
                        to_string() + " by " + divisor.to_string());
  return q;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const BigInt& c = coeffs_[k];
    if (c == 0) continue;
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (k == 0 || mag != 1) os << mag;
    if (k > 0) {
      if (mag != 1) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

}  // namespace tetra
