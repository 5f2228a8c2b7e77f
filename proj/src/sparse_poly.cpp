#include "tetra/sparse_poly.hpp"

#include "tetra/errors.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tetra {

Monomial Monomial::lambda_power(unsigned e) { return Monomial{e, {}}; }

Monomial Monomial::variable(std::size_t k, unsigned e) {
  Monomial m;
  if (k == 0) throw InvalidInput("x variables are 1-based");
  m.x.assign(k, 0);
  m.x[k - 1] = e;
  m.normalize();
  return m;
}

unsigned Monomial::x_exponent(std::size_t k) const { return k >= 1 && k <= x.size() ? x[k - 1] : 0; }

unsigned Monomial::x_degree() const { return std::accumulate(x.begin(), x.end(), 0u); }

unsigned Monomial::total_degree() const { return lambda + x_degree(); }

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.lambda = lambda + o.lambda;
  r.x.assign(std::max(x.size(), o.x.size()), 0);
  for (std::size_t k = 0; k < x.size(); ++k) r.x[k] += x[k];
  for (std::size_t k = 0; k < o.x.size(); ++k) r.x[k] += o.x[k];
  r.normalize();
  return r;
}

void Monomial::normalize() {
  while (!x.empty() && x.back() == 0) x.pop_back();
}

std::string Monomial::to_string() const {
  std::ostringstream os;
  bool any = false;
  auto factor = [&](const std::string& name, unsigned e) {
    if (e == 0) return;
    if (any) os << "*";
    os << name;
    if (e > 1) os << "^" << e;
    any = true;
  };
  factor("lambda", lambda);
  for (std::size_t k = 0; k < x.size(); ++k) factor("x" + std::to_string(k + 1), x[k]);
  return any ? os.str() : "1";
}

bool GradedLex::operator()(const Monomial& a, const Monomial& b) const {
  const unsigned da = a.total_degree(), db = b.total_degree();
  if (da != db) return da < db;
  if (a.lambda != b.lambda) return a.lambda > b.lambda;
  const std::size_t len = std::max(a.x.size(), b.x.size());
  for (std::size_t k = 1; k <= len; ++k) {
    const unsigned ea = a.x_exponent(k), eb = b.x_exponent(k);
    if (ea != eb) return ea > eb;
  }
  return false;
}

SparsePoly SparsePoly::constant(const BigInt& c) { return term(Monomial{}, c); }

SparsePoly SparsePoly::term(const Monomial& m, const BigInt& c) {
  SparsePoly p;
  p.add_term(m, c);
  return p;
}

BigInt SparsePoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool SparsePoly::has_lambda() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.first.lambda > 0; });
}

unsigned SparsePoly::max_lambda_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.lambda);
  return d;
}

void SparsePoly::add_term(const Monomial& m, const BigInt& c) {
  if (c == 0) return;
  Monomial key = m;
  key.normalize();
  auto [it, inserted] = terms_.try_emplace(std::move(key), c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

SparsePoly operator*(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, ca * cb);
  return r;
}

SparsePoly SparsePoly::pow(unsigned e) const {
  SparsePoly result = constant(1);
  for (unsigned k = 0; k < e; ++k) result *= *this;
  return result;
}

BigInt SparsePoly::evaluate(const BigInt& lambda, std::span<const BigInt> xs) const {
  BigInt total = 0;
  for (const auto& [m, c] : terms_) {
    BigInt v = c;
    for (unsigned e = 0; e < m.lambda; ++e) v *= lambda;
    for (std::size_t k = 0; k < m.x.size(); ++k) {
      if (k >= xs.size()) continue;
      for (unsigned e = 0; e < m.x[k]; ++e) v *= xs[k];
    }
    total += v;
  }
  return total;
}

QPoly SparsePoly::lambda_part() const {
  std::vector<BigInt> coeffs(max_lambda_degree() + 1);
  for (const auto& [m, c] : terms_) coeffs[m.lambda] += c;
  return QPoly(std::move(coeffs));
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    BigInt mag = c < 0 ? BigInt(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    const std::string body = m.to_string();
    if (body == "1") {
      os << mag;
    } else {
      if (mag != 1) os << mag << "*";
      os << body;
    }
  }
  return os.str();
}

std::optional<Monomial> first_difference(const SparsePoly& a, const SparsePoly& b) {
  SparsePoly diff = a - b;
  if (diff.is_zero()) return std::nullopt;
  return diff.terms().begin()->first;
}

QPoly principal_specialization(const SparsePoly& p) {
  if (p.has_lambda()) throw InvalidInput("principal specialization requires a lambda-free polynomial");
  QPoly r;
  for (const auto& [m, c] : p.terms()) {
    std::size_t deg = 0;
    for (std::size_t k = 0; k < m.x.size(); ++k) deg += k * m.x[k];
    r += QPoly::monomial(deg, c);
  }
  return r;
}

}  // namespace tetra
