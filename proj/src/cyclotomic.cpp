#include "fermat/cyclotomic.hpp"

#include <numeric>
#include <utility>

#include "fermat/detail/term_text.hpp"
#include "fermat/errors.hpp"

namespace fermat {

namespace {

using Coeffs = std::vector<Rational>;

void trim(Coeffs& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

// Quotient and remainder of a by b over Q; b must be nonzero.
std::pair<Coeffs, Coeffs> divide(Coeffs a, const Coeffs& b) {
  trim(a);
  int db = static_cast<int>(b.size()) - 1;
  if (static_cast<int>(a.size()) - 1 < db) return {Coeffs{}, a};
  Coeffs q(a.size() - b.size() + 1, Rational(0));
  Rational lead_inv = b.back().inverse();
  for (int k = static_cast<int>(a.size()) - 1; k >= db; --k) {
    if (a[k].is_zero()) continue;
    Rational c = a[k] * lead_inv;
    q[k - db] = c;
    for (int j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
  }
  a.resize(db);
  trim(a);
  trim(q);
  return {q, a};
}

Coeffs multiply(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs r(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

Coeffs subtract(Coeffs a, const Coeffs& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

std::string UnivariatePolynomial::str(std::string_view var) const {
  std::string out;
  std::string v(var);
  for (int k = degree(); k >= 0; --k) {
    if (coeffs[k].is_zero()) continue;
    detail::append_term(out, coeffs[k], k == 0 ? std::string() : detail::power_text(v, k));
  }
  return out.empty() ? "0" : out;
}

int euler_phi(int n) {
  if (n < 1) throw Error("euler_phi: n must be positive");
  int result = n;
  int m = n;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

UnivariatePolynomial cyclotomic_polynomial(int n) {
  if (n < 1) throw Error("cyclotomic_polynomial: n must be positive");
  // z^n - 1 = prod_{d | n} Phi_d(z)
  Coeffs p(n + 1, Rational(0));
  p[0] = Rational(-1);
  p[n] = Rational(1);
  for (int d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, r] = divide(p, cyclotomic_polynomial(d).coeffs);
    if (!r.empty()) throw Error("cyclotomic_polynomial: inexact division");
    p = std::move(q);
  }
  return UnivariatePolynomial{std::move(p)};
}

CycloField::CycloField(int conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {}

std::shared_ptr<const CycloField> CycloField::make(int conductor) {
  if (conductor < 1) throw Error("cyclotomic field conductor must be >= 1");
  return std::shared_ptr<const CycloField>(new CycloField(conductor));
}

int lcm_conductor(int a, int b) { return std::lcm(a, b); }

CycloNumber::CycloNumber(CycloFieldPtr field)
    : field_(std::move(field)), coeffs_(field_->degree(), Rational(0)) {}

CycloNumber::CycloNumber(CycloFieldPtr field, const Rational& value) : CycloNumber(std::move(field)) {
  coeffs_[0] = value;
}

CycloNumber::CycloNumber(CycloFieldPtr field, std::vector<Rational> coeffs)
    : field_(std::move(field)) {
  const auto& mod = field_->modulus().coeffs;
  int phi = field_->degree();
  // Monic reduction from the top coefficient down.
  for (int k = static_cast<int>(coeffs.size()) - 1; k >= phi; --k) {
    if (coeffs[k].is_zero()) continue;
    Rational c = coeffs[k];
    for (int j = 0; j <= phi; ++j) {
      if (!mod[j].is_zero()) coeffs[k - phi + j] -= c * mod[j];
    }
  }
  coeffs.resize(phi, Rational(0));
  coeffs_ = std::move(coeffs);
}

CycloNumber CycloNumber::zeta_power(CycloFieldPtr field, long k) {
  long n = field->conductor();
  long e = ((k % n) + n) % n;
  std::vector<Rational> c(e + 1, Rational(0));
  c[e] = Rational(1);
  return CycloNumber(std::move(field), std::move(c));
}

bool CycloNumber::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool CycloNumber::is_rational() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool CycloNumber::is_one() const { return is_rational() && coeffs_[0].is_one(); }

int CycloNumber::term_count() const {
  int count = 0;
  for (const auto& c : coeffs_) count += c.is_zero() ? 0 : 1;
  return count;
}

std::size_t CycloNumber::bit_size() const {
  std::size_t total = 0;
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) total += c.bit_size();
  }
  return total;
}

void CycloNumber::check_same_field(const CycloNumber& o) const {
  if (field_ != o.field_ && field_->conductor() != o.field_->conductor()) {
    throw RingMismatch("cyclotomic conductors differ: " + std::to_string(conductor()) + " vs " +
                       std::to_string(o.conductor()));
  }
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CycloNumber& CycloNumber::operator+=(const CycloNumber& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator-=(const CycloNumber& o) {
  check_same_field(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CycloNumber& CycloNumber::operator*=(const Rational& o) {
  for (auto& c : coeffs_) c *= o;
  return *this;
}

CycloNumber& CycloNumber::operator*=(const CycloNumber& o) {
  check_same_field(o);
  if (o.is_rational()) return *this *= o.coeffs_[0];
  if (is_rational()) {
    Rational s = coeffs_[0];
    coeffs_ = o.coeffs_;
    return *this *= s;
  }
  std::vector<Rational> product(2 * coeffs_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      if (!o.coeffs_[j].is_zero()) product[i + j] += coeffs_[i] * o.coeffs_[j];
    }
  }
  *this = CycloNumber(field_, std::move(product));
  return *this;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CycloNumber(field_, coeffs_[0].inverse());
  // Extended Euclid on (a, Phi_n): track s with s * a == r (mod Phi_n).
  Coeffs r0 = field_->modulus().coeffs;
  Coeffs r1 = coeffs_;
  trim(r1);
  Coeffs s0;
  Coeffs s1{Rational(1)};
  while (r1.size() > 1) {
    auto [q, rem] = divide(r0, r1);
    Coeffs s2 = subtract(s0, multiply(q, s1));
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_n is irreducible.
  Rational c = r1.at(0).inverse();
  for (auto& v : s1) v *= c;
  return CycloNumber(field_, std::move(s1));
}

CycloNumber CycloNumber::pow(long k) const {
  if (k < 0) return inverse().pow(-k);
  CycloNumber result(field_, Rational(1));
  CycloNumber base(*this);
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

bool operator==(const CycloNumber& a, const CycloNumber& b) {
  return a.conductor() == b.conductor() && a.coeffs_ == b.coeffs_;
}

std::string CycloNumber::str() const {
  std::string out;
  std::string gen = field_->generator_name();
  for (int k = static_cast<int>(coeffs_.size()) - 1; k >= 0; --k) {
    if (coeffs_[k].is_zero()) continue;
    detail::append_term(out, coeffs_[k], k == 0 ? std::string() : detail::power_text(gen, k));
  }
  return out.empty() ? "0" : out;
}

CycloNumber promote(const CycloNumber& a, const CycloFieldPtr& target) {
  if (target->conductor() % a.conductor() != 0) {
    throw RingMismatch("cannot promote conductor " + std::to_string(a.conductor()) + " into " +
                       std::to_string(target->conductor()));
  }
  long step = target->conductor() / a.conductor();
  std::vector<Rational> c(static_cast<std::size_t>(step) * a.coeffs().size(), Rational(0));
  for (std::size_t k = 0; k < a.coeffs().size(); ++k) c[k * step] = a.coeffs()[k];
  return CycloNumber(target, std::move(c));
}

}  // namespace fermat
