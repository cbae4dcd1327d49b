#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "fermat/rational.hpp"

namespace fermat {

/// Dense univariate polynomial over Q, coefficients stored from degree 0 upward.
struct UnivariatePolynomial {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  std::string str(std::string_view var = "z") const;
  friend bool operator==(const UnivariatePolynomial&, const UnivariatePolynomial&) = default;
};

/// The n-th cyclotomic polynomial: monic, integer coefficients, degree phi(n).
UnivariatePolynomial cyclotomic_polynomial(int n);

int euler_phi(int n);

/// Q(zeta_n) as Q[z]/(Phi_n). Immutable; numbers hold a shared pointer to their field.
class CycloField {
 public:
  static std::shared_ptr<const CycloField> make(int conductor);

  int conductor() const { return conductor_; }
  int degree() const { return static_cast<int>(modulus_.coeffs.size()) - 1; }
  const UnivariatePolynomial& modulus() const { return modulus_; }
  /// Name of the field generator in text form, `z_n`.
  std::string generator_name() const { return "z_" + std::to_string(conductor_); }

 private:
  explicit CycloField(int conductor);
  int conductor_;
  UnivariatePolynomial modulus_;
};

using CycloFieldPtr = std::shared_ptr<const CycloField>;

/// An element of Q(zeta_n), stored as its reduced residue modulo Phi_n.
class CycloNumber {
 public:
  /// Zero of the given field.
  explicit CycloNumber(CycloFieldPtr field);
  CycloNumber(CycloFieldPtr field, const Rational& value);
  /// Reduces an arbitrary-length coefficient vector (low degree first) modulo Phi_n.
  CycloNumber(CycloFieldPtr field, std::vector<Rational> coeffs);

  /// zeta_n^k for any integer k.
  static CycloNumber zeta_power(CycloFieldPtr field, long k);

  int conductor() const { return field_->conductor(); }
  const CycloFieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// True when the value lies in Q, i.e. only the constant coefficient is nonzero.
  bool is_rational() const;
  /// Number of nonzero coefficients.
  int term_count() const;
  std::size_t bit_size() const;

  CycloNumber inverse() const;
  CycloNumber pow(long k) const;
  CycloNumber operator-() const;

  CycloNumber& operator+=(const CycloNumber& o);
  CycloNumber& operator-=(const CycloNumber& o);
  CycloNumber& operator*=(const CycloNumber& o);
  CycloNumber& operator*=(const Rational& o);
  CycloNumber& operator/=(const CycloNumber& o) { return *this *= o.inverse(); }

  friend CycloNumber operator+(CycloNumber a, const CycloNumber& b) { return a += b; }
  friend CycloNumber operator-(CycloNumber a, const CycloNumber& b) { return a -= b; }
  friend CycloNumber operator*(CycloNumber a, const CycloNumber& b) { return a *= b; }
  friend CycloNumber operator*(CycloNumber a, const Rational& b) { return a *= b; }
  friend CycloNumber operator/(CycloNumber a, const CycloNumber& b) { return a /= b; }

  friend bool operator==(const CycloNumber& a, const CycloNumber& b);

  /// Polynomial in `z_n` with decreasing powers, e.g. `1/2*z_3 - 1`.
  std::string str() const;

 private:
  void check_same_field(const CycloNumber& o) const;
  CycloFieldPtr field_;
  std::vector<Rational> coeffs_;
};

/// Re-expresses `a` in Q(zeta_target); `target` must be a multiple of a's conductor.
CycloNumber promote(const CycloNumber& a, const CycloFieldPtr& target);

int lcm_conductor(int a, int b);

}  // namespace fermat
