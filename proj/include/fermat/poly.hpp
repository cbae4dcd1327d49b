#pragma once

#include <memory>
#include <string>
#include <vector>

#include "fermat/cyclotomic.hpp"
#include "fermat/monomial.hpp"
#include "fermat/rational.hpp"

namespace fermat {

/// Variable names, monomial order and coefficient field of a polynomial ring.
/// The field is Q when the conductor is 1 and Q(zeta_n) otherwise.
struct Ring {
  std::vector<std::string> vars;
  MonomialOrder order = MonomialOrder::grevlex();
  CycloFieldPtr field;

  int nvars() const { return static_cast<int>(vars.size()); }
  int conductor() const { return field->conductor(); }
  bool is_rational() const { return conductor() == 1; }
  std::string describe() const;
};

using RingPtr = std::shared_ptr<const Ring>;

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order = MonomialOrder::grevlex(),
                  int conductor = 1);
/// Q[x, y, z] with graded reverse lex, the home ring of every Fermat ideal.
RingPtr xyz_ring();
RingPtr with_order(const RingPtr& ring, const MonomialOrder& order);
RingPtr with_conductor(const RingPtr& ring, int conductor);
bool same_ring(const Ring& a, const Ring& b);
/// Throws RingMismatch unless the two rings agree.
void require_same_ring(const Ring& a, const Ring& b, const char* what);

template <class Coeff>
struct Term {
  Monomial mono;
  Coeff coeff;
  friend bool operator==(const Term&, const Term&) = default;
};

/// Sparse polynomial: terms strictly decreasing in the ring's order, no zero coefficients.
template <class Coeff>
class Poly {
 public:
  using TermType = Term<Coeff>;

  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  /// Sorts, merges equal monomials and drops zeros.
  Poly(RingPtr ring, std::vector<TermType> terms);

  static Poly constant(RingPtr ring, const Rational& value);
  static Poly variable(RingPtr ring, int index);
  static Poly term(RingPtr ring, Monomial mono, Coeff coeff);

  const RingPtr& ring() const { return ring_; }
  const std::vector<TermType>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermType& leading() const { return terms_.front(); }
  Monomial leading_monomial() const { return terms_.front().mono; }
  const Coeff& leading_coeff() const { return terms_.front().coeff; }

  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  template <class C>
  friend Poly<C> operator*(const Poly<C>& a, const Poly<C>& b);

  Poly scaled(const Coeff& c) const;
  Poly times(Monomial m) const;
  Poly pow(int k) const;

  /// Iterated formal partial derivative; multi_index[i] is the order in variable i.
  Poly derivative(const std::vector<int>& multi_index) const;

  /// Exact evaluation; all coordinates must share one conductor.
  CycloNumber evaluate(const std::vector<CycloNumber>& point) const;

  /// The same polynomial viewed in `ring` (identical variables, possibly another order).
  Poly in_ring(RingPtr ring) const;

  std::string str() const;

  friend bool operator==(const Poly& a, const Poly& b) {
    return same_ring(*a.ring_, *b.ring_) && a.terms_ == b.terms_;
  }

 private:
  void sort_and_merge();
  RingPtr ring_;
  std::vector<TermType> terms_;
};

template <class C>
Poly<C> operator*(const Poly<C>& a, const Poly<C>& b);

using QPoly = Poly<Rational>;
using CPoly = Poly<CycloNumber>;

/// Promotes a rational polynomial into the ring with coefficients in Q(zeta_conductor).
CPoly promote(const QPoly& p, int conductor);

/// Multiplies through by the lcm of denominators and divides by the content,
/// giving the primitive integer polynomial with positive leading coefficient.
QPoly primitive_part(const QPoly& p);
QPoly monic(const QPoly& p);

extern template class Poly<Rational>;
extern template class Poly<CycloNumber>;

}  // namespace fermat
