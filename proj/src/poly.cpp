#include "fermat/poly.hpp"

#include <algorithm>
#include <unordered_map>

#include "fermat/detail/term_text.hpp"
#include "fermat/errors.hpp"

namespace fermat {

namespace {

template <class Coeff>
Coeff make_coeff(const Ring& ring, const Rational& value);

template <>
Rational make_coeff<Rational>(const Ring& ring, const Rational& value) {
  if (!ring.is_rational()) throw RingMismatch("rational polynomial over a cyclotomic ring");
  return value;
}

template <>
CycloNumber make_coeff<CycloNumber>(const Ring& ring, const Rational& value) {
  return CycloNumber(ring.field, value);
}

bool coeff_is_zero(const Rational& c) { return c.is_zero(); }
bool coeff_is_zero(const CycloNumber& c) { return c.is_zero(); }

CycloNumber to_point_field(const Rational& c, const CycloFieldPtr& field) { return CycloNumber(field, c); }

CycloNumber to_point_field(const CycloNumber& c, const CycloFieldPtr& field) {
  if (c.conductor() != field->conductor()) {
    throw RingMismatch("coefficient field does not match the point's conductor");
  }
  return c;
}

void append_coeff_term(std::string& out, const Rational& c, const std::string& mono) {
  detail::append_term(out, c, mono);
}

void append_coeff_term(std::string& out, const CycloNumber& c, const std::string& mono) {
  if (c.is_rational()) {
    detail::append_term(out, c.coeffs()[0], mono);
    return;
  }
  if (!out.empty()) out += " + ";
  out += '(';
  out += c.str();
  out += ')';
  if (!mono.empty()) {
    out += '*';
    out += mono;
  }
}

}  // namespace

std::string Ring::describe() const {
  std::string out;
  for (std::size_t i = 0; i < vars.size(); ++i) {
    if (i) out += ',';
    out += vars[i];
  }
  out += ';' + order.name() + ';' + (is_rational() ? std::string("Q") : "Q(z_" + std::to_string(conductor()) + ")");
  return out;
}

RingPtr make_ring(std::vector<std::string> vars, MonomialOrder order, int conductor) {
  if (vars.empty() || vars.size() > static_cast<std::size_t>(Monomial::kMaxVars)) {
    throw Error("ring must have between 1 and 4 variables");
  }
  return std::make_shared<const Ring>(Ring{std::move(vars), order, CycloField::make(conductor)});
}

RingPtr xyz_ring() { return make_ring({"x", "y", "z"}); }

RingPtr with_order(const RingPtr& ring, const MonomialOrder& order) {
  if (ring->order == order) return ring;
  return std::make_shared<const Ring>(Ring{ring->vars, order, ring->field});
}

RingPtr with_conductor(const RingPtr& ring, int conductor) {
  if (ring->conductor() == conductor) return ring;
  return std::make_shared<const Ring>(Ring{ring->vars, ring->order, CycloField::make(conductor)});
}

bool same_ring(const Ring& a, const Ring& b) {
  if (&a == &b) return true;
  return a.vars == b.vars && a.order == b.order && a.conductor() == b.conductor();
}

void require_same_ring(const Ring& a, const Ring& b, const char* what) {
  if (!same_ring(a, b)) {
    throw RingMismatch(std::string(what) + ": ring mismatch (" + a.describe() + " vs " + b.describe() + ")");
  }
}

template <class Coeff>
Poly<Coeff>::Poly(RingPtr ring, std::vector<TermType> terms) : ring_(std::move(ring)), terms_(std::move(terms)) {
  sort_and_merge();
}

template <class Coeff>
void Poly<Coeff>::sort_and_merge() {
  const auto& order = ring_->order;
  std::sort(terms_.begin(), terms_.end(),
            [&](const TermType& a, const TermType& b) { return order.greater(a.mono, b.mono); });
  std::vector<TermType> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().mono == t.mono) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && coeff_is_zero(merged.back().coeff)) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && coeff_is_zero(merged.back().coeff)) merged.pop_back();
  terms_ = std::move(merged);
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::constant(RingPtr ring, const Rational& value) {
  Coeff c = make_coeff<Coeff>(*ring, value);
  return Poly(ring, {TermType{Monomial(), std::move(c)}});
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::variable(RingPtr ring, int index) {
  if (index < 0 || index >= ring->nvars()) throw Error("variable index out of range");
  Coeff one = make_coeff<Coeff>(*ring, Rational(1));
  return Poly(ring, {TermType{Monomial::variable(index), std::move(one)}});
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::term(RingPtr ring, Monomial mono, Coeff coeff) {
  return Poly(ring, {TermType{mono, std::move(coeff)}});
}

template <class Coeff>
int Poly<Coeff>::degree() const {
  int d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

template <class Coeff>
bool Poly<Coeff>::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.front().mono.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const TermType& t) { return t.mono.degree() == d; });
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::operator-() const {
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

template <class Coeff>
Poly<Coeff>& Poly<Coeff>::operator+=(const Poly& o) {
  require_same_ring(*ring_, *o.ring_, "poly_add");
  const auto& order = ring_->order;
  std::vector<TermType> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && order.greater(terms_[i].mono, o.terms_[j].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || order.greater(o.terms_[j].mono, terms_[i].mono)) {
      out.push_back(o.terms_[j++]);
    } else {
      Coeff c = std::move(terms_[i].coeff);
      c += o.terms_[j].coeff;
      if (!coeff_is_zero(c)) out.push_back(TermType{terms_[i].mono, std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

template <class Coeff>
Poly<Coeff>& Poly<Coeff>::operator-=(const Poly& o) {
  return *this += -o;
}

template <class C>
Poly<C> operator*(const Poly<C>& a, const Poly<C>& b) {
  require_same_ring(*a.ring(), *b.ring(), "poly_mul");
  if (a.is_zero() || b.is_zero()) return Poly<C>(a.ring());
  std::unordered_map<std::uint64_t, C> acc;
  acc.reserve(a.size() * b.size());
  for (const auto& s : a.terms()) {
    for (const auto& t : b.terms()) {
      Monomial m = s.mono * t.mono;
      C c = s.coeff * t.coeff;
      auto it = acc.find(m.bits());
      if (it == acc.end()) {
        acc.emplace(m.bits(), std::move(c));
      } else {
        it->second += c;
      }
    }
  }
  std::vector<Term<C>> terms;
  terms.reserve(acc.size());
  for (auto& [bits, c] : acc) {
    if (!coeff_is_zero(c)) terms.push_back(Term<C>{Monomial::from_bits(bits), std::move(c)});
  }
  return Poly<C>(a.ring(), std::move(terms));
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::scaled(const Coeff& c) const {
  if (coeff_is_zero(c)) return Poly(ring_);
  Poly r(*this);
  for (auto& t : r.terms_) t.coeff *= c;
  return r;
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::times(Monomial m) const {
  Poly r(*this);
  for (auto& t : r.terms_) t.mono = t.mono * m;
  return r;
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::pow(int k) const {
  if (k < 0) throw Error("poly_pow: negative exponent");
  Poly result = constant(ring_, Rational(1));
  Poly base(*this);
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::derivative(const std::vector<int>& multi_index) const {
  if (static_cast<int>(multi_index.size()) != ring_->nvars()) {
    throw Error("derivative: multi-index length must equal the number of variables");
  }
  std::vector<TermType> out;
  for (const auto& t : terms_) {
    Rational factor(1);
    std::vector<int> e(ring_->nvars());
    bool vanishes = false;
    for (int i = 0; i < ring_->nvars(); ++i) {
      int a = t.mono[i];
      int d = multi_index[i];
      if (d > a) {
        vanishes = true;
        break;
      }
      for (int s = 0; s < d; ++s) factor *= Rational(a - s);  // falling factorial
      e[i] = a - d;
    }
    if (vanishes) continue;
    Coeff c = t.coeff;
    c *= factor;
    out.push_back(TermType{Monomial(e), std::move(c)});
  }
  return Poly(ring_, std::move(out));
}

template <class Coeff>
CycloNumber Poly<Coeff>::evaluate(const std::vector<CycloNumber>& point) const {
  if (static_cast<int>(point.size()) != ring_->nvars()) {
    throw Error("evaluate: point length must equal the number of variables");
  }
  const CycloFieldPtr& field = point.front().field();
  for (const auto& c : point) {
    if (c.conductor() != field->conductor()) throw RingMismatch("evaluate: coordinates have different conductors");
  }
  // powers[i][e] = point[i]^e
  std::vector<std::vector<CycloNumber>> powers(point.size());
  for (std::size_t i = 0; i < point.size(); ++i) powers[i].emplace_back(field, Rational(1));
  CycloNumber total(field);
  for (const auto& t : terms_) {
    CycloNumber value = to_point_field(t.coeff, field);
    for (std::size_t i = 0; i < point.size(); ++i) {
      int e = t.mono[static_cast<int>(i)];
      while (static_cast<int>(powers[i].size()) <= e) powers[i].push_back(powers[i].back() * point[i]);
      if (e > 0) value *= powers[i][e];
    }
    total += value;
  }
  return total;
}

template <class Coeff>
Poly<Coeff> Poly<Coeff>::in_ring(RingPtr ring) const {
  if (ring->vars != ring_->vars || ring->conductor() != ring_->conductor()) {
    throw RingMismatch("in_ring: variables or field differ");
  }
  return Poly(std::move(ring), terms_);
}

template <class Coeff>
std::string Poly<Coeff>::str() const {
  std::string out;
  for (const auto& t : terms_) append_coeff_term(out, t.coeff, t.mono.str(ring_->vars));
  return out.empty() ? "0" : out;
}

template class Poly<Rational>;
template class Poly<CycloNumber>;
template Poly<Rational> operator*(const Poly<Rational>&, const Poly<Rational>&);
template Poly<CycloNumber> operator*(const Poly<CycloNumber>&, const Poly<CycloNumber>&);

CPoly promote(const QPoly& p, int conductor) {
  RingPtr ring = with_conductor(p.ring(), conductor);
  std::vector<CPoly::TermType> terms;
  terms.reserve(p.size());
  for (const auto& t : p.terms()) terms.push_back({t.mono, CycloNumber(ring->field, t.coeff)});
  return CPoly(ring, std::move(terms));
}

QPoly primitive_part(const QPoly& p) {
  if (p.is_zero()) return p;
  mpz_class den_lcm = 1;
  mpz_class num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.raw().get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.raw().get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  if (p.leading_coeff().sign() < 0) scale = -scale;
  return p.scaled(scale);
}

QPoly monic(const QPoly& p) {
  if (p.is_zero()) return p;
  return p.scaled(p.leading_coeff().inverse());
}

}  // namespace fermat
