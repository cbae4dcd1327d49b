#include <algorithm>
#include <optional>

#include "fermat/budget.hpp"
#include "fermat/errors.hpp"
#include "fermat/groebner.hpp"

namespace fermat {

namespace {

// Integer-coefficient working representation: fraction-free reduction keeps
// every intermediate polynomial primitive instead of carrying rationals.
struct ZTerm {
  Monomial mono;
  mpz_class coeff;
};
using ZPoly = std::vector<ZTerm>;

ZPoly to_zpoly(const QPoly& p) {
  QPoly prim = primitive_part(p);
  ZPoly out;
  out.reserve(prim.size());
  for (const auto& t : prim.terms()) out.push_back({t.mono, t.coeff.numerator()});
  return out;
}

QPoly to_monic_qpoly(const ZPoly& f, const RingPtr& ring) {
  std::vector<QPoly::TermType> terms;
  terms.reserve(f.size());
  Rational inv = Rational(f.front().coeff, 1).inverse();
  for (const auto& t : f) terms.push_back({t.mono, Rational(t.coeff, 1) * inv});
  return QPoly(ring, std::move(terms));
}

// Divides by the content and makes the leading coefficient positive; returns the
// factor that was divided out (with sign).
mpz_class make_primitive(ZPoly& f) {
  if (f.empty()) return 1;
  mpz_class g = 0;
  for (const auto& t : f) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
    if (g == 1) break;
  }
  if (f.front().coeff < 0) g = -g;
  if (g != 1) {
    for (auto& t : f) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
  }
  return g;
}

int weighted_degree(Monomial m, const std::array<int, Monomial::kMaxVars>& w) {
  int d = 0;
  for (int i = 0; i < Monomial::kMaxVars; ++i) d += w[i] * m[i];
  return d;
}

class Reducer {
 public:
  explicit Reducer(const MonomialOrder& order) : order_(order) {}

  // Index into `basis` (restricted to `candidates`) of the shortest polynomial
  // whose leading monomial divides m, or -1.
  int find_divisor(Monomial m, const std::vector<ZPoly>& basis, const std::vector<int>& candidates,
                   int skip = -1) const {
    int best = -1;
    for (int i : candidates) {
      if (i == skip) continue;
      if (basis[i].front().mono.divides(m) && (best < 0 || basis[i].size() < basis[best].size())) best = i;
    }
    return best;
  }

  // f <- a*f - b*mu*g at position `at` (the term being cancelled). Terms before
  // `at` are scaled by a only.
  void step(ZPoly& f, std::size_t at, const ZPoly& g, mpz_class* scale) const {
    const ZTerm& t = f[at];
    mpz_class d;
    mpz_gcd(d.get_mpz_t(), g.front().coeff.get_mpz_t(), t.coeff.get_mpz_t());
    mpz_class a = g.front().coeff / d;
    mpz_class b = t.coeff / d;
    Monomial mu = t.mono / g.front().mono;
    bool scale_f = a != 1;
    if (scale) *scale *= a;

    ZPoly out;
    out.reserve(f.size() + g.size());
    for (std::size_t i = 0; i < at; ++i) {
      out.push_back(std::move(f[i]));
      if (scale_f) out.back().coeff *= a;
    }
    std::size_t i = at + 1;
    std::size_t j = 1;
    while (i < f.size() || j < g.size()) {
      if (j == g.size()) {
        out.push_back(std::move(f[i++]));
        if (scale_f) out.back().coeff *= a;
        continue;
      }
      Monomial gm = g[j].mono * mu;
      if (i == f.size()) {
        out.push_back({gm, -b * g[j].coeff});
        ++j;
        continue;
      }
      auto c = order_.compare(f[i].mono, gm);
      if (c == std::strong_ordering::greater) {
        out.push_back(std::move(f[i++]));
        if (scale_f) out.back().coeff *= a;
      } else if (c == std::strong_ordering::less) {
        out.push_back({gm, -b * g[j].coeff});
        ++j;
      } else {
        mpz_class v = scale_f ? mpz_class(f[i].coeff * a) : std::move(f[i].coeff);
        v -= b * g[j].coeff;
        if (v != 0) out.push_back({gm, std::move(v)});
        ++i;
        ++j;
      }
    }
    f = std::move(out);
  }

  // Reduces f by the basis elements listed in `candidates`. With `full` every
  // term is reduced; otherwise only until the leading term is irreducible. When
  // `scale` is given it accumulates c with c*f_in == f_out (mod the ideal), up to
  // the content divisions reported through `divided`.
  void reduce(ZPoly& f, const std::vector<ZPoly>& basis, const std::vector<int>& candidates, bool full,
              int skip = -1, mpz_class* scale = nullptr, mpz_class* divided = nullptr) const {
    std::size_t done = 0;
    int steps = 0;
    while (done < f.size()) {
      int g = find_divisor(f[done].mono, basis, candidates, skip);
      if (g < 0) {
        if (!full) break;
        ++done;
        continue;
      }
      step(f, done, basis[g], scale);
      if (++steps % 32 == 0) {
        budget::check();
        mpz_class c = make_primitive(f);
        if (divided) *divided *= c;
      }
    }
    mpz_class c = make_primitive(f);
    if (divided) *divided *= c;
  }

 private:
  const MonomialOrder& order_;
};

struct Pair {
  int i;  // -1 marks an input generator waiting to be inserted (index in j)
  int j;
  Monomial lcm;
  int sugar;
};

class BuchbergerRun {
 public:
  BuchbergerRun(RingPtr ring, const BuchbergerOptions& options)
      : ring_(std::move(ring)), order_(ring_->order), weights_(options.weights), reducer_(order_) {}

  GroebnerBasis run(const std::vector<QPoly>& gens) {
    for (const auto& g : gens) {
      if (g.is_zero()) continue;
      ZPoly z = to_zpoly(g.in_ring(ring_));
      int sugar = 0;
      for (const auto& t : z) sugar = std::max(sugar, weighted_degree(t.mono, weights_));
      inputs_.push_back(std::move(z));
      pairs_.push_back({-1, static_cast<int>(inputs_.size()) - 1, inputs_.back().front().mono, sugar});
    }
    while (!pairs_.empty()) {
      budget::check();
      Pair p = pop_best();
      ZPoly h;
      int sugar = p.sugar;
      if (p.i < 0) {
        h = std::move(inputs_[p.j]);
      } else {
        h = spoly(polys_[p.i], polys_[p.j], p.lcm);
      }
      if (h.empty()) continue;
      reducer_.reduce(h, polys_, active_, true);
      if (h.empty()) continue;
      insert(std::move(h), sugar);
    }
    return finish();
  }

 private:
  Pair pop_best() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      const Pair& a = pairs_[k];
      const Pair& b = pairs_[best];
      if (a.sugar < b.sugar || (a.sugar == b.sugar && order_.greater(b.lcm, a.lcm))) best = k;
    }
    Pair p = pairs_[best];
    pairs_[best] = pairs_.back();
    pairs_.pop_back();
    return p;
  }

  ZPoly spoly(const ZPoly& f, const ZPoly& g, Monomial lcm) const {
    ZPoly a = f;
    Monomial mf = lcm / f.front().mono;
    for (auto& t : a) t.mono = t.mono * mf;
    Monomial mg = lcm / g.front().mono;
    ZPoly b = g;
    for (auto& t : b) t.mono = t.mono * mg;
    reducer_.step(a, 0, b, nullptr);
    make_primitive(a);
    return a;
  }

  Monomial lt(int k) const { return polys_[k].front().mono; }

  // Gebauer-Moeller update with the new element h.
  void insert(ZPoly h, int sugar) {
    int hi = static_cast<int>(polys_.size());
    polys_.push_back(std::move(h));
    sugars_.push_back(sugar);
    Monomial lh = lt(hi);

    std::vector<Pair> candidates;
    for (int g : active_) {
      Monomial l = lh.lcm(lt(g));
      int s = std::max(sugar + weighted_degree(l / lh, weights_), sugars_[g] + weighted_degree(l / lt(g), weights_));
      candidates.push_back({g, hi, l, s});
    }
    std::vector<Pair> kept;
    for (std::size_t k = 0; k < candidates.size(); ++k) {
      const Pair& p = candidates[k];
      bool coprime = lt(p.i).coprime(lh);
      bool dominated = false;
      if (!coprime) {
        for (std::size_t q = k + 1; q < candidates.size() && !dominated; ++q) {
          dominated = candidates[q].lcm.divides(p.lcm);
        }
        for (std::size_t q = 0; q < kept.size() && !dominated; ++q) dominated = kept[q].lcm.divides(p.lcm);
      }
      if (coprime || !dominated) kept.push_back(p);
    }
    std::vector<Pair> updated;
    for (const Pair& p : pairs_) {
      if (p.i >= 0 && lh.divides(p.lcm) && lt(p.i).lcm(lh) != p.lcm && lt(p.j).lcm(lh) != p.lcm) continue;
      updated.push_back(p);
    }
    for (const Pair& p : kept) {
      if (!lt(p.i).coprime(lh)) updated.push_back(p);
    }
    pairs_ = std::move(updated);

    std::vector<int> still_active;
    for (int g : active_) {
      if (!lh.divides(lt(g))) still_active.push_back(g);
    }
    still_active.push_back(hi);
    active_ = std::move(still_active);
  }

  GroebnerBasis finish() {
    for (int g : active_) {
      budget::check();
      reducer_.reduce(polys_[g], polys_, active_, true, g);
    }
    std::vector<int> order = active_;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return order_.greater(lt(b), lt(a)); });
    GroebnerBasis gb{ring_, {}};
    for (int g : order) gb.polys.push_back(to_monic_qpoly(polys_[g], ring_));
    return gb;
  }

  RingPtr ring_;
  const MonomialOrder& order_;
  std::array<int, Monomial::kMaxVars> weights_;
  Reducer reducer_;
  std::vector<ZPoly> inputs_;
  std::vector<ZPoly> polys_;
  std::vector<int> sugars_;
  std::vector<int> active_;
  std::vector<Pair> pairs_;
};

std::vector<ZPoly> basis_as_zpolys(const GroebnerBasis& basis) {
  std::vector<ZPoly> out;
  out.reserve(basis.polys.size());
  for (const auto& g : basis.polys) out.push_back(to_zpoly(g));
  return out;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  out.reserve(polys.size());
  for (const auto& g : polys) out.push_back(g.leading_monomial());
  return out;
}

int GroebnerBasis::min_degree() const {
  int d = -1;
  for (const auto& g : polys) d = d < 0 ? g.degree() : std::min(d, g.degree());
  return d;
}

int GroebnerBasis::max_degree() const {
  int d = -1;
  for (const auto& g : polys) d = std::max(d, g.degree());
  return d;
}

GroebnerBasis buchberger(const std::vector<QPoly>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& options) {
  if (gens.empty()) throw Error("buchberger: no generators");
  RingPtr ring = with_order(gens.front().ring(), order);
  if (!ring->is_rational()) throw RingMismatch("buchberger: only rational coefficient rings are supported");
  for (const auto& g : gens) {
    if (g.ring()->vars != ring->vars || !g.ring()->is_rational()) throw RingMismatch("buchberger: mixed rings");
  }
  return BuchbergerRun(ring, options).run(gens);
}

QPoly normal_form(const QPoly& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return p.in_ring(basis.ring);
  QPoly q = p.in_ring(basis.ring);
  QPoly prim = primitive_part(q);
  // q = prim * content, tracked so the remainder is returned exactly.
  Rational content = q.leading_coeff() / prim.leading_coeff();
  ZPoly f;
  for (const auto& t : prim.terms()) f.push_back({t.mono, t.coeff.numerator()});
  std::vector<ZPoly> zb = basis_as_zpolys(basis);
  std::vector<int> all(zb.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  mpz_class scale = 1;
  mpz_class divided = 1;
  Reducer(basis.order()).reduce(f, zb, all, true, -1, &scale, &divided);
  // f == prim * scale / divided (mod I)
  Rational factor = content * Rational(divided, scale);
  std::vector<QPoly::TermType> terms;
  for (const auto& t : f) terms.push_back({t.mono, Rational(t.coeff, 1) * factor});
  return QPoly(basis.ring, std::move(terms));
}

bool reduces_to_zero(const QPoly& p, const GroebnerBasis& basis) {
  if (p.is_zero()) return true;
  ZPoly f = to_zpoly(p.in_ring(basis.ring));
  std::vector<ZPoly> zb = basis_as_zpolys(basis);
  std::vector<int> all(zb.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  Reducer(basis.order()).reduce(f, zb, all, true);
  return f.empty();
}

QPoly s_polynomial(const QPoly& f, const QPoly& g) {
  require_same_ring(*f.ring(), *g.ring(), "s_polynomial");
  Monomial l = f.leading_monomial().lcm(g.leading_monomial());
  QPoly a = f.times(l / f.leading_monomial()).scaled(f.leading_coeff().inverse());
  QPoly b = g.times(l / g.leading_monomial()).scaled(g.leading_coeff().inverse());
  return a - b;
}

}  // namespace fermat
