#include <algorithm>
#include <functional>
#include <unordered_map>

#include "fermat/budget.hpp"
#include "fermat/errors.hpp"
#include "fermat/gb_cache.hpp"
#include "fermat/groebner.hpp"
#include "fermat/linalg.hpp"

namespace fermat {

namespace {

// Drops duplicates up to a nonzero scalar, keeping the first occurrence.
std::vector<QPoly> dedupe(std::vector<QPoly> polys) {
  std::vector<QPoly> out;
  std::vector<std::string> seen;
  for (auto& p : polys) {
    std::string key = monic(p).str();
    if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
    seen.push_back(std::move(key));
    out.push_back(std::move(p));
  }
  return out;
}

GroebnerBasis sorted_basis(RingPtr ring, std::vector<QPoly> polys) {
  for (auto& p : polys) p = monic(p.in_ring(ring));
  std::sort(polys.begin(), polys.end(), [&](const QPoly& a, const QPoly& b) {
    return ring->order.greater(b.leading_monomial(), a.leading_monomial());
  });
  return GroebnerBasis{std::move(ring), std::move(polys)};
}

std::shared_ptr<const GbCache> pick_cache(const Ideal& a, const Ideal& b) {
  return a.disk_cache() ? a.disk_cache() : b.disk_cache();
}

}  // namespace

Ideal::Ideal(RingPtr ring, std::vector<QPoly> gens, std::shared_ptr<const GbCache> cache)
    : ring_(std::move(ring)), cache_(std::move(cache)), state_(std::make_shared<State>()) {
  if (!ring_->is_rational()) throw RingMismatch("ideals are defined over Q");
  if (gens.empty()) throw Error("ideal: at least one generator is required");
  gens_.reserve(gens.size());
  for (auto& g : gens) {
    if (g.is_zero()) throw Error("ideal: zero generator");
    if (!g.is_homogeneous()) throw Error("ideal: generator is not homogeneous: " + g.str());
    gens_.push_back(g.in_ring(ring_));
  }
}

const GroebnerBasis& Ideal::groebner(const MonomialOrder& order, const BuchbergerOptions& options) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  auto it = state_->bases.find(order);
  if (it != state_->bases.end()) return *it->second;
  RingPtr ring = with_order(ring_, order);
  std::optional<GroebnerBasis> gb;
  if (cache_) gb = cache_->load(gens_, ring);
  if (!gb) {
    gb = buchberger(gens_, order, options);
    if (cache_) cache_->store(gens_, *gb);
  }
  auto stored = std::make_shared<const GroebnerBasis>(std::move(*gb));
  state_->bases.emplace(order, stored);
  return *stored;
}

bool Ideal::has_groebner(const MonomialOrder& order) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  return state_->bases.count(order) != 0;
}

void Ideal::seed_groebner(GroebnerBasis basis) const {
  std::lock_guard<std::mutex> lock(state_->mu);
  MonomialOrder order = basis.order();
  state_->bases[order] = std::make_shared<const GroebnerBasis>(std::move(basis));
}

bool Ideal::contains(const QPoly& p) const { return reduces_to_zero(p, groebner()); }

bool Ideal::is_monomial() const {
  return std::all_of(gens_.begin(), gens_.end(), [](const QPoly& g) { return g.size() == 1; });
}

int Ideal::min_generator_degree() const {
  int d = -1;
  for (const auto& g : gens_) d = d < 0 ? g.degree() : std::min(d, g.degree());
  return d;
}

Ideal maximal_ideal_power(const RingPtr& ring, int k, std::shared_ptr<const GbCache> cache) {
  if (k < 0) throw Error("maximal_ideal_power: negative exponent");
  std::vector<QPoly> gens;
  for (Monomial m : monomials_of_degree(ring->nvars(), k)) gens.push_back(QPoly::term(ring, m, Rational(1)));
  Ideal out(ring, gens, std::move(cache));
  out.seed_groebner(sorted_basis(with_order(ring, MonomialOrder::grevlex()), gens));
  return out;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_sum");
  std::vector<QPoly> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return Ideal(a.ring(), dedupe(std::move(gens)), pick_cache(a, b));
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_product");
  std::vector<QPoly> gens;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) gens.push_back(f * g);
  }
  return Ideal(a.ring(), dedupe(std::move(gens)), pick_cache(a, b));
}

Ideal ideal_power(const Ideal& a, int k) {
  if (k < 1) throw Error("ideal_power: exponent must be >= 1");
  const auto& g = a.generators();
  std::vector<QPoly> gens;
  // Multisets of size k as non-decreasing index sequences.
  std::function<void(std::size_t, int, const QPoly&)> rec = [&](std::size_t start, int left, const QPoly& acc) {
    if (left == 0) {
      gens.push_back(acc);
      return;
    }
    for (std::size_t i = start; i < g.size(); ++i) rec(i, left - 1, acc * g[i]);
  };
  rec(0, k, QPoly::constant(a.ring(), Rational(1)));
  return Ideal(a.ring(), dedupe(std::move(gens)), a.disk_cache());
}

Ideal intersect_monomial(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_intersect");
  if (!a.is_monomial() || !b.is_monomial()) throw Error("intersect_monomial: both ideals must be monomial");
  std::vector<Monomial> lcms;
  for (const auto& f : a.generators()) {
    for (const auto& g : b.generators()) lcms.push_back(f.leading_monomial().lcm(g.leading_monomial()));
  }
  const auto& order = a.ring()->order;
  std::sort(lcms.begin(), lcms.end(), [&](Monomial x, Monomial y) { return order.greater(y, x); });
  lcms.erase(std::unique(lcms.begin(), lcms.end()), lcms.end());
  std::vector<QPoly> gens;
  for (std::size_t i = 0; i < lcms.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < lcms.size() && !redundant; ++j) {
      redundant = j != i && lcms[j].divides(lcms[i]);
    }
    if (!redundant) gens.push_back(QPoly::term(a.ring(), lcms[i], Rational(1)));
  }
  Ideal out(a.ring(), gens, pick_cache(a, b));
  out.seed_groebner(sorted_basis(with_order(a.ring(), MonomialOrder::grevlex()), gens));
  return out;
}

Ideal intersect_by_elimination(const Ideal& a, const Ideal& b) {
  require_same_ring(*a.ring(), *b.ring(), "ideal_intersect");
  const RingPtr& ring = a.ring();
  if (ring->nvars() >= Monomial::kMaxVars) throw Error("ideal_intersect: no room for the auxiliary variable");
  std::vector<std::string> vars{"w_"};
  vars.insert(vars.end(), ring->vars.begin(), ring->vars.end());
  RingPtr elim = make_ring(vars, MonomialOrder::block_elimination(1));
  Monomial w = Monomial::variable(0);

  auto embed = [&](const QPoly& p) {
    std::vector<QPoly::TermType> terms;
    for (const auto& t : p.terms()) terms.push_back({t.mono.shifted(1), t.coeff});
    return QPoly(elim, std::move(terms));
  };
  std::vector<QPoly> gens;
  for (const auto& f : a.generators()) gens.push_back(embed(f).times(w));
  for (const auto& g : b.generators()) {
    QPoly e = embed(g);
    gens.push_back(e - e.times(w));
  }
  BuchbergerOptions options;
  options.weights = {0, 1, 1, 1};
  // The elimination basis goes through an Ideal-less path so only the final
  // result is memoised, but the disk cache still applies.
  std::shared_ptr<const GbCache> cache = pick_cache(a, b);
  std::optional<GroebnerBasis> gb;
  if (cache) gb = cache->load(gens, elim);
  if (!gb) {
    gb = buchberger(gens, elim->order, options);
    if (cache) cache->store(gens, *gb);
  }

  RingPtr grevlex_ring = with_order(ring, MonomialOrder::grevlex());
  std::vector<QPoly> result;
  for (const auto& g : gb->polys) {
    bool free_of_w = std::all_of(g.terms().begin(), g.terms().end(),
                                 [](const QPoly::TermType& t) { return t.mono[0] == 0; });
    if (!free_of_w) continue;
    std::vector<QPoly::TermType> terms;
    for (const auto& t : g.terms()) terms.push_back({t.mono.shifted(-1), t.coeff});
    result.push_back(QPoly(ring, std::move(terms)));
  }
  if (result.empty()) throw Error("ideal_intersect: empty intersection of nonzero ideals");
  Ideal out(ring, result, cache);
  // w-free elements of a reduced block-order basis form the reduced basis of the
  // intersection under the restricted (grevlex) order.
  out.seed_groebner(sorted_basis(grevlex_ring, result));
  return out;
}

Ideal ideal_intersect(const Ideal& a, const Ideal& b) {
  if (a.is_monomial() && b.is_monomial()) return intersect_monomial(a, b);
  return intersect_by_elimination(a, b);
}

Ideal intersect_all(std::vector<Ideal> ideals) {
  if (ideals.empty()) throw Error("intersect_all: no ideals");
  std::vector<Ideal> monomial;
  std::vector<Ideal> general;
  for (auto& i : ideals) (i.is_monomial() ? monomial : general).push_back(std::move(i));
  if (!monomial.empty()) {
    Ideal acc = monomial.front();
    for (std::size_t k = 1; k < monomial.size(); ++k) acc = intersect_monomial(acc, monomial[k]);
    general.push_back(std::move(acc));
  }
  std::stable_sort(general.begin(), general.end(), [](const Ideal& x, const Ideal& y) {
    return x.groebner().polys.size() < y.groebner().polys.size();
  });
  Ideal acc = general.front();
  for (std::size_t k = 1; k < general.size(); ++k) acc = ideal_intersect(acc, general[k]);
  return acc;
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (a.ring()->vars != b.ring()->vars) throw RingMismatch("ideal_equal: different variables");
  const auto& ga = a.groebner();
  const auto& gb = b.groebner();
  if (ga.polys.size() != gb.polys.size()) return false;
  for (std::size_t i = 0; i < ga.polys.size(); ++i) {
    if (ga.polys[i].terms() != gb.polys[i].terms()) return false;
  }
  return true;
}

bool ideal_contained(const Ideal& a, const Ideal& b) {
  const auto& gb = b.groebner();
  return std::all_of(a.generators().begin(), a.generators().end(),
                     [&](const QPoly& g) { return reduces_to_zero(g, gb); });
}

long hilbert_dim(const Ideal& ideal, int t) {
  if (t < 0) return 0;
  auto lts = ideal.groebner().leading_monomials();
  long count = 0;
  for (Monomial m : monomials_of_degree(ideal.ring()->nvars(), t)) {
    bool in_lt = std::any_of(lts.begin(), lts.end(), [m](Monomial l) { return l.divides(m); });
    if (in_lt) ++count;
  }
  return count;
}

std::vector<QPoly> graded_component_basis(const std::vector<QPoly>& gens, int t) {
  if (gens.empty() || t < 0) return {};
  const RingPtr& ring = gens.front().ring();
  for (const auto& g : gens) {
    if (!g.is_homogeneous()) throw Error("graded_component_basis: generator is not homogeneous");
  }
  std::vector<Monomial> cols = monomials_of_degree(ring->nvars(), t);
  std::unordered_map<Monomial, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);

  std::vector<Row<Rational>> rows;
  for (const auto& g : gens) {
    if (g.is_zero() || g.degree() > t) continue;
    for (Monomial mu : monomials_of_degree(ring->nvars(), t - g.degree())) {
      Row<Rational> row(cols.size(), Rational(0));
      for (const auto& term : g.terms()) row[index.at(term.mono * mu)] = term.coeff;
      rows.push_back(std::move(row));
    }
  }
  EchelonInfo info = row_echelon(rows, true);
  std::vector<QPoly> out;
  for (std::size_t r = 0; r < info.rank; ++r) {
    std::vector<QPoly::TermType> terms;
    for (std::size_t c = 0; c < cols.size(); ++c) {
      if (!rows[r][c].is_zero()) terms.push_back({cols[c], rows[r][c]});
    }
    out.emplace_back(ring, std::move(terms));
  }
  return out;
}

int monomial_ideal_dimension(const std::vector<Monomial>& leading_terms, int nvars) {
  int best = -1;
  for (unsigned subset = 0; subset < (1u << nvars); ++subset) {
    bool independent = true;
    for (Monomial m : leading_terms) {
      bool inside = true;  // support of m within the subset
      for (int i = 0; i < nvars && inside; ++i) {
        if (m[i] > 0 && !(subset & (1u << i))) inside = false;
      }
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) best = std::max(best, __builtin_popcount(subset));
  }
  return best;
}

}  // namespace fermat
