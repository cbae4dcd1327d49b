#pragma once

#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "fermat/poly.hpp"

namespace fermat {

class GbCache;

/// Reduced Groebner basis: monic, pairwise non-divisible leading terms, fully
/// tail-reduced, sorted by increasing leading monomial. Unique for an ideal and order.
struct GroebnerBasis {
  RingPtr ring;
  std::vector<QPoly> polys;

  const MonomialOrder& order() const { return ring->order; }
  std::vector<Monomial> leading_monomials() const;
  /// Smallest and largest total degree among basis elements; -1 when empty.
  int min_degree() const;
  int max_degree() const;
  friend bool operator==(const GroebnerBasis& a, const GroebnerBasis& b) {
    return same_ring(*a.ring, *b.ring) && a.polys == b.polys;
  }
};

struct BuchbergerOptions {
  /// Variable weights for the sugar degree that drives pair selection.
  std::array<int, Monomial::kMaxVars> weights{1, 1, 1, 1};
};

/// Reduced Groebner basis of the ideal generated by `gens` under `order`, by
/// Buchberger's algorithm with the normal selection strategy and the
/// Gebauer-Moeller criteria.
GroebnerBasis buchberger(const std::vector<QPoly>& gens, const MonomialOrder& order,
                         const BuchbergerOptions& options = {});

/// Unique remainder of p modulo a reduced basis (same variables; p is re-sorted to
/// the basis order).
QPoly normal_form(const QPoly& p, const GroebnerBasis& basis);
bool reduces_to_zero(const QPoly& p, const GroebnerBasis& basis);

QPoly s_polynomial(const QPoly& f, const QPoly& g);

/// Homogeneous ideal with its generators and per-order Groebner bases, computed
/// on demand. Copies share the basis cache. Generators are nonzero and homogeneous.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<QPoly> gens, std::shared_ptr<const GbCache> cache = nullptr);

  const RingPtr& ring() const { return ring_; }
  const std::vector<QPoly>& generators() const { return gens_; }
  const std::shared_ptr<const GbCache>& disk_cache() const { return cache_; }

  /// Reduced basis under `order` (grevlex by default), memoised in memory and,
  /// when configured, on disk.
  const GroebnerBasis& groebner(const MonomialOrder& order = MonomialOrder::grevlex(),
                                const BuchbergerOptions& options = {}) const;
  bool has_groebner(const MonomialOrder& order) const;
  /// Installs a basis computed elsewhere (e.g. read off an elimination).
  void seed_groebner(GroebnerBasis basis) const;

  bool contains(const QPoly& p) const;
  bool is_monomial() const;
  /// Minimum generator degree; equals alpha since generators are homogeneous.
  int min_generator_degree() const;

 private:
  struct State {
    std::mutex mu;
    std::map<MonomialOrder, std::shared_ptr<const GroebnerBasis>> bases;
  };
  RingPtr ring_;
  std::vector<QPoly> gens_;
  std::shared_ptr<const GbCache> cache_;
  std::shared_ptr<State> state_;
};

/// (m)^k in the given ring: every monomial of degree k.
Ideal maximal_ideal_power(const RingPtr& ring, int k, std::shared_ptr<const GbCache> cache = nullptr);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);
/// All k-fold products of generators (multisets), duplicates removed; k >= 1.
Ideal ideal_power(const Ideal& a, int k);
/// Intersection; monomial pairs use the termwise lcm rule, everything else elimination.
Ideal ideal_intersect(const Ideal& a, const Ideal& b);
/// Intersection by eliminating w from w*a + (1-w)*b under a block order.
Ideal intersect_by_elimination(const Ideal& a, const Ideal& b);
/// Intersection of monomial ideals from pairwise lcms of generators.
Ideal intersect_monomial(const Ideal& a, const Ideal& b);
/// Chained intersection: monomial ideals first (termwise), then the others by
/// increasing basis size.
Ideal intersect_all(std::vector<Ideal> ideals);
bool ideal_equal(const Ideal& a, const Ideal& b);
/// Every generator of `a` lies in `b`.
bool ideal_contained(const Ideal& a, const Ideal& b);

/// dim_Q [I]_t from the leading-term ideal of the grevlex basis.
long hilbert_dim(const Ideal& ideal, int t);

/// Basis of the degree-t part of the ideal generated by homogeneous `gens`, as
/// reduced row echelon rows over the degree-t monomials.
std::vector<QPoly> graded_component_basis(const std::vector<QPoly>& gens, int t);

/// Krull dimension of k[x_0..x_{nvars-1}] modulo a monomial ideal.
int monomial_ideal_dimension(const std::vector<Monomial>& leading_terms, int nvars = 3);

}  // namespace fermat
