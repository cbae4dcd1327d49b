// Randomised invariants. Every case draws from its own generator seeded from
// FERMAT_SEED (default below) and the case name, so failures replay exactly.

#include <algorithm>
#include <cstdlib>
#include <random>
#include <string_view>

#include "doctest.h"
#include "fermat/interpolation.hpp"
#include "fermat/invariants.hpp"
#include "fermat/poly_text.hpp"
#include "support.hpp"

using namespace fermat;

namespace {

constexpr std::uint64_t kDefaultSeed = 20240917;

std::uint64_t base_seed() {
  const char* env = std::getenv("FERMAT_SEED");
  return env && *env ? std::strtoull(env, nullptr, 10) : kDefaultSeed;
}

struct Gen {
  std::mt19937_64 rng;

  explicit Gen(std::string_view salt) : rng(base_seed() ^ std::hash<std::string_view>{}(salt)) {
    INFO("FERMAT_SEED=" << base_seed());
  }

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

  Rational rational(int bound = 9) {
    int num = uniform(-bound, bound);
    int den = uniform(1, bound);
    return Rational(num, den);
  }

  Rational nonzero_rational(int bound = 9) {
    Rational r;
    do r = rational(bound);
    while (r.is_zero());
    return r;
  }

  CycloNumber cyclo(const CycloFieldPtr& field, int bound = 5) {
    std::vector<Rational> c;
    for (int i = 0; i < field->degree(); ++i) c.push_back(rational(bound));
    return CycloNumber(field, c);
  }

  CycloNumber nonzero_cyclo(const CycloFieldPtr& field) {
    CycloNumber c(field);
    do c = cyclo(field);
    while (c.is_zero());
    return c;
  }

  /// Homogeneous of degree d with up to `terms` terms and small integer coefficients.
  QPoly homogeneous(int d, int terms = 4) {
    auto monos = monomials_of_degree(3, d);
    std::vector<QPoly::TermType> out;
    for (int i = 0; i < terms; ++i) {
      Monomial m = monos[static_cast<std::size_t>(uniform(0, static_cast<int>(monos.size()) - 1))];
      out.push_back({m, Rational(uniform(-4, 4))});
    }
    QPoly p(xyz_ring(), out);
    if (p.is_zero()) p = QPoly::term(xyz_ring(), monos.front(), Rational(1));
    return p;
  }

  QPoly any_poly(int max_degree = 4, int terms = 5) {
    QPoly p(xyz_ring());
    for (int i = 0; i < terms; ++i) p += homogeneous(uniform(0, max_degree), 1).scaled(rational());
    return p;
  }

  Monomial monomial(int max_degree) {
    return Monomial{uniform(0, max_degree), uniform(0, max_degree), uniform(0, max_degree)};
  }
};

// x -> y -> z -> x
QPoly rotate(const QPoly& p) {
  std::vector<QPoly::TermType> out;
  for (const auto& t : p.terms()) out.push_back({Monomial{t.mono[2], t.mono[0], t.mono[1]}, t.coeff});
  return QPoly(p.ring(), out);
}

// A random homogeneous element of degree max(deg) + extra of the ideal they generate.
QPoly combination(Gen& gen, const std::vector<QPoly>& gens, int extra) {
  int d = 0;
  for (const auto& g : gens) d = std::max(d, g.degree());
  d += extra;
  QPoly out(xyz_ring());
  for (const auto& g : gens) out += g * gen.homogeneous(d - g.degree(), 3);
  return out;
}

Ideal random_ideal(Gen& gen) {
  int k = gen.uniform(2, 4);
  std::vector<QPoly> gens;
  for (int i = 0; i < k; ++i) gens.push_back(gen.homogeneous(gen.uniform(1, 4), gen.uniform(1, 5)));
  return Ideal(xyz_ring(), gens);
}

}  // namespace

TEST_SUITE("groebner") {
  TEST_CASE("determinism under shuffling and scaling") {
    Gen gen("determinism");
    for (int trial = 0; trial < 100; ++trial) {
      Ideal ideal = random_ideal(gen);
      auto gens = ideal.generators();
      auto reference = buchberger(gens, MonomialOrder::grevlex());
      std::shuffle(gens.begin(), gens.end(), gen.rng);
      for (auto& g : gens) g = g.scaled(gen.nonzero_rational());
      // A redundant combination must not change the basis either.
      QPoly extra = combination(gen, gens, 1);
      if (!extra.is_zero()) gens.push_back(extra);
      CHECK(buchberger(gens, MonomialOrder::grevlex()) == reference);
    }
  }

  TEST_CASE("S-polynomials of a basis reduce to zero") {
    Gen gen("spoly");
    for (int trial = 0; trial < 100; ++trial) {
      auto order = trial % 3 == 0 ? MonomialOrder::lex() : MonomialOrder::grevlex();
      Ideal ideal = random_ideal(gen);
      const auto& gb = ideal.groebner(order);
      for (std::size_t i = 0; i < gb.polys.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.polys.size(); ++j) {
          CHECK(reduces_to_zero(s_polynomial(gb.polys[i], gb.polys[j]), gb));
        }
      }
      for (const auto& g : ideal.generators()) CHECK(reduces_to_zero(g.in_ring(gb.ring), gb));
    }
  }

  TEST_CASE("membership is closed under multiplication") {
    Gen gen("membership");
    for (int trial = 0; trial < 30; ++trial) {
      Ideal ideal = random_ideal(gen);
      QPoly p = combination(gen, ideal.generators(), gen.uniform(0, 2));
      if (p.is_zero()) continue;
      REQUIRE(ideal.contains(p));
      CHECK(ideal.contains(p * gen.homogeneous(gen.uniform(0, 3))));
    }
  }

  TEST_CASE("termwise and elimination intersections agree on monomial ideals") {
    Gen gen("intersect");
    for (int trial = 0; trial < 25; ++trial) {
      auto random_monomial_ideal = [&] {
        std::vector<QPoly> gens;
        int k = gen.uniform(1, 3);
        for (int i = 0; i < k; ++i) {
          Monomial m = gen.monomial(3);
          if (m.is_one()) m = Monomial{1, 0, 0};
          gens.push_back(QPoly::term(xyz_ring(), m, Rational(1)));
        }
        return Ideal(xyz_ring(), gens);
      };
      Ideal a = random_monomial_ideal(), b = random_monomial_ideal();
      CHECK(ideal_equal(intersect_by_elimination(a, b), intersect_monomial(a, b)));
    }
  }

  TEST_CASE("min basis degree is the first nonzero hilbert_dim") {
    Gen gen("alpha-hilbert");
    for (int trial = 0; trial < 25; ++trial) {
      Ideal ideal = random_ideal(gen);
      int a = ideal.groebner().min_degree();
      CHECK(hilbert_dim(ideal, a) > 0);
      for (int t = 0; t < a; ++t) CHECK(hilbert_dim(ideal, t) == 0);
    }
  }

  TEST_CASE("graded component grows with the generator set") {
    Gen gen("graded-monotone");
    for (int trial = 0; trial < 20; ++trial) {
      auto gens = random_ideal(gen).generators();
      int t = gen.uniform(2, 5);
      auto small = graded_component_basis(gens, t).size();
      gens.push_back(gen.homogeneous(gen.uniform(1, 3)));
      CHECK(graded_component_basis(gens, t).size() >= small);
    }
  }
}

TEST_SUITE("polynomials") {
  TEST_CASE("Euler relation") {
    Gen gen("euler");
    for (int trial = 0; trial < 100; ++trial) {
      int d = gen.uniform(0, 8);
      QPoly p = gen.homogeneous(d, gen.uniform(1, 6));
      QPoly sum(xyz_ring());
      for (int i = 0; i < 3; ++i) {
        std::vector<int> idx(3, 0);
        idx[static_cast<std::size_t>(i)] = 1;
        sum += QPoly::variable(xyz_ring(), i) * p.derivative(idx);
      }
      CHECK(sum == p.scaled(Rational(d)));
    }
  }

  TEST_CASE("ring axioms") {
    Gen gen("ring-axioms");
    for (int trial = 0; trial < 60; ++trial) {
      QPoly a = gen.any_poly(), b = gen.any_poly(), c = gen.any_poly();
      CHECK(a * b == b * a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - a).is_zero());
      CHECK(a.pow(2) == a * a);
    }
  }

  TEST_CASE("evaluation is a ring homomorphism") {
    Gen gen("evaluation");
    for (int trial = 0; trial < 60; ++trial) {
      int n = gen.uniform(1, 9);
      auto field = CycloField::make(n);
      std::vector<CycloNumber> pt{gen.cyclo(field), gen.cyclo(field), gen.cyclo(field)};
      QPoly p = gen.any_poly(3, 4), q = gen.any_poly(3, 4);
      CHECK((p * q).evaluate(pt) == p.evaluate(pt) * q.evaluate(pt));
      CHECK((p + q).evaluate(pt) == p.evaluate(pt) + q.evaluate(pt));
      CHECK(promote(p, n).evaluate(pt) == p.evaluate(pt));
    }
  }

  TEST_CASE("text round trip") {
    Gen gen("text");
    for (int trial = 0; trial < 100; ++trial) {
      QPoly p = gen.any_poly(6, 6);
      CHECK(parse_qpoly(p.str(), xyz_ring()) == p);
      int n = gen.uniform(1, 12);
      auto field = CycloField::make(n);
      CycloNumber c = gen.cyclo(field);
      CHECK(parse_cyclo(c.str(), field) == c);
      auto ring = with_conductor(xyz_ring(), n);
      CPoly cp = promote(p, n).scaled(c.is_zero() ? CycloNumber(field, 1) : c);
      CHECK(parse_cpoly(cp.str(), ring) == cp);
    }
  }
}

TEST_SUITE("exact arithmetic") {
  TEST_CASE("cyclotomic field axioms") {
    Gen gen("field-axioms");
    for (int trial = 0; trial < 150; ++trial) {
      auto field = CycloField::make(gen.uniform(1, 15));
      CycloNumber a = gen.cyclo(field), b = gen.cyclo(field), c = gen.cyclo(field);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a * b == b * a);
      CHECK(static_cast<int>(a.coeffs().size()) == euler_phi(field->conductor()));
      if (!a.is_zero()) CHECK((a * a.inverse()).is_one());
    }
  }

  TEST_CASE("rational canonical form is unique") {
    Gen gen("rational");
    for (int trial = 0; trial < 200; ++trial) {
      int num = gen.uniform(-50, 50), den = gen.uniform(1, 50), k = gen.uniform(1, 20);
      Rational a(num, den);
      Rational b(-num * k, -den * k);
      CHECK(a == b);
      CHECK(a.str() == b.str());
      CHECK(gcd(a.numerator(), a.denominator()) == 1);
      CHECK(a.denominator() > 0);
    }
  }
}

TEST_SUITE("fermat") {
  TEST_CASE("symbolic powers are nested") {
    for (int n = 2; n <= 4; ++n) {
      FermatWorkspace ws(n);
      for (int m = 1; m <= 4; ++m) CHECK(ideal_contained(ws.symbolic_power(m + 1), ws.symbolic_power(m)));
    }
  }

  TEST_CASE("cyclic symmetry") {
    for (int n = 2; n <= 4; ++n) {
      FermatWorkspace ws(n);
      for (int m = 1; m <= 4; ++m) {
        Ideal sym = ws.symbolic_power(m);
        std::vector<QPoly> rotated;
        for (const auto& g : sym.generators()) rotated.push_back(rotate(g));
        Ideal image(xyz_ring(), rotated);
        CHECK(ideal_equal(image, sym));
        CHECK(alpha(image) == alpha(sym));
        for (int t = alpha(sym); t <= alpha(sym) + 3; ++t) CHECK(hilbert_dim(image, t) == hilbert_dim(sym, t));
      }
    }
  }

  TEST_CASE("alpha is subadditive") {
    for (int n = 2; n <= 3; ++n) {
      FermatWorkspace ws(n);
      for (int a = 1; a <= 3; ++a) {
        for (int b = a; a + b <= 6; ++b) {
          CHECK(alpha(ws.symbolic_power(a + b)) <= alpha(ws.symbolic_power(a)) + alpha(ws.symbolic_power(b)));
        }
      }
    }
  }

  TEST_CASE("containment is monotone in m") {
    Gen gen("containment-monotone");
    FermatWorkspace w2(2), w3(3);
    for (int trial = 0; trial < 20; ++trial) {
      FermatWorkspace& ws = trial % 2 ? w3 : w2;
      int m = gen.uniform(1, 5), r = gen.uniform(1, 3), a = gen.uniform(0, 3);
      if (containment_check(ws, m, r, a).holds) CHECK(containment_check(ws, m + 1, r, a).holds);
    }
  }

  TEST_CASE("degree criterion agrees with direct reduction") {
    for (int n = 2; n <= 3; ++n) {
      FermatWorkspace ws(n);
      for (int m = 1; m <= 5; ++m) {
        for (int r = 1; r <= 3; ++r) {
          for (int a = 1; a <= 3; ++a) {
            auto fast = containment_check(ws, m, r, a);
            if (!fast.degree_criterion_used) continue;
            CHECK(containment_check(ws, m, r, a, {.use_degree_criterion = false}).holds == fast.holds);
          }
        }
      }
    }
  }

  TEST_CASE("beta sits between alpha and omega") {
    for (int n = 2; n <= 3; ++n) {
      FermatWorkspace ws(n);
      for (int m = 1; m <= 4; ++m) {
        Ideal sym = ws.symbolic_power(m);
        int b = beta(sym);
        CHECK(alpha(sym) <= b);
        CHECK(b <= omega(sym));
      }
    }
  }
}

TEST_SUITE("interpolation") {
  TEST_CASE("exact-order rows suffice") {
    Gen gen("derivative-order");
    for (int trial = 0; trial < 12; ++trial) {
      int n = gen.uniform(2, 3), m = gen.uniform(1, 3);
      int t = gen.uniform(m - 1, m * (n + 1) + 1);
      FatPointScheme scheme{fermat_points(n), m};
      CHECK(fatpoint_dim(scheme, t) == fatpoint_dim(scheme, t, {.all_orders = true}));
    }
  }

  TEST_CASE("kernel does not depend on the representative") {
    Gen gen("representative");
    for (int trial = 0; trial < 12; ++trial) {
      int n = gen.uniform(2, 3), m = gen.uniform(1, 3);
      int t = gen.uniform(m, m * (n + 1) + 1);
      PointConfiguration pts = fermat_points(n);
      for (auto& p : pts.points) {
        CycloNumber s = gen.nonzero_cyclo(pts.field);
        for (auto& c : p) c = c * s;
      }
      InterpolationOptions raw;
      raw.normalize_points = false;
      CHECK(fatpoint_dim({pts, m}, t, raw) == fatpoint_dim({fermat_points(n), m}, t));
    }
  }

  TEST_CASE("oracle agrees with hilbert_dim of the symbolic power") {
    Gen gen("oracle");
    FermatWorkspace w2(2), w3(3);
    for (int trial = 0; trial < 15; ++trial) {
      FermatWorkspace& ws = trial % 2 ? w3 : w2;
      int m = gen.uniform(1, 4);
      int t = gen.uniform(0, m * (ws.n() + 1) + 2);
      CHECK(fatpoint_dim({fermat_points(ws.n()), m}, t) == hilbert_dim(ws.symbolic_power(m), t));
    }
  }
}
