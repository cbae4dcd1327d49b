#include <unistd.h>

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

#include "doctest.h"
#include "fermat/budget.hpp"
#include "fermat/errors.hpp"
#include "fermat/gb_cache.hpp"
#include "support.hpp"

using namespace fermat;
using fermat::test::ideal_of;
using fermat::test::P;

namespace {

std::vector<QPoly> polys(const std::vector<std::string>& texts) {
  std::vector<QPoly> out;
  for (const auto& t : texts) out.push_back(P(t));
  return out;
}

bool in_monomial_ideal(Monomial m, const std::vector<Monomial>& gens) {
  for (Monomial g : gens) {
    if (g.divides(m)) return true;
  }
  return false;
}

std::filesystem::path fresh_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("fermat_test_" + name + "_" + std::to_string(::getpid()));
  std::filesystem::remove_all(dir);
  return dir;
}

}  // namespace

TEST_CASE("buchberger examples") {
  auto gb = buchberger(polys({"x", "y"}), MonomialOrder::grevlex());
  CHECK(gb.polys == polys({"y", "x"}));

  auto d = fermat_ideal(2);
  CHECK(buchberger(d.ideal.generators(), MonomialOrder::grevlex()).min_degree() == 3);

  // the three linear forms span a 2-dimensional space; reduced echelon
  // form under x > y > z is {x - z, y - z}.
  auto lin = buchberger(polys({"x - y", "y - z", "z - x"}), MonomialOrder::grevlex());
  CHECK(lin.polys == polys({"y - z", "x - z"}));
}

TEST_CASE("reduced basis is monic, tail-reduced, sorted") {
  auto gb = fermat_ideal(3).ideal.groebner();
  auto lts = gb.leading_monomials();
  for (std::size_t i = 0; i < gb.polys.size(); ++i) {
    CHECK(gb.polys[i].leading_coeff().is_one());
    if (i > 0) CHECK(MonomialOrder::grevlex().greater(lts[i], lts[i - 1]));
    for (std::size_t j = 0; j < gb.polys.size(); ++j) {
      for (const auto& t : gb.polys[i].terms()) {
        if (i != j) CHECK_FALSE(lts[j].divides(t.mono));
      }
    }
  }
}

TEST_CASE("lex and block orders") {
  // Twisted cubic under lex: the basis eliminates down to y^3 - z*... forms.
  auto gens = polys({"x^2 - y*z", "x*y - z^2"});
  auto lex = buchberger(gens, MonomialOrder::lex());
  for (const auto& g : gens) CHECK(reduces_to_zero(g.in_ring(lex.ring), lex));
  for (std::size_t i = 0; i < lex.polys.size(); ++i) {
    for (std::size_t j = 0; j < lex.polys.size(); ++j) {
      if (i < j) CHECK(reduces_to_zero(s_polynomial(lex.polys[i], lex.polys[j]), lex));
    }
  }
}

TEST_CASE("normal form examples") {
  auto basis = buchberger(polys({"x", "y"}), MonomialOrder::grevlex());
  CHECK(normal_form(P("x^2"), basis).is_zero());
  CHECK(normal_form(P("x^2 + z^3"), basis) == P("z^3"));

  FermatWorkspace w3(3);
  const auto& d3 = w3.data();
  CHECK_FALSE(normal_form(d3.f * d3.g * d3.h, w3.ordinary_power(2).groebner()).is_zero());

  FermatWorkspace w4(4);
  const auto& d4 = w4.data();
  QPoly zf2gh2 = P("z") * d4.f.pow(2) * d4.g * d4.h.pow(2);
  CHECK(normal_form(zf2gh2, w4.symbolic_power(5).groebner()).is_zero());
}

TEST_CASE("sum, product, power examples") {
  auto xy2 = ideal_power(ideal_of({"x", "y"}), 2);
  CHECK(ideal_equal(xy2, ideal_of({"x^2", "x*y", "y^2"})));
  CHECK(xy2.generators().size() == 3);

  auto d = fermat_ideal(3);
  auto sq = ideal_power(d.ideal, 2);
  CHECK(sq.generators().size() == 6);
  for (const auto& g : sq.generators()) CHECK(g.degree() == 8);
  // membership both ways against the product route.
  CHECK(ideal_equal(sq, ideal_product(d.ideal, d.ideal)));

  auto m = maximal_ideal_power(xyz_ring(), 1);
  CHECK(ideal_equal(ideal_product(m, m), ideal_of({"x^2", "x*y", "x*z", "y^2", "y*z", "z^2"})));
  CHECK(ideal_product(m, m).generators().size() == 6);
  CHECK(ideal_equal(ideal_sum(ideal_of({"x"}), ideal_of({"y", "z"})), m));
  CHECK_THROWS(ideal_power(m, 0));
}

TEST_CASE("intersection examples") {
  auto i3 = fermat_ideal(3).ideal;
  CHECK(ideal_equal(ideal_intersect(i3, i3), i3));
  CHECK(ideal_equal(ideal_intersect(ideal_of({"x"}), ideal_of({"y"})), ideal_of({"x*y"})));

  auto a = ideal_power(ideal_of({"x", "y"}), 2);
  auto b = ideal_power(ideal_of({"y", "z"}), 2);
  auto both = ideal_intersect(a, b);
  CHECK(both.contains(P("y^2")));
  CHECK(both.contains(P("x*y*z")));
  CHECK(both.contains(P("x^2*z^2")));
  CHECK(both.min_generator_degree() == 2);
  // brute force: a monomial of degree <= 4 lies in the intersection iff
  // it lies in both monomial ideals.
  auto la = a.groebner().leading_monomials();
  auto lb = b.groebner().leading_monomials();
  for (int deg = 0; deg <= 4; ++deg) {
    for (Monomial mono : monomials_of_degree(3, deg)) {
      bool expected = in_monomial_ideal(mono, la) && in_monomial_ideal(mono, lb);
      CHECK(both.contains(QPoly::term(xyz_ring(), mono, Rational(1))) == expected);
    }
  }
  // The elimination route agrees with the termwise route on monomial inputs.
  CHECK(ideal_equal(intersect_by_elimination(a, b), intersect_monomial(a, b)));
}

TEST_CASE("ideal equality examples") {
  auto d = fermat_ideal(2);
  auto gens = d.ideal.generators();
  std::reverse(gens.begin(), gens.end());
  CHECK(ideal_equal(d.ideal, Ideal(d.ring, gens)));

  FermatWorkspace w(2);
  CHECK_FALSE(ideal_equal(w.symbolic_power(4), ideal_power(w.symbolic_power(2), 2)));
  CHECK_FALSE(ideal_equal(w.symbolic_power(6), ideal_power(w.symbolic_power(3), 2)));
}

TEST_CASE("hilbert_dim examples") {
  CHECK(hilbert_dim(maximal_ideal_power(xyz_ring(), 1), 1) == 3);
  auto i3 = fermat_ideal(3).ideal;
  CHECK(hilbert_dim(i3, 3) == 0);
  CHECK(hilbert_dim(i3, 4) == 3);
  CHECK(hilbert_dim(i3, 4) == static_cast<long>(graded_component_basis(i3.generators(), 4).size()));
  CHECK(hilbert_dim(i3, -1) == 0);
  // For large t the 12 points impose independent conditions.
  CHECK(hilbert_dim(i3, 20) == (22 * 21) / 2 - 12);
}

TEST_CASE("monomial ideal dimension examples") {
  CHECK(monomial_ideal_dimension({Monomial{1, 0, 0}, Monomial{0, 1, 0}, Monomial{0, 0, 1}}) == 0);
  CHECK(monomial_ideal_dimension({Monomial{1, 0, 0}}) == 2);
  CHECK(monomial_ideal_dimension({Monomial{1, 1, 0}, Monomial{0, 1, 1}, Monomial{1, 0, 1}}) == 1);
  CHECK(monomial_ideal_dimension({Monomial{0, 0, 0}}) == -1);
  CHECK(monomial_ideal_dimension({}) == 3);
}

TEST_CASE("ideal rejects zero and inhomogeneous generators") {
  CHECK_THROWS(Ideal(xyz_ring(), {QPoly(xyz_ring())}));
  CHECK_THROWS(Ideal(xyz_ring(), {P("x^2 + y")}));
}

TEST_CASE("budget interrupts a computation") {
  auto gens = fermat_ideal(7).ideal.generators();
  Ideal big = ideal_power(Ideal(xyz_ring(), gens), 4);
  budget::Scope scope(std::chrono::milliseconds(1));
  std::this_thread::sleep_for(std::chrono::milliseconds(5));
  CHECK_THROWS_AS(big.groebner(), Timeout);
}

TEST_CASE("disk cache round trip") {
  auto dir = fresh_dir("cache");
  auto cache = std::make_shared<GbCache>(dir);
  auto d = fermat_ideal(3, cache);
  auto cold = d.ideal.groebner();
  CHECK(std::distance(std::filesystem::directory_iterator(dir), std::filesystem::directory_iterator{}) >= 1);

  auto loaded = cache->load(d.ideal.generators(), d.ring);
  REQUIRE(loaded);
  CHECK(*loaded == cold);

  // Generator order and scaling do not change the key.
  auto gens = d.ideal.generators();
  std::reverse(gens.begin(), gens.end());
  gens[0] = gens[0].scaled(Rational(-3));
  CHECK(GbCache::key(gens, *d.ring) == GbCache::key(d.ideal.generators(), *d.ring));
  CHECK(GbCache::key(gens, *with_order(d.ring, MonomialOrder::lex())) != GbCache::key(gens, *d.ring));

  // A warm run returns the same basis.
  auto warm = fermat_ideal(3, cache).ideal.groebner();
  CHECK(warm == cold);
  std::filesystem::remove_all(dir);
}

TEST_CASE("corrupt or foreign cache files are misses") {
  auto dir = fresh_dir("corrupt");
  auto cache = std::make_shared<GbCache>(dir);
  auto d = fermat_ideal(2, cache);
  auto cold = d.ideal.groebner();
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    std::ofstream(entry.path(), std::ios::trunc) << "fermat-gb-cache 999\ngarbage\n";
  }
  CHECK_FALSE(cache->load(d.ideal.generators(), d.ring));
  CHECK(fermat_ideal(2, cache).ideal.groebner() == cold);
  std::filesystem::remove_all(dir);
}

TEST_CASE("cache directory from the environment") {
  auto dir = fresh_dir("env");
  ::setenv("FERMAT_CACHE_DIR", dir.c_str(), 1);
  auto cache = GbCache::from_environment("/nonexistent/fallback");
  ::unsetenv("FERMAT_CACHE_DIR");
  REQUIRE(cache);
  CHECK(cache->directory() == dir);
  CHECK_FALSE(GbCache::from_environment(""));
  std::filesystem::remove_all(dir);
}
