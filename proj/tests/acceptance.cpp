// Acceptance suite: one PASS/FAIL line per criterion. Expected values are the
// published ones, written out here rather than taken from predicted_alpha.

#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fermat/interpolation.hpp"
#include "fermat/invariants.hpp"
#include "support.hpp"

using namespace fermat;
using Clock = std::chrono::steady_clock;

namespace {

struct Cell {
  int n, m, alpha;
};

// Least degrees of I_n^(m).
const std::vector<Cell> kTable = {
    {2, 1, 3},  {2, 2, 6},  {2, 3, 8},  {2, 4, 10}, {2, 5, 13}, {2, 6, 15}, {2, 7, 18}, {2, 8, 20}, {3, 1, 4},
    {3, 2, 8},  {3, 3, 9},  {3, 4, 13}, {3, 5, 17}, {3, 6, 18}, {3, 7, 22}, {4, 2, 10}, {4, 3, 12}, {4, 4, 16},
    {4, 5, 21}, {5, 3, 15},
};

int table_alpha(int n, int m) {
  for (const auto& c : kTable) {
    if (c.n == n && c.m == m) return c.alpha;
  }
  throw Error("no table entry");
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& why) {
    if (!pass) detail << "; ";
    else detail.str("");
    pass = false;
    detail << why;
  }
};

std::map<int, std::unique_ptr<FermatWorkspace>> g_workspaces;

FermatWorkspace& ws(int n) {
  auto& slot = g_workspaces[n];
  if (!slot) slot = std::make_unique<FermatWorkspace>(n);
  return *slot;
}

std::string cell(int n, int m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

void criterion1(Outcome& out) {
  for (const auto& c : kTable) {
    int a = alpha(ws(c.n).symbolic_power(c.m));
    if (a != c.alpha) out.fail("alpha" + cell(c.n, c.m) + " = " + std::to_string(a) + ", expected " + std::to_string(c.alpha));
  }
  if (out.pass) out.detail << kTable.size() << " cells exact";
}

void criterion2(Outcome& out) {
  int cells = 0;
  for (const auto& c : kTable) {
    if (c.n > 3 || c.m > 5) continue;
    int g = alpha(ws(c.n).symbolic_power(c.m));
    int i = alpha_interp(FatPointScheme{fermat_points(c.n), c.m});
    ++cells;
    if (g != i) out.fail("cell " + cell(c.n, c.m) + ": groebner " + std::to_string(g) + " vs interpolation " + std::to_string(i));
  }
  if (out.pass) out.detail << cells << " cells agree";
}

void criterion3(Outcome& out) {
  std::vector<std::pair<int, int>> cases = {{5, 3}, {5, 7}, {4, 3}, {4, 5}, {3, 4}, {3, 7}};
  for (int k = 1; k <= 3; ++k) cases.emplace_back(2, 2 * k);
  for (int k = 1; k <= 3; ++k) cases.emplace_back(2, 2 * k + 1);
  for (auto [n, m] : cases) {
    auto check = verify_witness(ws(n).data(), m);
    int expected = n == 5 && m == 7 ? 35 : table_alpha(n, m);
    if (!check) {
      out.fail("no witness for " + cell(n, m));
    } else if (!check->verified() || check->degree != expected) {
      out.fail("witness " + cell(n, m) + " degree " + std::to_string(check->degree) +
               (check->verified() ? "" : ", membership failed"));
    }
  }
  if (out.pass) out.detail << cases.size() << " witnesses verified at the expected degree";
}

void criterion4(Outcome& out) {
  struct Case {
    int n, m, r, a;
    bool holds;
  };
  std::vector<Case> cases = {{3, 3, 2, 0, false}, {4, 3, 2, 0, false}};
  for (int n : {2, 3}) {
    for (int r : {1, 2}) cases.push_back({n, 2 * r, r, r, true});
  }
  for (int r : {1, 2, 3}) cases.push_back({2, 2 * r - 1, r, r - 1, true});
  cases.push_back({2, 4, 3, 3, false});
  cases.push_back({2, 6, 4, 4, false});
  for (const auto& c : cases) {
    auto cert = containment_check(ws(c.n), c.m, c.r, c.a);
    if (cert.holds != c.holds || cert.failing_generator.has_value() == cert.holds) {
      out.fail("n=" + std::to_string(c.n) + " m=" + std::to_string(c.m) + " r=" + std::to_string(c.r) +
               " a=" + std::to_string(c.a) + " gave " + (cert.holds ? "holds" : "fails"));
    }
  }
  if (out.pass) out.detail << cases.size() << " verdicts match";
}

void criterion5(Outcome& out) {
  int checked = 0;
  auto sandwich = [&](const Ideal& ideal, const std::string& name) {
    int a = alpha(ideal), b = beta(ideal), w = omega(ideal);
    ++checked;
    if (!(a <= b && b <= w)) out.fail(name + ": alpha " + std::to_string(a) + ", beta " + std::to_string(b) + ", omega " + std::to_string(w));
    return std::pair{b, w};
  };
  for (int m = 1; m <= 3; ++m) {
    auto [b, w] = sandwich(ws(3).symbolic_power(m), "I_3^(" + std::to_string(m) + ")");
    if (b != 4 * m) out.fail("beta(I_3^(" + std::to_string(m) + ")) = " + std::to_string(b));
  }
  for (int m = 1; m <= 4; ++m) {
    auto [b, w] = sandwich(ws(2).symbolic_power(m), "I_2^(" + std::to_string(m) + ")");
    if (b != 3 * m) out.fail("beta(I_2^(" + std::to_string(m) + ")) = " + std::to_string(b));
  }
  auto degrees = minimal_generator_degrees(ws(3).data().ideal);
  if (degrees.empty() || degrees.back() != 4) out.fail("omega(I_3) != 4");
  for (int r = 1; r <= 3; ++r) {
    auto d = minimal_generator_degrees(ws(2).ordinary_power(r));
    if (d.empty() || d.back() != 3 * r) out.fail("omega(I_2^" + std::to_string(r) + ") != " + std::to_string(3 * r));
    sandwich(ws(2).ordinary_power(r), "I_2^" + std::to_string(r));
  }
  if (out.pass) out.detail << "beta and omega exact; sandwich on " << checked << " ideals";
}

void criterion6(Outcome& out) {
  using test::P;
  QPoly F = P("(x^2 - y^2)^2*(y^2 - z^2)*(z^2 - x^2)*z^2");
  QPoly G = P("(x^2 - y^2)^2*(y^2 - z^2)^2*(z^2 - x^2)^2*x*y*z");
  auto& w = ws(2);
  Ideal sq2 = ideal_power(w.symbolic_power(2), 2);
  Ideal sq3 = ideal_power(w.symbolic_power(3), 2);
  if (ideal_equal(w.symbolic_power(4), sq2)) out.fail("I_2^(4) == (I_2^(2))^2");
  if (ideal_equal(w.symbolic_power(6), sq3)) out.fail("I_2^(6) == (I_2^(3))^2");
  if (!w.symbolic_power(4).contains(F) || sq2.contains(F)) out.fail("F is not in I_2^(4) \\ (I_2^(2))^2");
  if (!w.symbolic_power(6).contains(G) || sq3.contains(G)) out.fail("G is not in I_2^(6) \\ (I_2^(3))^2");
  if (out.pass) out.detail << "both inequalities, F and G one-sided";
}

void criterion7(Outcome& out) {
  auto s2 = resurgence_scan(ws(2), 8, 6);
  for (const auto& e : s2.non_containments()) {
    if (Rational(e.m, e.r) > Rational(6, 5)) {
      out.fail("n=2 non-containment at m/r = " + std::to_string(e.m) + "/" + std::to_string(e.r));
    }
  }
  auto s3 = resurgence_scan(ws(3), 6, 4);
  bool has32 = false;
  for (const auto& e : s3.non_containments()) {
    if (e.m == 3 && e.r == 2) has32 = true;
    if (e.m >= 2 * e.r) out.fail("n=3 non-containment with m >= 2r at (" + std::to_string(e.m) + "," + std::to_string(e.r) + ")");
  }
  for (const auto& e : s2.non_containments()) {
    if (e.m >= 2 * e.r) out.fail("n=2 non-containment with m >= 2r");
  }
  if (!has32) out.fail("n=3 scan misses (3,2)");
  if (out.pass) {
    out.detail << "n=2 max failing m/r " << (s2.max_failing_ratio ? s2.max_failing_ratio->str() : "-")
               << ", n=3 max failing m/r " << (s3.max_failing_ratio ? s3.max_failing_ratio->str() : "-");
  }
}

void criterion8(Outcome& out) {
  std::string cmd = std::string("\"") + FERMAT_PROPERTY_TESTS + "\" --no-intro=true --minimal=true";
  int status = std::system(cmd.c_str());
  if (status != 0) out.fail("property suite exited with status " + std::to_string(status));
  else out.detail << "property suite green";
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    double limit_seconds;
    std::function<void(Outcome&)> run;
  };
  std::vector<Criterion> criteria = {
      {1, "alpha grid via Groebner bases", 1800, criterion1},
      {2, "interpolation oracle matches Groebner alpha (n<=3, m<=5)", 600, criterion2},
      {3, "explicit witnesses at the least degree", 0, criterion3},
      {4, "containment certificates", 0, criterion4},
      {5, "beta, omega and alpha <= beta <= omega", 0, criterion5},
      {6, "I_2^(4) != (I_2^(2))^2 and I_2^(6) != (I_2^(3))^2", 0, criterion6},
      {7, "resurgence scans", 0, criterion7},
      {8, "property suites", 300, criterion8},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    Outcome out;
    auto start = Clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.fail(std::string("exception: ") + e.what());
    }
    double seconds = std::chrono::duration<double>(Clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds > c.limit_seconds) {
      out.fail("took " + std::to_string(seconds) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    }
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds);
    std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.title << " (" << out.detail.str()
              << "; " << timing;
    if (c.limit_seconds > 0) std::cout << ", limit " << static_cast<int>(c.limit_seconds) << " s";
    std::cout << ")" << std::endl;
    if (!out.pass) ++failures;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
