#include "fermat/invariants.hpp"

#include <algorithm>

#include "fermat/budget.hpp"

namespace fermat {

std::string to_string(AlphaMethod method) {
  switch (method) {
    case AlphaMethod::Groebner:
      return "groebner";
    case AlphaMethod::Interpolation:
      return "interpolation";
    case AlphaMethod::Both:
      return "both";
  }
  return "groebner";
}

AlphaMethod parse_alpha_method(const std::string& text) {
  if (text == "groebner") return AlphaMethod::Groebner;
  if (text == "interpolation") return AlphaMethod::Interpolation;
  if (text == "both") return AlphaMethod::Both;
  throw Error("unknown alpha method '" + text + "'");
}

OracleDisagreement::OracleDisagreement(int n, int m, int groebner, int interpolation)
    : Error("alpha disagreement at n=" + std::to_string(n) + " m=" + std::to_string(m) +
            ": groebner=" + std::to_string(groebner) + " interpolation=" + std::to_string(interpolation)),
      groebner_(groebner),
      interpolation_(interpolation) {}

int alpha(const Ideal& ideal) {
  if (ideal.generators().empty()) throw Error("alpha: zero ideal");
  return ideal.groebner().min_degree();
}

std::vector<int> minimal_generator_degrees(const Ideal& ideal) {
  if (ideal.generators().empty()) return {};
  const GroebnerBasis& gb = ideal.groebner();
  Ideal mI = ideal_product(maximal_ideal_power(ideal.ring(), 1, ideal.disk_cache()), ideal);
  std::vector<int> out;
  for (int t = gb.min_degree(); t <= gb.max_degree(); ++t) {
    long mu = hilbert_dim(ideal, t) - hilbert_dim(mI, t);
    out.insert(out.end(), static_cast<std::size_t>(mu), t);
  }
  return out;
}

int omega(const Ideal& ideal) {
  const auto& gens = ideal.generators();
  if (gens.empty()) throw Error("omega: zero ideal");
  // Equigenerated ideals: every minimal generator has the common degree.
  int d = gens.front().degree();
  if (std::all_of(gens.begin(), gens.end(), [d](const QPoly& g) { return g.degree() == d; })) return d;
  auto degrees = minimal_generator_degrees(ideal);
  return degrees.back();
}

int beta(const Ideal& ideal) {
  const GroebnerBasis& gb = ideal.groebner();
  int upper = omega(ideal);
  for (int t = gb.min_degree(); t <= upper; ++t) {
    budget::check();
    auto piece = graded_component_basis(gb.polys, t);
    if (piece.empty()) continue;
    Ideal truncation(ideal.ring(), std::move(piece));
    if (monomial_ideal_dimension(truncation.groebner().leading_monomials(), ideal.ring()->nvars()) <= 1) return t;
  }
  throw Error("beta: no degree up to omega cuts out a finite locus");
}

AlphaResult compute_alpha(FermatWorkspace& ws, int m, AlphaMethod method, const InterpolationOptions& interpolation) {
  AlphaResult result;
  result.method = method;
  if (method != AlphaMethod::Interpolation) result.groebner = alpha(ws.symbolic_power(m));
  if (method != AlphaMethod::Groebner) {
    result.interpolation = alpha_interp(FatPointScheme{fermat_points(ws.n()), m}, interpolation);
  }
  if (result.groebner && result.interpolation && *result.groebner != *result.interpolation) {
    throw OracleDisagreement(ws.n(), m, *result.groebner, *result.interpolation);
  }
  result.alpha = result.groebner ? *result.groebner : *result.interpolation;
  return result;
}

InvariantReport invariant_report(FermatWorkspace& ws, int m, AlphaMethod method, bool with_omega_beta) {
  AlphaResult a = compute_alpha(ws, m, method);
  InvariantReport report;
  report.n = ws.n();
  report.m = m;
  report.alpha = a.alpha;
  report.alpha_method = method;
  report.alpha_groebner = a.groebner;
  report.alpha_interpolation = a.interpolation;
  report.predicted = predicted_alpha(ws.n(), m);
  if (with_omega_beta) {
    Ideal sym = ws.symbolic_power(m);
    report.minimal_generator_degrees = minimal_generator_degrees(sym);
    report.omega = report.minimal_generator_degrees->back();
    report.beta = beta(sym);
  }
  return report;
}

namespace {

std::optional<QPoly> first_outside(const Ideal& source, const Ideal& target) {
  const GroebnerBasis& gb = target.groebner();
  // The reduced basis is sorted by grevlex leading monomial, hence by degree first.
  for (const auto& g : source.groebner().polys) {
    budget::check();
    if (!reduces_to_zero(g, gb)) return g;
  }
  return std::nullopt;
}

}  // namespace

ContainmentCertificate containment_check(FermatWorkspace& ws, int m, int r, int a, const ContainmentOptions& options) {
  if (m < 1 || r < 1 || a < 0) throw Error("containment_check: need m, r >= 1 and a >= 0");
  ContainmentCertificate cert{ws.n(), m, r, a, false, std::nullopt, false};
  Ideal sym = ws.symbolic_power(m);
  if (options.use_degree_criterion && a > 0 && alpha(sym) >= a + omega(ws.ordinary_power(r))) {
    if (!first_outside(sym, ws.ordinary_power(r))) {
      cert.holds = true;
      cert.degree_criterion_used = true;
      return cert;
    }
  }
  cert.failing_generator = first_outside(sym, ws.containment_target(a, r));
  cert.holds = !cert.failing_generator;
  return cert;
}

ContainmentCertificate containment_check(int n, int m, int r, int a, const ContainmentOptions& options) {
  FermatWorkspace ws(n);
  return containment_check(ws, m, r, a, options);
}

bool chudnovsky_check(FermatWorkspace& ws, int sample_max_m) {
  if (sample_max_m < 1) throw Error("chudnovsky_check: sample_max_m must be >= 1");
  int a1 = alpha(ws.symbolic_power(1));
  for (int m = 1; m <= sample_max_m; ++m) {
    if (2 * alpha(ws.symbolic_power(m)) < m * (a1 + 1)) return false;
  }
  return true;
}

bool demailly_check(FermatWorkspace& ws, int m, int sample_max_k) {
  if (m < 1 || sample_max_k < 1) throw Error("demailly_check: need m, sample_max_k >= 1");
  int am = alpha(ws.symbolic_power(m));
  for (int k = 1; k <= sample_max_k; ++k) {
    if (alpha(ws.symbolic_power(k)) * (m + 1) < k * (am + 1)) return false;
  }
  return true;
}

bool WaldschmidtSample::consistent() const {
  return std::all_of(samples.begin(), samples.end(), [this](const WaldschmidtEntry& e) { return e.ratio >= paper_value; });
}

Rational waldschmidt_closed_form(int n) { return n == 2 ? Rational(5, 2) : Rational(n); }

WaldschmidtSample waldschmidt_from(int n, const std::vector<std::pair<int, int>>& m_alpha) {
  WaldschmidtSample sample{n, {}, Rational(0), waldschmidt_closed_form(n)};
  for (auto [m, a] : m_alpha) {
    Rational ratio(a, m);
    if (sample.samples.empty() || ratio < sample.inf_so_far) sample.inf_so_far = ratio;
    sample.samples.push_back({m, a, ratio});
  }
  return sample;
}

WaldschmidtSample waldschmidt_table(FermatWorkspace& ws, int max_m) {
  if (max_m < 1) throw Error("waldschmidt_table: max_m must be >= 1");
  std::vector<std::pair<int, int>> m_alpha;
  for (int m = 1; m <= max_m; ++m) m_alpha.emplace_back(m, alpha(ws.symbolic_power(m)));
  return waldschmidt_from(ws.n(), m_alpha);
}

std::vector<ResurgenceEntry> ResurgenceScan::non_containments() const {
  std::vector<ResurgenceEntry> out;
  std::copy_if(entries.begin(), entries.end(), std::back_inserter(out), [](const ResurgenceEntry& e) { return !e.holds; });
  return out;
}

Rational resurgence_closed_form(int n) { return n == 2 ? Rational(6, 5) : Rational(3, 2); }

ResurgenceScan resurgence_scan(FermatWorkspace& ws, int max_m, int max_r) {
  if (max_m < 1 || max_r < 1) throw Error("resurgence_scan: bounds must be >= 1");
  ResurgenceScan scan{ws.n(), max_m, max_r, {}, std::nullopt, resurgence_closed_form(ws.n())};
  for (int m = 1; m <= max_m; ++m) {
    for (int r = 1; r <= max_r; ++r) {
      bool holds = containment_check(ws, m, r, 0).holds;
      scan.entries.push_back({m, r, holds});
      Rational ratio(m, r);
      if (!holds && (!scan.max_failing_ratio || ratio > *scan.max_failing_ratio)) scan.max_failing_ratio = ratio;
    }
  }
  return scan;
}

}  // namespace fermat
