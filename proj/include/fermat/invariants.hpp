#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fermat/errors.hpp"
#include "fermat/fermat.hpp"
#include "fermat/interpolation.hpp"

namespace fermat {

enum class AlphaMethod { Groebner, Interpolation, Both };

std::string to_string(AlphaMethod method);
AlphaMethod parse_alpha_method(const std::string& text);

/// The two alpha routes disagree. Carries both values for the diagnostic.
class OracleDisagreement : public Error {
 public:
  OracleDisagreement(int n, int m, int groebner, int interpolation);
  int groebner() const { return groebner_; }
  int interpolation() const { return interpolation_; }

 private:
  int groebner_;
  int interpolation_;
};

/// Least degree of a nonzero form in the ideal: min degree of its grevlex basis.
int alpha(const Ideal& ideal);

/// mu_t = dim [I]_t - dim [mI]_t for t from alpha to the max basis degree, as a
/// sorted multiset.
std::vector<int> minimal_generator_degrees(const Ideal& ideal);
int omega(const Ideal& ideal);

/// Least t >= alpha for which [I]_t cuts out a locus of projective dimension <= 0.
/// Throws Error if the scan passes omega (impossible for plane point ideals).
int beta(const Ideal& ideal);

struct AlphaResult {
  int alpha = 0;
  AlphaMethod method = AlphaMethod::Groebner;
  std::optional<int> groebner;
  std::optional<int> interpolation;
};

/// alpha of I_n^(m) by the chosen route(s); Both throws OracleDisagreement on mismatch.
AlphaResult compute_alpha(FermatWorkspace& ws, int m, AlphaMethod method,
                          const InterpolationOptions& interpolation = {});

struct InvariantReport {
  int n = 0;
  int m = 0;
  int alpha = 0;
  AlphaMethod alpha_method = AlphaMethod::Groebner;
  std::optional<int> alpha_groebner;
  std::optional<int> alpha_interpolation;
  int predicted = 0;
  std::optional<int> omega;
  std::optional<int> beta;
  std::optional<std::vector<int>> minimal_generator_degrees;
};

InvariantReport invariant_report(FermatWorkspace& ws, int m, AlphaMethod method, bool with_omega_beta);

struct ContainmentCertificate {
  int n = 0;
  int m = 0;
  int r = 0;
  int a = 0;
  bool holds = false;
  std::optional<QPoly> failing_generator;
  bool degree_criterion_used = false;
};

struct ContainmentOptions {
  /// Allow alpha(I^(m)) >= a + omega(I^r) plus I^(m) in I^r to settle the case
  /// without building m^a I^r.
  bool use_degree_criterion = true;
};

/// Is I_n^(m) contained in m^a I_n^r? The failing generator is the first grevlex
/// basis element of I^(m) (increasing degree, then order) with nonzero remainder.
ContainmentCertificate containment_check(FermatWorkspace& ws, int m, int r, int a,
                                         const ContainmentOptions& options = {});
ContainmentCertificate containment_check(int n, int m, int r, int a, const ContainmentOptions& options = {});

/// alpha(I^(m))/m >= (alpha(I)+1)/2 for every m <= sample_max_m.
bool chudnovsky_check(FermatWorkspace& ws, int sample_max_m);
/// alpha(I^(k))/k >= (alpha(I^(m))+1)/(m+1) for every k <= sample_max_k.
bool demailly_check(FermatWorkspace& ws, int m, int sample_max_k);

struct WaldschmidtEntry {
  int m = 0;
  int alpha = 0;
  Rational ratio;
};

struct WaldschmidtSample {
  int n = 0;
  std::vector<WaldschmidtEntry> samples;
  Rational inf_so_far;
  Rational paper_value;

  /// Every sampled ratio is at least the closed-form limit.
  bool consistent() const;
};

/// Known value of the Waldschmidt constant: 5/2 for n = 2, n otherwise.
Rational waldschmidt_closed_form(int n);
WaldschmidtSample waldschmidt_from(int n, const std::vector<std::pair<int, int>>& m_alpha);
WaldschmidtSample waldschmidt_table(FermatWorkspace& ws, int max_m);

struct ResurgenceEntry {
  int m = 0;
  int r = 0;
  bool holds = false;
};

struct ResurgenceScan {
  int n = 0;
  int max_m = 0;
  int max_r = 0;
  std::vector<ResurgenceEntry> entries;
  /// Largest m/r among non-containments; a lower bound for the resurgence.
  std::optional<Rational> max_failing_ratio;
  /// Known resurgence: 6/5 for n = 2, 3/2 otherwise.
  Rational closed_form;

  std::vector<ResurgenceEntry> non_containments() const;
};

Rational resurgence_closed_form(int n);
ResurgenceScan resurgence_scan(FermatWorkspace& ws, int max_m, int max_r);

}  // namespace fermat
