#include "fermat/report.hpp"

#include <cstdio>
#include <sstream>

#include "nlohmann/json.hpp"

namespace fermat {

using Json = nlohmann::ordered_json;

namespace {

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

Json poly_json(const std::optional<QPoly>& p) { return p ? Json(p->str()) : Json(nullptr); }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json waldschmidt_json(const WaldschmidtSample& s) {
  Json samples = Json::array();
  for (const auto& e : s.samples) samples.push_back(Json{{"m", e.m}, {"alpha", e.alpha}, {"ratio", e.ratio.str()}});
  return Json{{"n", s.n},
              {"samples", samples},
              {"inf_so_far", s.samples.empty() ? Json(nullptr) : Json(s.inf_so_far.str())},
              {"paper_value", s.paper_value.str()},
              {"consistent", s.consistent()}};
}

template <typename T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream out;
  out << *v;
  return out.str();
}

}  // namespace

OutputFormat parse_output_format(const std::string& text) {
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  if (text == "text") return OutputFormat::Text;
  throw Error("unknown output format '" + text + "'");
}

std::string to_json(const InvariantReport& r) {
  Json degrees = nullptr;
  if (r.minimal_generator_degrees) degrees = *r.minimal_generator_degrees;
  return dump(Json{{"n", r.n},
                   {"m", r.m},
                   {"alpha", r.alpha},
                   {"alpha_method", to_string(r.alpha_method)},
                   {"alpha_groebner", optional_json(r.alpha_groebner)},
                   {"alpha_interpolation", optional_json(r.alpha_interpolation)},
                   {"predicted", r.predicted},
                   {"match", r.alpha == r.predicted},
                   {"omega", optional_json(r.omega)},
                   {"beta", optional_json(r.beta)},
                   {"minimal_generator_degrees", degrees}});
}

std::string to_json(const ContainmentCertificate& c) {
  return dump(Json{{"n", c.n},
                   {"m", c.m},
                   {"r", c.r},
                   {"a", c.a},
                   {"holds", c.holds},
                   {"failing_generator", poly_json(c.failing_generator)},
                   {"degree_criterion_used", c.degree_criterion_used}});
}

std::string to_json(const WitnessCheck& w) {
  return dump(Json{{"n", w.n},
                   {"m", w.m},
                   {"witness", w.witness.str()},
                   {"degree", w.degree},
                   {"expected_degree", w.expected_degree},
                   {"in_K_power", w.in_K_power},
                   {"in_xy_power", w.in_coordinate_powers[0]},
                   {"in_yz_power", w.in_coordinate_powers[1]},
                   {"in_zx_power", w.in_coordinate_powers[2]},
                   {"verified", w.verified()}});
}

std::string to_json(const WaldschmidtSample& s) { return dump(waldschmidt_json(s)); }

std::string to_json(const ResurgenceScan& s) {
  Json entries = Json::array();
  for (const auto& e : s.entries) entries.push_back(Json{{"m", e.m}, {"r", e.r}, {"holds", e.holds}});
  Json failing = Json::array();
  for (const auto& e : s.non_containments()) failing.push_back(Json::array({e.m, e.r}));
  return dump(Json{{"n", s.n},
                   {"max_m", s.max_m},
                   {"max_r", s.max_r},
                   {"entries", entries},
                   {"non_containments", failing},
                   {"max_failing_ratio", s.max_failing_ratio ? Json(s.max_failing_ratio->str()) : Json(nullptr)},
                   {"paper_value", s.closed_form.str()}});
}

// Timings are left out so that reruns compare byte for byte; the CSV keeps them.
std::string to_json(const TableResult& t) {
  Json cells = Json::array();
  for (const auto& c : t.cells) {
    Json cell{{"n", c.n},
              {"m", c.m},
              {"alpha", optional_json(c.alpha)},
              {"predicted", c.predicted},
              {"match", c.match},
              {"exceptional", c.exceptional},
              {"method", to_string(c.method)},
              {"status", to_string(c.status)}};
    if (!c.detail.empty()) cell["detail"] = c.detail;
    cells.push_back(std::move(cell));
  }
  Json wald = Json::array();
  for (const auto& w : t.waldschmidt) wald.push_back(waldschmidt_json(w));
  return dump(Json{{"cells", cells}, {"waldschmidt", wald}});
}

std::string to_text(const InvariantReport& r) {
  std::ostringstream out;
  out << "alpha(I_" << r.n << "^(" << r.m << ")) = " << r.alpha << " [" << to_string(r.alpha_method) << "]";
  if (r.alpha_method == AlphaMethod::Both) {
    out << " groebner=" << *r.alpha_groebner << " interpolation=" << *r.alpha_interpolation;
  }
  out << "; predicted " << r.predicted << (r.alpha == r.predicted ? " (match)" : " (MISMATCH)") << '\n';
  if (r.omega) out << "omega = " << *r.omega << '\n';
  if (r.beta) out << "beta = " << *r.beta << '\n';
  if (r.minimal_generator_degrees) {
    out << "minimal generator degrees:";
    for (int d : *r.minimal_generator_degrees) out << ' ' << d;
    out << '\n';
  }
  return out.str();
}

std::string to_text(const ContainmentCertificate& c) {
  std::ostringstream out;
  out << "I_" << c.n << "^(" << c.m << ") in m^" << c.a << " * I_" << c.n << "^" << c.r << ": "
      << (c.holds ? "holds" : "fails");
  if (c.degree_criterion_used) out << " (degree criterion)";
  out << '\n';
  if (c.failing_generator) out << "failing generator: " << c.failing_generator->str() << '\n';
  return out.str();
}

std::string to_text(const WitnessCheck& w) {
  auto yn = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "witness for I_" << w.n << "^(" << w.m << "): " << w.witness.str() << '\n'
      << "degree " << w.degree << " (expected " << w.expected_degree << ")\n"
      << "in K^" << w.m << ": " << yn(w.in_K_power) << '\n'
      << "in (x,y)^" << w.m << ": " << yn(w.in_coordinate_powers[0]) << '\n'
      << "in (y,z)^" << w.m << ": " << yn(w.in_coordinate_powers[1]) << '\n'
      << "in (z,x)^" << w.m << ": " << yn(w.in_coordinate_powers[2]) << '\n'
      << (w.verified() ? "verified" : "NOT verified") << '\n';
  return out.str();
}

std::string to_text(const WaldschmidtSample& s) {
  std::ostringstream out;
  out << "n=" << s.n << " alpha(I^(m))/m:";
  for (const auto& e : s.samples) out << ' ' << e.m << ':' << e.ratio.str();
  out << "\ninf so far " << (s.samples.empty() ? "-" : s.inf_so_far.str()) << ", closed form " << s.paper_value.str()
      << (s.consistent() ? "" : " (VIOLATED)") << '\n';
  return out.str();
}

std::string to_text(const ResurgenceScan& s) {
  std::ostringstream out;
  out << "n=" << s.n << " grid m<=" << s.max_m << " r<=" << s.max_r << " non-containments:";
  auto failing = s.non_containments();
  if (failing.empty()) out << " none";
  for (const auto& e : failing) out << " (" << e.m << ',' << e.r << ')';
  out << "\nmax failing m/r " << (s.max_failing_ratio ? s.max_failing_ratio->str() : "-") << ", closed form "
      << s.closed_form.str() << '\n';
  return out.str();
}

std::string to_text(const TableResult& t) {
  std::ostringstream out;
  char line[128];
  std::snprintf(line, sizeof line, "%3s %3s %7s %9s %6s\n", "n", "m", "alpha", "predicted", "match");
  out << line;
  for (const auto& c : t.cells) {
    std::string alpha = c.alpha ? std::to_string(*c.alpha) : to_string(c.status);
    std::snprintf(line, sizeof line, "%3d %3d %7s %9d %6s%s\n", c.n, c.m, alpha.c_str(), c.predicted,
                  c.match ? "yes" : "no", c.exceptional ? "  exceptional" : "");
    out << line;
  }
  for (const auto& w : t.waldschmidt) out << to_text(w);
  return out.str();
}

std::string to_csv(const TableResult& t) {
  std::ostringstream out;
  out << kTableCsvHeader << '\n';
  char seconds[32];
  for (const auto& c : t.cells) {
    std::snprintf(seconds, sizeof seconds, "%.3f", c.seconds);
    out << c.n << ',' << c.m << ',';
    if (c.alpha) {
      out << *c.alpha << ',' << c.predicted << ',' << (c.match ? "true" : "false");
    } else {
      out << to_string(c.status) << ',' << c.predicted << ',' << to_string(c.status);
    }
    out << ',' << to_string(c.method) << ',' << seconds << '\n';
  }
  return out.str();
}

}  // namespace fermat
