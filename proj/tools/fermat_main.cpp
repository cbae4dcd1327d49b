// fermat: command-line front end for alpha, containment, witness and
// interpolation queries on Fermat ideals.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "fermat/budget.hpp"
#include "fermat/gb_cache.hpp"
#include "fermat/interpolation.hpp"
#include "fermat/invariants.hpp"
#include "fermat/report.hpp"
#include "fermat/table.hpp"

namespace {

using namespace fermat;

enum Exit : int { kOk = 0, kNegative = 1, kUsage = 2, kInternal = 3 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "text";
  std::string cache_dir;
  double timeout_seconds = 300;
  std::string out;
};

std::chrono::milliseconds timeout_of(const Globals& g) {
  return std::chrono::milliseconds(static_cast<long long>(g.timeout_seconds * 1000));
}

std::shared_ptr<const GbCache> open_cache(const Globals& g) {
  if (!g.cache_dir.empty()) return std::make_shared<GbCache>(g.cache_dir);
  return GbCache::from_environment();
}

void emit(const Globals& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(g.out, std::ios::trunc);
  if (!file) throw Error("cannot write '" + g.out + "'");
  file << text;
}

template <typename T>
std::string render(const Globals& g, const T& value) {
  switch (parse_output_format(g.format)) {
    case OutputFormat::Json:
      return to_json(value);
    case OutputFormat::Text:
      return to_text(value);
    case OutputFormat::Csv:
      break;
  }
  throw UsageError("csv output is only available for the table command");
}

void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

int cmd_alpha(const Globals& g, int n, int m, const std::string& method, bool with_invariants) {
  require(n >= 2 && m >= 1, "need --n >= 2 and --m >= 1");
  AlphaMethod am = parse_alpha_method(method);
  FermatWorkspace ws(n, open_cache(g));
  budget::Scope scope(timeout_of(g));
  InvariantReport report = invariant_report(ws, m, am, with_invariants);
  emit(g, render(g, report));
  return report.alpha == report.predicted ? kOk : kNegative;
}

int cmd_table(Globals g, TableConfig config) {
  require(config.n_min >= 2, "--n-min must be >= 2");
  require(config.max_m >= 0 && config.workers >= 1, "--max-m must be >= 0 and --workers >= 1");
  config.cache = open_cache(g);
  config.timeout = timeout_of(g);
  TableResult table = run_table(config);
  switch (parse_output_format(g.format)) {
    case OutputFormat::Csv:
      emit(g, to_csv(table));
      break;
    case OutputFormat::Json:
      emit(g, to_json(table));
      break;
    case OutputFormat::Text:
      emit(g, to_text(table));
      break;
  }
  bool incomplete = false;
  for (const auto& c : table.cells) {
    if (c.status == CellStatus::Ok && !c.match) return kNegative;
    if (c.status != CellStatus::Ok) incomplete = true;
  }
  return incomplete ? kInternal : kOk;
}

int cmd_contain(const Globals& g, int n, int m, int r, int a, bool degree_criterion) {
  require(n >= 2 && m >= 1 && r >= 1 && a >= 0, "need --n >= 2, --m >= 1, --r >= 1, --a >= 0");
  FermatWorkspace ws(n, open_cache(g));
  budget::Scope scope(timeout_of(g));
  auto cert = containment_check(ws, m, r, a, ContainmentOptions{degree_criterion});
  emit(g, render(g, cert));
  return cert.holds ? kOk : kNegative;
}

int cmd_witness(const Globals& g, int n, int m) {
  require(n >= 2 && m >= 1, "need --n >= 2 and --m >= 1");
  FermatData data = fermat_ideal(n, open_cache(g));
  budget::Scope scope(timeout_of(g));
  auto check = verify_witness(data, m);
  if (!check) {
    std::cerr << "no in-paper witness for n=" << n << " m=" << m << "; computing alpha instead\n";
    return cmd_alpha(g, n, m, "groebner", false);
  }
  emit(g, render(g, *check));
  return check->verified() ? kOk : kNegative;
}

struct PointsArgs {
  std::string file;
  int fermat = 0;
  int m = 1;
  std::optional<int> t;
  bool strict = false;
  bool trace = false;
  int cap = 0;
};

int cmd_points(const Globals& g, const PointsArgs& p) {
  require(p.file.empty() != (p.fermat == 0), "give exactly one of --file or --fermat");
  require(p.m >= 1, "--m must be >= 1");
  PointConfiguration config = p.file.empty() ? fermat_points(p.fermat) : read_point_configuration_file(p.file);
  validate_configuration(config);
  InterpolationOptions options;
  options.all_orders = p.strict;
  options.alpha_cap = p.cap;
  if (p.trace) options.trace = &std::cerr;
  FatPointScheme scheme{config, p.m};
  budget::Scope scope(timeout_of(g));
  bool json = parse_output_format(g.format) == OutputFormat::Json;
  std::ostringstream out;
  if (p.t) {
    long dim = fatpoint_dim(scheme, *p.t, options);
    if (json) {
      out << "{\n  \"points\": " << config.size() << ",\n  \"m\": " << p.m << ",\n  \"t\": " << *p.t
          << ",\n  \"dim\": " << dim << "\n}\n";
    } else {
      out << "dim of degree-" << *p.t << " forms vanishing to order " << p.m << " at " << config.size()
          << " points = " << dim << '\n';
    }
  } else {
    int a = alpha_interp(scheme, options);
    if (json) {
      out << "{\n  \"points\": " << config.size() << ",\n  \"m\": " << p.m << ",\n  \"alpha\": " << a << "\n}\n";
    } else {
      out << "alpha = " << a << " (" << config.size() << " points, multiplicity " << p.m << ")\n";
    }
  }
  emit(g, out.str());
  return kOk;
}

int cmd_waldschmidt(const Globals& g, int n, int max_m) {
  require(n >= 2 && max_m >= 1, "need --n >= 2 and --max-m >= 1");
  FermatWorkspace ws(n, open_cache(g));
  budget::Scope scope(timeout_of(g));
  auto sample = waldschmidt_table(ws, max_m);
  emit(g, render(g, sample));
  return sample.consistent() ? kOk : kNegative;
}

int cmd_scan(const Globals& g, int n, int max_m, int max_r) {
  require(n >= 2 && max_m >= 1 && max_r >= 1, "need --n >= 2, --max-m >= 1, --max-r >= 1");
  FermatWorkspace ws(n, open_cache(g));
  budget::Scope scope(timeout_of(g));
  emit(g, render(g, resurgence_scan(ws, max_m, max_r)));
  return kOk;
}

int cmd_equal(const Globals& g, int n, int m, int base, int k) {
  require(n >= 2 && m >= 1 && base >= 1 && k >= 1, "need --n >= 2 and --m, --base, --k >= 1");
  FermatWorkspace ws(n, open_cache(g));
  budget::Scope scope(timeout_of(g));
  bool equal = ideal_equal(ws.symbolic_power(m), ideal_power(ws.symbolic_power(base), k));
  std::string lhs = "I_" + std::to_string(n) + "^(" + std::to_string(m) + ")";
  std::string rhs = "(I_" + std::to_string(n) + "^(" + std::to_string(base) + "))^" + std::to_string(k);
  if (parse_output_format(g.format) == OutputFormat::Json) {
    emit(g, "{\n  \"lhs\": \"" + lhs + "\",\n  \"rhs\": \"" + rhs + "\",\n  \"equal\": " + (equal ? "true" : "false") +
                "\n}\n");
  } else {
    emit(g, lhs + (equal ? " == " : " != ") + rhs + "\n");
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symbolic powers of Fermat ideals: alpha, containment, witnesses, interpolation"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand
  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv", "text"}));
  app.add_option("--cache-dir", g.cache_dir, "Groebner basis cache directory (default: $FERMAT_CACHE_DIR)");
  app.add_option("--timeout", g.timeout_seconds, "Wall-clock budget in seconds, per table cell")->capture_default_str();
  app.add_option("--out", g.out, "Write output to this file instead of stdout");

  int n = 0, m = 1, r = 1, a = 0;
  std::string method = "groebner";
  auto add_nm = [&](CLI::App* sub) {
    sub->add_option("--n", n, "Fermat exponent")->required();
    sub->add_option("--m", m, "Symbolic power")->required();
  };
  auto add_method = [&](CLI::App* sub) {
    sub->add_option("--method", method, "Alpha route")->check(CLI::IsMember({"groebner", "interpolation", "both"}));
  };

  auto* alpha = app.add_subcommand("alpha", "alpha of I_n^(m)");
  add_nm(alpha);
  add_method(alpha);

  auto* invariants = app.add_subcommand("invariants", "alpha, omega, beta and generator degrees of I_n^(m)");
  add_nm(invariants);
  add_method(invariants);

  TableConfig table_config;
  auto* table = app.add_subcommand("table", "alpha grid with closed-form predictions");
  table->add_option("--max-n", table_config.max_n, "Largest n")->capture_default_str();
  table->add_option("--n-min", table_config.n_min, "Smallest n")->capture_default_str();
  table->add_option("--max-m", table_config.max_m, "Largest m")->capture_default_str();
  table->add_option("--workers", table_config.workers, "Concurrent cells")->capture_default_str();
  add_method(table);

  bool no_degree_criterion = false;
  auto* contain = app.add_subcommand("contain", "is I_n^(m) contained in m^a I_n^r");
  add_nm(contain);
  contain->add_option("--r", r, "Ordinary power")->required();
  contain->add_option("--a", a, "Power of the maximal ideal")->capture_default_str();
  contain->add_flag("--no-degree-criterion", no_degree_criterion, "Always reduce against m^a I^r");

  auto* witness = app.add_subcommand("witness", "verify the explicit low-degree element of I_n^(m)");
  add_nm(witness);

  PointsArgs points_args;
  auto* points = app.add_subcommand("points", "fat-point interpolation on a point configuration");
  points->add_option("--file", points_args.file, "Point file")->check(CLI::ExistingFile);
  points->add_option("--fermat", points_args.fermat, "Use the n^2 + 3 Fermat points");
  points->add_option("--m", points_args.m, "Multiplicity")->capture_default_str();
  points->add_option("--t", points_args.t, "Report the dimension in this degree instead of alpha");
  points->add_option("--cap", points_args.cap, "Give up above this degree (default m * #points)");
  points->add_flag("--strict", points_args.strict, "Impose derivatives of every order < m");
  points->add_flag("--trace", points_args.trace, "Print one rank line per matrix to stderr");

  int max_m = 6, max_r = 4;
  auto* wald = app.add_subcommand("waldschmidt", "alpha(I^(m))/m samples and running infimum");
  wald->add_option("--n", n, "Fermat exponent")->required();
  wald->add_option("--max-m", max_m, "Largest m")->capture_default_str();

  auto* scan = app.add_subcommand("scan", "containment I^(m) in I^r over a grid");
  scan->add_option("--n", n, "Fermat exponent")->required();
  scan->add_option("--max-m", max_m, "Largest m")->capture_default_str();
  scan->add_option("--max-r", max_r, "Largest r")->capture_default_str();

  int base = 1, k = 1;
  auto* equal = app.add_subcommand("equal", "compare I_n^(m) with (I_n^(base))^k");
  add_nm(equal);
  equal->add_option("--base", base, "Symbolic power to raise")->required();
  equal->add_option("--k", k, "Exponent")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (table->parsed() && g.format == "text" && !app.get_option("--format")->count()) g.format = "csv";
    if (*alpha) return cmd_alpha(g, n, m, method, false);
    if (*invariants) return cmd_alpha(g, n, m, method, true);
    if (*table) {
      table_config.method = parse_alpha_method(method);
      return cmd_table(g, table_config);
    }
    if (*contain) return cmd_contain(g, n, m, r, a, !no_degree_criterion);
    if (*witness) return cmd_witness(g, n, m);
    if (*points) return cmd_points(g, points_args);
    if (*wald) return cmd_waldschmidt(g, n, max_m);
    if (*scan) return cmd_scan(g, n, max_m, max_r);
    if (*equal) return cmd_equal(g, n, m, base, k);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const OracleDisagreement& e) {
    std::cerr << "oracle disagreement: groebner alpha " << e.groebner() << ", interpolation alpha "
              << e.interpolation() << '\n'
              << e.what() << '\n';
    return kInternal;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const Timeout& e) {
    std::cerr << "timeout: " << e.what() << '\n';
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInternal;
  }
  return kUsage;
}
