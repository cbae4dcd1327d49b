#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "fermat/budget.hpp"
#include "fermat/interpolation.hpp"
#include "fermat/invariants.hpp"
#include "fermat/poly_text.hpp"
#include "fermat/report.hpp"
#include "fermat/table.hpp"

namespace py = pybind11;
using namespace fermat;

namespace {

std::vector<QPoly> parse_all(const std::vector<std::string>& texts) {
  std::vector<QPoly> out;
  for (const auto& t : texts) out.push_back(parse_qpoly(t, xyz_ring()));
  return out;
}

std::vector<std::string> texts(const std::vector<QPoly>& polys) {
  std::vector<std::string> out;
  for (const auto& p : polys) out.push_back(p.str());
  return out;
}

std::chrono::milliseconds millis(double seconds) {
  return std::chrono::milliseconds(static_cast<long long>(seconds * 1000));
}

FatPointScheme scheme_for(int n, int m, const std::optional<std::string>& path) {
  PointConfiguration config = path ? read_point_configuration_file(*path) : fermat_points(n);
  validate_configuration(config);
  return FatPointScheme{config, m};
}

py::dict cell_dict(const TableCell& c) {
  py::dict d;
  d["n"] = c.n;
  d["m"] = c.m;
  d["alpha"] = c.alpha ? py::object(py::int_(*c.alpha)) : py::object(py::none());
  d["predicted"] = c.predicted;
  d["match"] = c.match;
  d["exceptional"] = c.exceptional;
  d["method"] = to_string(c.method);
  d["status"] = to_string(c.status);
  d["seconds"] = c.seconds;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, mod) {
  mod.doc() = "Exact computations on symbolic powers of Fermat ideals";

  auto base = py::register_exception<Error>(mod, "FermatError", PyExc_RuntimeError);
  py::register_exception<ParseError>(mod, "ParseError", base.ptr());
  py::register_exception<Timeout>(mod, "Timeout", base.ptr());

  py::class_<InvariantReport>(mod, "InvariantReport")
      .def_readonly("n", &InvariantReport::n)
      .def_readonly("m", &InvariantReport::m)
      .def_readonly("alpha", &InvariantReport::alpha)
      .def_property_readonly("alpha_method", [](const InvariantReport& r) { return to_string(r.alpha_method); })
      .def_readonly("predicted", &InvariantReport::predicted)
      .def_readonly("omega", &InvariantReport::omega)
      .def_readonly("beta", &InvariantReport::beta)
      .def_readonly("minimal_generator_degrees", &InvariantReport::minimal_generator_degrees)
      .def("to_json", [](const InvariantReport& r) { return to_json(r); });

  py::class_<ContainmentCertificate>(mod, "ContainmentCertificate")
      .def_readonly("n", &ContainmentCertificate::n)
      .def_readonly("m", &ContainmentCertificate::m)
      .def_readonly("r", &ContainmentCertificate::r)
      .def_readonly("a", &ContainmentCertificate::a)
      .def_readonly("holds", &ContainmentCertificate::holds)
      .def_property_readonly("failing_generator",
                             [](const ContainmentCertificate& c) -> std::optional<std::string> {
                               if (!c.failing_generator) return std::nullopt;
                               return c.failing_generator->str();
                             })
      .def_readonly("degree_criterion_used", &ContainmentCertificate::degree_criterion_used)
      .def("to_json", [](const ContainmentCertificate& c) { return to_json(c); })
      .def("__bool__", [](const ContainmentCertificate& c) { return c.holds; });

  py::class_<WitnessCheck>(mod, "WitnessCheck")
      .def_readonly("n", &WitnessCheck::n)
      .def_readonly("m", &WitnessCheck::m)
      .def_property_readonly("witness", [](const WitnessCheck& w) { return w.witness.str(); })
      .def_readonly("degree", &WitnessCheck::degree)
      .def_readonly("expected_degree", &WitnessCheck::expected_degree)
      .def_readonly("in_K_power", &WitnessCheck::in_K_power)
      .def_readonly("in_coordinate_powers", &WitnessCheck::in_coordinate_powers)
      .def_property_readonly("verified", &WitnessCheck::verified)
      .def("to_json", [](const WitnessCheck& w) { return to_json(w); });

  py::class_<FermatWorkspace>(mod, "Workspace", "Memoised symbolic and ordinary powers of I_n for one n")
      .def(py::init<int>(), py::arg("n"))
      .def_property_readonly("n", &FermatWorkspace::n)
      .def_property_readonly("generators", [](FermatWorkspace& ws) { return texts(ws.data().ideal.generators()); })
      .def(
          "symbolic_power",
          [](FermatWorkspace& ws, int m) {
            py::gil_scoped_release release;
            return texts(ws.symbolic_power(m).groebner().polys);
          },
          py::arg("m"), "Reduced grevlex basis of I_n^(m)")
      .def(
          "alpha",
          [](FermatWorkspace& ws, int m, const std::string& method) {
            AlphaMethod am = parse_alpha_method(method);
            py::gil_scoped_release release;
            return compute_alpha(ws, m, am).alpha;
          },
          py::arg("m"), py::arg("method") = "groebner")
      .def(
          "hilbert_dim",
          [](FermatWorkspace& ws, int m, int t) {
            py::gil_scoped_release release;
            return hilbert_dim(ws.symbolic_power(m), t);
          },
          py::arg("m"), py::arg("t"))
      .def(
          "contains",
          [](FermatWorkspace& ws, int m, const std::string& poly) {
            QPoly p = parse_qpoly(poly, xyz_ring());
            py::gil_scoped_release release;
            return ws.symbolic_power(m).contains(p);
          },
          py::arg("m"), py::arg("poly"))
      .def(
          "report",
          [](FermatWorkspace& ws, int m, const std::string& method, bool with_omega_beta) {
            AlphaMethod am = parse_alpha_method(method);
            py::gil_scoped_release release;
            return invariant_report(ws, m, am, with_omega_beta);
          },
          py::arg("m"), py::arg("method") = "groebner", py::arg("with_omega_beta") = true)
      .def(
          "containment_check",
          [](FermatWorkspace& ws, int m, int r, int a, bool degree_criterion) {
            py::gil_scoped_release release;
            return containment_check(ws, m, r, a, ContainmentOptions{degree_criterion});
          },
          py::arg("m"), py::arg("r"), py::arg("a") = 0, py::arg("use_degree_criterion") = true);

  mod.def(
      "alpha",
      [](int n, int m, const std::string& method, double timeout) {
        AlphaMethod am = parse_alpha_method(method);
        py::gil_scoped_release release;
        budget::Scope scope(millis(timeout));
        FermatWorkspace ws(n);
        return compute_alpha(ws, m, am).alpha;
      },
      py::arg("n"), py::arg("m"), py::arg("method") = "groebner", py::arg("timeout") = 0.0,
      "Least degree of I_n^(m); method is groebner, interpolation or both");
  mod.def("predicted_alpha", &predicted_alpha, py::arg("n"), py::arg("m"));

  mod.def(
      "alpha_interp",
      [](int n, int m, std::optional<std::string> points, bool strict) {
        FatPointScheme scheme = scheme_for(n, m, points);
        py::gil_scoped_release release;
        return alpha_interp(scheme, InterpolationOptions{.all_orders = strict});
      },
      py::arg("n") = 0, py::arg("m") = 1, py::arg("points") = py::none(), py::arg("strict") = false,
      "alpha of the fat-point scheme on the Fermat points of n, or on a point file");
  mod.def(
      "fatpoint_dim",
      [](int n, int m, int t, std::optional<std::string> points, bool strict) {
        FatPointScheme scheme = scheme_for(n, m, points);
        py::gil_scoped_release release;
        return fatpoint_dim(scheme, t, InterpolationOptions{.all_orders = strict});
      },
      py::arg("n") = 0, py::arg("m") = 1, py::arg("t") = 0, py::arg("points") = py::none(),
      py::arg("strict") = false);

  mod.def(
      "containment_check",
      [](int n, int m, int r, int a, bool degree_criterion) {
        py::gil_scoped_release release;
        return containment_check(n, m, r, a, ContainmentOptions{degree_criterion});
      },
      py::arg("n"), py::arg("m"), py::arg("r"), py::arg("a") = 0, py::arg("use_degree_criterion") = true);

  mod.def(
      "witness",
      [](int n, int m) -> std::optional<std::string> {
        auto w = witness(fermat_ideal(n), m);
        if (!w) return std::nullopt;
        return w->str();
      },
      py::arg("n"), py::arg("m"));
  mod.def(
      "verify_witness",
      [](int n, int m) {
        py::gil_scoped_release release;
        return verify_witness(fermat_ideal(n), m);
      },
      py::arg("n"), py::arg("m"));

  mod.def(
      "waldschmidt_table",
      [](int n, int max_m) {
        WaldschmidtSample s = [&] {
          py::gil_scoped_release release;
          FermatWorkspace ws(n);
          return waldschmidt_table(ws, max_m);
        }();
        py::list samples;
        for (const auto& e : s.samples) samples.append(py::make_tuple(e.m, e.alpha, e.ratio.str()));
        py::dict d;
        d["n"] = s.n;
        d["samples"] = samples;
        d["inf_so_far"] = s.inf_so_far.str();
        d["paper_value"] = s.paper_value.str();
        d["consistent"] = s.consistent();
        return d;
      },
      py::arg("n"), py::arg("max_m"));
  mod.def(
      "resurgence_scan",
      [](int n, int max_m, int max_r) {
        ResurgenceScan s = [&] {
          py::gil_scoped_release release;
          FermatWorkspace ws(n);
          return resurgence_scan(ws, max_m, max_r);
        }();
        py::list entries;
        for (const auto& e : s.entries) entries.append(py::make_tuple(e.m, e.r, e.holds));
        py::dict d;
        d["n"] = s.n;
        d["entries"] = entries;
        d["max_failing_ratio"] = s.max_failing_ratio ? py::object(py::str(s.max_failing_ratio->str())) : py::none();
        d["paper_value"] = s.closed_form.str();
        return d;
      },
      py::arg("n"), py::arg("max_m"), py::arg("max_r"));

  mod.def(
      "run_table",
      [](int max_n, int max_m, int n_min, const std::string& method, double timeout, int workers) {
        TableConfig config;
        config.n_min = n_min;
        config.max_n = max_n;
        config.max_m = max_m;
        config.method = parse_alpha_method(method);
        config.timeout = millis(timeout);
        config.workers = workers;
        TableResult t = [&] {
          py::gil_scoped_release release;
          return run_table(config);
        }();
        py::list cells;
        for (const auto& c : t.cells) cells.append(cell_dict(c));
        return cells;
      },
      py::arg("max_n"), py::arg("max_m"), py::arg("n_min") = 2, py::arg("method") = "groebner",
      py::arg("timeout") = 300.0, py::arg("workers") = 1, "Grid of alpha values with closed-form predictions");

  mod.def(
      "groebner_basis",
      [](const std::vector<std::string>& gens, const std::string& order) {
        auto polys = parse_all(gens);
        MonomialOrder o = MonomialOrder::parse(order);
        py::gil_scoped_release release;
        return texts(buchberger(polys, o).polys);
      },
      py::arg("generators"), py::arg("order") = "grevlex", "Reduced basis of polynomials in x, y, z");
  mod.def(
      "normal_form",
      [](const std::string& poly, const std::vector<std::string>& gens) {
        QPoly p = parse_qpoly(poly, xyz_ring());
        auto polys = parse_all(gens);
        py::gil_scoped_release release;
        return normal_form(p, buchberger(polys, MonomialOrder::grevlex())).str();
      },
      py::arg("poly"), py::arg("generators"));
  mod.def(
      "ideal_equal",
      [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
        Ideal ia(xyz_ring(), parse_all(a)), ib(xyz_ring(), parse_all(b));
        py::gil_scoped_release release;
        return ideal_equal(ia, ib);
      },
      py::arg("a"), py::arg("b"));
}
