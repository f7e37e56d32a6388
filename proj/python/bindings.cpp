#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "krstrata/alcove.hpp"
#include "krstrata/checks.hpp"
#include "krstrata/error.hpp"
#include "krstrata/local_model.hpp"
#include "krstrata/parallel.hpp"
#include "krstrata/prank.hpp"
#include "krstrata/report_io.hpp"
#include "krstrata/rpoly.hpp"

namespace py = pybind11;
using namespace krstrata;

namespace {

// BigInt crosses the boundary as a decimal string.
py::int_ to_python(const BigInt& v) { return py::int_(py::str(v.str())); }

py::list to_python(const IntPolynomial& p) {
  py::list out;
  for (const auto& c : p.coefficients()) out.append(to_python(c));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Kottwitz-Rapoport strata of the Siegel local model";

  static py::exception<Error> error_type(m, "KrstrataError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object args = py::make_tuple(std::string(to_string(e.kind())), std::string(e.what()));
      PyErr_SetObject(error_type.ptr(), args.ptr());
    }
  });

  py::class_<AffinePermutation>(m, "AffinePermutation")
      .def(py::init<std::vector<int>>(), py::arg("window"))
      .def_static("identity", &AffinePermutation::identity)
      .def_static("translation", [](const Coweight& lambda) { return AffinePermutation::translation(lambda); })
      .def_property_readonly("window", &AffinePermutation::window)
      .def_property_readonly("period", &AffinePermutation::period)
      .def("__call__", &AffinePermutation::operator())
      .def("inverse", &AffinePermutation::inverse)
      .def("finite_part", &AffinePermutation::finite_part)
      .def("translation_part", &AffinePermutation::translation_part)
      .def("val_det", &AffinePermutation::val_det)
      .def("is_translation", &AffinePermutation::is_translation)
      .def("act", [](const AffinePermutation& w, const Coweight& v) { return w.act(v); })
      .def("__mul__", [](const AffinePermutation& a, const AffinePermutation& b) { return compose(a, b); })
      .def("__eq__", [](const AffinePermutation& a, const AffinePermutation& b) { return a == b; })
      .def("__lt__", [](const AffinePermutation& a, const AffinePermutation& b) { return a < b; })
      .def("__hash__", [](const AffinePermutation& w) { return py::hash(py::tuple(py::cast(w.window()))); })
      .def("__repr__", [](const AffinePermutation& w) { return "AffinePermutation(" + w.to_string() + ")"; })
      .def("__str__", &AffinePermutation::to_string);
  m.def("compose", &compose);

  py::class_<AffineWeylGroup>(m, "AffineWeylGroup")
      .def_static("gl", &AffineWeylGroup::gl, py::arg("d"))
      .def_static("gsp", &AffineWeylGroup::gsp, py::arg("n"))
      .def_property_readonly("name", &AffineWeylGroup::name)
      .def_property_readonly("rank", &AffineWeylGroup::rank)
      .def_property_readonly("period", &AffineWeylGroup::period)
      .def("contains", &AffineWeylGroup::contains)
      .def("component", &AffineWeylGroup::component)
      .def("length", &AffineWeylGroup::length)
      .def("simple_reflections", &AffineWeylGroup::simple_reflections)
      .def("omega_generator", &AffineWeylGroup::omega_generator)
      .def("reduced_word", &AffineWeylGroup::reduced_word)
      .def("bruhat_leq", &AffineWeylGroup::bruhat_leq)
      .def("ball", &AffineWeylGroup::ball, py::arg("radius"), py::arg("component") = 0)
      .def("__repr__", [](const AffineWeylGroup& g) { return "AffineWeylGroup(" + g.name() + ")"; });

  m.def("vertex_displacement", &vertex_displacement);
  m.def("is_permissible_gl", &is_permissible_gl, py::arg("w"), py::arg("r"));
  m.def("is_permissible_lattice", &is_permissible_lattice, py::arg("w"), py::arg("r"));
  m.def("is_permissible_gsp", &is_permissible_gsp);
  m.def("weyl_orbit_mu", &weyl_orbit_mu);
  m.def("orbit_translations", &orbit_translations);
  m.def("enumerate_perm_gsp", [](int n) { return enumerate_perm_gsp(n).elements; }, py::arg("n"));
  m.def("enumerate_adm_gsp", [](int n) { return enumerate_adm_gsp(n).elements; }, py::arg("n"));

  m.def("p_rank", &p_rank);
  m.def("strata_report_json", [](int n) { return report_to_json(strata_report(n)); }, py::arg("n"));
  m.def("strata_report_csv", [](int n) { return report_to_csv(strata_report(n)); }, py::arg("n"));
  m.def("hasse_dot", [](int n) { return hasse_dot(strata_report(n)); }, py::arg("n"));
  m.def("density_check", &density_check);

  m.def("r_polynomial",
        [](const AffineWeylGroup& g, const AffinePermutation& x, const AffinePermutation& y) {
          return to_python(r_polynomial(g, x, y));
        });
  m.def("ss_trace",
        [](const AffinePermutation& w, long long q, int m_power) {
          const RPolynomialTable table(AffineWeylGroup::gsp(w.period() / 2));
          return to_python(ss_trace(table, w, q, m_power).value);
        },
        py::arg("w"), py::arg("q"), py::arg("m") = 1);
  m.def("hecke_verify", &hecke_verify, py::arg("group"), py::arg("length_bound"));

  py::class_<SubspaceChain>(m, "SubspaceChain")
      .def_readonly("n", &SubspaceChain::n)
      .def_readonly("q", &SubspaceChain::q)
      .def_property_readonly("spaces",
                             [](const SubspaceChain& c) {
                               std::vector<FqMatrix> out;
                               for (const auto& s : c.spaces) out.push_back(s.basis());
                               return out;
                             })
      .def("__eq__", [](const SubspaceChain& a, const SubspaceChain& b) { return a == b; });
  py::class_<IwahoriElement>(m, "IwahoriElement")
      .def_readonly("n", &IwahoriElement::n)
      .def_readonly("q", &IwahoriElement::q)
      .def_readonly("coefficients", &IwahoriElement::coefficients);

  m.def("enumerate_points", &enumerate_points, py::arg("n"), py::arg("q"));
  m.def("count_points", &count_points, py::arg("n"), py::arg("q"));
  m.def("stratified_count", &stratified_count, py::arg("n"), py::arg("q"));
  m.def("point_p_rank", &point_p_rank);
  m.def("orbit_rep", &orbit_rep, py::arg("w"), py::arg("q"));
  m.def("cell_of_point", &cell_of_point);
  m.def("random_iwahori", &random_iwahori, py::arg("n"), py::arg("q"), py::arg("seed"));
  m.def("identity_iwahori", &identity_iwahori, py::arg("n"), py::arg("q"));
  m.def("iwahori_act", &iwahori_act);
  m.def("point_count_json", [](int n, int q) { return point_count_to_json(point_count(n, q)); });

  m.def("check_names", &check_names);
  m.def(
      "run_check",
      [](const std::string& name, int n, int q, std::uint64_t seed) {
        CheckConfig config;
        config.n = n;
        config.q = q;
        config.seed = seed;
        const auto r = run_check(name, config);
        return py::make_tuple(to_string(r.status), r.detail);
      },
      py::arg("name"), py::arg("n") = 1, py::arg("q") = 2, py::arg("seed") = 1);
  m.def("set_thread_count", &set_thread_count);
  m.def("thread_count", &thread_count);
}
