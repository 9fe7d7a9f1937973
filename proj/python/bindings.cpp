#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "k3bn/bn_core.hpp"
#include "k3bn/chow_scroll.hpp"
#include "k3bn/cli.hpp"
#include "k3bn/correspondence.hpp"
#include "k3bn/errors.hpp"
#include "k3bn/geography.hpp"
#include "k3bn/lattice.hpp"
#include "k3bn/verify.hpp"

namespace py = pybind11;
using namespace k3bn;

namespace {

py::dict surd_dict(const QuadraticSurd& s) {
  py::dict d;
  d["exact"] = s.to_string();
  d["p"] = s.p();
  d["D"] = s.radicand();
  d["q"] = s.q();
  d["approx"] = static_cast<double>(s.approx());
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Brill-Noether numerics for moduli of sheaves on K3 surfaces";

  auto arg_error = py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<HypothesisError>(m, "HypothesisError", PyExc_RuntimeError);
  (void)arg_error;

  m.def("rho", &rho, py::arg("r"), py::arg("g"), py::arg("d"));
  m.def("moduli_dim", &moduli_dim, py::arg("r"), py::arg("g"), py::arg("d"));
  m.def("vdim_bn", &vdim_bn, py::arg("k"), py::arg("r"), py::arg("g"), py::arg("d"));
  m.def(
      "classify",
      [](std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d) {
        return std::string(to_string(classify(k, r, g, d)));
      },
      py::arg("k"), py::arg("r"), py::arg("g"), py::arg("d"));
  m.def(
      "boundary_roots",
      [](std::int64_t g, std::int64_t beta) {
        const auto b = boundary_roots(g, beta);
        py::dict out;
        out["r0"] = surd_dict(b.r0);
        out["k0"] = surd_dict(b.k0);
        out["k1"] = surd_dict(b.k1);
        out["k2"] = surd_dict(b.k2);
        return out;
      },
      py::arg("g"), py::arg("beta"));
  m.def(
      "predict_status",
      [](std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d, bool pic_is_Za,
         bool aH_is_one, bool c1, bool c2, bool c3) {
        const auto p = predict_status(k, r, g, d, Hypotheses{pic_is_Za, aH_is_one, c1, c2, c3});
        py::dict out;
        out["status"] = std::string(to_string(p.status));
        out["region"] = std::string(to_string(p.region));
        out["dimension"] = p.dimension;
        out["conjecture_nonempty"] = p.conjecture_nonempty;
        return out;
      },
      py::arg("k"), py::arg("r"), py::arg("g"), py::arg("d"), py::kw_only(),
      py::arg("pic_is_Za") = false, py::arg("aH_is_one") = false, py::arg("c1") = false,
      py::arg("c2") = false, py::arg("c3") = false);
  m.def(
      "interpret_locus",
      [](std::int64_t k, std::int64_t r, std::int64_t g, std::int64_t d) {
        const auto li = interpret_locus(k, r, g, d);
        py::dict out;
        out["locus"] = li.to_string();
        out["ambient"] = li.ambient(g, d);
        out["unconstrained"] = li.unconstrained;
        return out;
      },
      py::arg("k"), py::arg("r"), py::arg("g"), py::arg("d"));

  m.def(
      "render_table",
      [](std::int64_t g, std::int64_t d, std::optional<std::int64_t> k_max,
         const std::string& format, const std::string& mode) {
        return render_table(build_table(g, d, k_max), format_from_string(format),
                            mode_from_string(mode));
      },
      py::arg("g"), py::arg("d"), py::arg("k_max") = py::none(), py::arg("format") = "text",
      py::arg("mode") = "values");
  m.def("render_geography_svg", &render_geography_svg, py::arg("g"), py::arg("d"));

  m.def(
      "maximal_stratum_target",
      [](std::int64_t k_prime, std::int64_t r_prime, std::int64_t g, std::int64_t d) {
        const auto t = maximal_stratum_target(k_prime, r_prime, g, d);
        return py::make_tuple(t.r, t.k, t.l);
      },
      py::arg("k_prime"), py::arg("r_prime"), py::arg("g"), py::arg("d"));
  m.def(
      "dimension_count_check",
      [](std::int64_t r_prime, std::int64_t k_prime, std::int64_t g, std::int64_t d) {
        const auto c = dimension_count_check(r_prime, k_prime, g, d);
        return py::make_tuple(c.equal, c.lhs, c.rhs);
      },
      py::arg("r_prime"), py::arg("k_prime"), py::arg("g"), py::arg("d"));
  m.def(
      "serre_dual_params",
      [](std::int64_t r_bar, std::int64_t g, std::int64_t d) {
        const auto s = serre_dual_params(r_bar, g, d);
        return py::make_tuple(s.r_bar, s.d);
      },
      py::arg("r_bar"), py::arg("g"), py::arg("d"));
  m.def("grassmannian_dim", &grassmannian_dim, py::arg("l"), py::arg("n"));

  m.def(
      "intersection_number",
      [](const std::string& a, const std::string& b, const std::string& c) {
        return scroll::intersection_number(scroll::parse_class(a), scroll::parse_class(b),
                                           scroll::parse_class(c));
      },
      py::arg("a"), py::arg("b"), py::arg("c"));
  m.def(
      "scroll_normal_form",
      [](const std::string& s) { return scroll::parse_class(s).to_string(); }, py::arg("cls"));

  m.def(
      "lattice_pair",
      [](const std::vector<std::vector<std::int64_t>>& gram, const std::vector<std::int64_t>& x,
         const std::vector<std::int64_t>& y) {
        return IntersectionLattice(gram).pair(NumClass{x}, NumClass{y});
      },
      py::arg("gram"), py::arg("x"), py::arg("y"));
  m.def(
      "genus_of_class",
      [](const std::vector<std::vector<std::int64_t>>& gram, const std::vector<std::int64_t>& a) {
        return genus_of_class(IntersectionLattice(gram), NumClass{a});
      },
      py::arg("gram"), py::arg("a"));

  m.def("verify_worked_examples", [] {
    const auto report = verify_worked_examples();
    return py::make_tuple(report.all_passed(), report.to_text());
  });
  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
