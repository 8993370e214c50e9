#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projconn/connection.hpp"
#include "projconn/error.hpp"
#include "projconn/suites.hpp"

namespace py = pybind11;
using namespace projconn;

namespace {

std::vector<std::vector<std::string>> format_matrix(const RingMatrix& m) {
  std::vector<std::vector<std::string>> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(m.ctx()->format(m(i, j)));
  }
  return out;
}

RingMatrix parse_matrix(const RingPtr& ctx, const std::vector<std::vector<std::string>>& rows) {
  const std::size_t n = rows.size();
  std::vector<Polynomial> e;
  for (const auto& row : rows) {
    if (row.size() != n) throw InputError("matrix must be square");
    for (const auto& s : row) e.push_back(ctx->parse(s));
  }
  return RingMatrix(ctx, n, n, std::move(e));
}

class Ellipsoid {
 public:
  explicit Ellipsoid(std::vector<unsigned> exponents) : omega_(EllipsoidRing(std::move(exponents))) {}

  std::vector<unsigned> exponents() const { return omega_.ring().exponents(); }
  std::vector<std::string> variables() const { return omega_.ctx()->names(); }
  std::string reduce(const std::string& f) const {
    return omega_.ctx()->format(omega_.ctx()->reduce(omega_.ctx()->parse(f)));
  }
  bool equal(const std::string& f, const std::string& g) const {
    return omega_.ctx()->equal(omega_.ctx()->parse(f), omega_.ctx()->parse(g));
  }
  std::vector<std::vector<std::string>> fundamental_matrix() const { return format_matrix(omega_.M()); }
  std::vector<std::string> tangent_generators() const {
    std::vector<std::string> out;
    for (const auto& f : projconn::tangent_generators(omega_.ring())) out.push_back(f.to_string());
    return out;
  }
  std::vector<std::vector<std::string>> curvature(std::size_t a, std::size_t b, const std::string& method) const {
    auto fields = projconn::tangent_generators(omega_.ring());
    if (a >= fields.size() || b >= fields.size()) throw InputError("tangent generator index out of range");
    CurvatureMethod m;
    if (method == "formula") {
      m = CurvatureMethod::Formula;
    } else if (method == "definitional") {
      m = CurvatureMethod::Definitional;
    } else {
      throw InputError("method must be 'formula' or 'definitional'");
    }
    return format_matrix(projconn::curvature(omega_.module(), fields[a], fields[b], m));
  }
  py::dict charpoly3(const std::vector<std::vector<std::string>>& rows) const {
    auto c = projconn::charpoly3(parse_matrix(omega_.ctx(), rows));
    const auto& ctx = *omega_.ctx();
    py::dict d;
    d["trace"] = ctx.format(c.trace);
    d["p_a"] = ctx.format(c.p_a);
    d["minor_sum"] = ctx.format(c.minor_sum);
    d["det"] = ctx.format(c.det);
    return d;
  }
  std::string module_trace(const std::vector<std::vector<std::string>>& rows) const {
    return omega_.ctx()->format(projconn::module_trace(omega_.module(), parse_matrix(omega_.ctx(), rows)));
  }
  bool endo_equal(const std::vector<std::vector<std::string>>& a, const std::vector<std::vector<std::string>>& b) const {
    return projconn::endo_equal(omega_.module(), parse_matrix(omega_.ctx(), a), parse_matrix(omega_.ctx(), b));
  }

 private:
  KaehlerModule omega_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Connections, curvature and jets on ellipsoid rings";

  // InputError derives from std::invalid_argument and maps to ValueError.
  py::register_exception<ResourceError>(m, "ResourceError", PyExc_RuntimeError);

  py::class_<Ellipsoid>(m, "Ellipsoid")
      .def(py::init<std::vector<unsigned>>(), py::arg("exponents"))
      .def_property_readonly("exponents", &Ellipsoid::exponents)
      .def_property_readonly("variables", &Ellipsoid::variables)
      .def("reduce", &Ellipsoid::reduce, py::arg("f"), "Normal form of a polynomial in x1..xk")
      .def("equal", &Ellipsoid::equal, py::arg("f"), py::arg("g"))
      .def("fundamental_matrix", &Ellipsoid::fundamental_matrix)
      .def("tangent_generators", &Ellipsoid::tangent_generators)
      .def("curvature", &Ellipsoid::curvature, py::arg("a"), py::arg("b"), py::arg("method") = "formula",
           "Curvature of the tangent generator pair (a, b), 0-based")
      .def("charpoly3", &Ellipsoid::charpoly3, py::arg("matrix"))
      .def("module_trace", &Ellipsoid::module_trace, py::arg("matrix"))
      .def("endo_equal", &Ellipsoid::endo_equal, py::arg("a"), py::arg("b"));

  m.def("suite_names", &suite_names);
  m.def(
      "run_suite",
      [](const std::string& name, std::vector<unsigned> exponents, std::uint64_t seed, unsigned samples) {
        SuiteOptions o;
        o.exponents = std::move(exponents);
        o.seed = seed;
        o.samples = samples;
        py::gil_scoped_release release;
        return run_suite(name, o).to_json().dump();
      },
      py::arg("name"), py::arg("exponents"), py::arg("seed") = 0, py::arg("samples") = 20);
  m.def(
      "ring_report", [](const std::vector<unsigned>& e) { return ring_report(e).dump(); }, py::arg("exponents"));
  m.def(
      "jets_report",
      [](const std::vector<unsigned>& e, unsigned l, unsigned k, unsigned free_rank) {
        py::gil_scoped_release release;
        return jets_report(e, free_rank, l, k).dump();
      },
      py::arg("exponents"), py::arg("l"), py::arg("k"), py::arg("free_rank") = 0);
  m.def(
      "mcm_report", [](unsigned a, unsigned b, unsigned c, unsigned d) { return mcm_report(a, b, c, d).dump(); },
      py::arg("m"), py::arg("n"), py::arg("k"), py::arg("l"));
}
