#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "drinfeld/errors.hpp"
#include "drinfeld/json_io.hpp"
#include "drinfeld/slopes.hpp"

namespace py = pybind11;
using namespace drinfeld;

namespace {

struct Session {
  const Field* f;
  Fq shift = 0;
  LevelSpec spec;
  std::unique_ptr<QuotientData> qd;

  Session(int q, const std::string& level, int r) {
    int p = 2;
    while (q % p) ++p;
    int e = 0;
    for (int x = q; x > 1; x /= p) {
      if (x % p) throw ConfigError("q must be a prime power");
      ++e;
    }
    f = &Field::get(FieldSpec{p, e, {}});
    spec = parse_level(*f, level, r, &shift);
    qd = std::make_unique<QuotientData>(*f, spec);
  }
  Poly poly(const std::string& s) const {
    Poly x = parse_poly(*f, s);
    return shift ? shift_var(x, shift) : x;
  }
};

py::object to_py(const json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

std::vector<std::tuple<long long, long long, int>> slopes(int q, const std::string& level, int k, std::optional<int> chi) {
  Session s(q, level, 1);
  CocycleEngine eng(*s.qd, k);
  SlopeTable t = slope_decomposition(eng, chi);
  std::vector<std::tuple<long long, long long, int>> out;
  for (const Segment& seg : t.entries) out.emplace_back(seg.slope.num(), seg.slope.den(), seg.length);
  return out;
}

py::object hecke(int q, const std::string& level, int k, const std::string& Q) {
  Session s(q, level, 1);
  return to_py(to_json(hecke_matrix(*s.qd, k, s.poly(Q))));
}

py::object family(int k1, int k2, const std::string& a, const std::string& Q, int n, int nprime, int q,
                  const std::string& level) {
  Session s(q, level, 1);
  FamilyParams fp;
  fp.k1 = k1;
  fp.k2 = k2;
  size_t slash = a.find('/');
  fp.a = slash == std::string::npos ? Rational(std::stoll(a)) : Rational(std::stoll(a.substr(0, slash)), std::stoll(a.substr(slash + 1)));
  fp.q = s.poly(Q);
  fp.n = n;
  fp.nprime = nprime;
  return to_py(family_congruence(*s.qd, fp).to_json());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Slopes of Drinfeld cuspforms";
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  m.def("slopes", &slopes, py::arg("q") = 3, py::arg("level") = "gamma1:t", py::arg("k") = 2, py::arg("chi") = py::none(),
        "Slope table of U as (numerator, denominator, multiplicity) triples.");
  m.def("hecke_matrix", &hecke, py::arg("q") = 3, py::arg("level") = "gamma1:t", py::arg("k") = 2, py::arg("Q") = "t",
        "Hecke matrix with entries as ascending coefficient lists.");
  m.def("family_congruence", &family, py::arg("k1") = 10, py::arg("k2") = 19, py::arg("a") = "1", py::arg("Q") = "t",
        py::arg("n") = 2, py::arg("nprime") = 1, py::arg("q") = 3, py::arg("level") = "gamma1:t");
  m.def(
      "bound_C",
      [](long long p, int n, int d0, int eps0) {
        Rational c = bound_C(BoundParams{p, n, d0, eps0});
        return std::make_pair(c.num(), c.den());
      },
      py::arg("p"), py::arg("n"), py::arg("d0"), py::arg("eps0"));
  m.def(
      "bound_D",
      [](long long p, int n, int d0, int eps0) {
        SqrtBound d = bound_D(BoundParams{p, n, d0, eps0});
        return std::make_pair(d.str(), d.approx());
      },
      py::arg("p"), py::arg("n"), py::arg("d0"), py::arg("eps0"), "D as (exact text, float).");
}
