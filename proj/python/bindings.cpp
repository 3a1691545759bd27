// Python bindings. Exact values cross the boundary as strings (or Python
// ints); reports come back as JSON text and are decoded in sumprod/__init__.py.

#include "sumprod/report.hpp"
#include "sumprod/solver.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace sumprod;

namespace {

// Accepts int or str.
Rat to_rat(const py::handle& v) { return parse_rat(py::str(v).cast<std::string>()); }
Int to_int(const py::handle& v) { return parse_int(py::str(v).cast<std::string>()); }

QuadElem to_quad(const py::handle& v) {
  if (py::isinstance<QuadElem>(v)) return v.cast<QuadElem>();
  return parse_quad(py::str(v).cast<std::string>());
}

SearchBounds bounds_of(const py::object& bound, const py::object& den_bound) {
  SearchBounds b;
  if (!bound.is_none()) b.num_bound = to_int(bound);
  if (!den_bound.is_none()) b.den_bound = to_int(den_bound);
  return b;
}

Json claims_of(const py::object& path) {
  return path.is_none() ? builtin_claims() : load_claims(path.cast<std::string>());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for r + s + t = rst = n over quadratic fields";

  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const std::domain_error& e) {
      PyErr_SetString(PyExc_ArithmeticError, e.what());
    }
  });

  py::class_<QuadElem>(m, "QuadElem")
      .def(py::init([](const py::object& a) { return to_quad(a); }), py::arg("value"))
      .def(py::init([](const py::object& a, const py::object& b, const py::object& d) {
             return QuadElem(to_rat(a), to_rat(b), to_int(d));
           }),
           py::arg("a"), py::arg("b"), py::arg("d"))
      .def_property_readonly("a", [](const QuadElem& x) { return to_string(x.a()); })
      .def_property_readonly("b", [](const QuadElem& x) { return to_string(x.b()); })
      .def_property_readonly("d", [](const QuadElem& x) { return to_string(x.d()); })
      .def("is_rational", &QuadElem::is_rational)
      .def("conj", [](const QuadElem& x) { return conj(x); })
      .def("norm", [](const QuadElem& x) { return to_string(norm(x)); })
      .def("trace", [](const QuadElem& x) { return to_string(trace(x)); })
      .def("is_ok_integer", [](const QuadElem& x) { return is_ok_integer(x); })
      .def("__add__", [](const QuadElem& x, const py::object& y) { return x + to_quad(y); })
      .def("__radd__", [](const QuadElem& x, const py::object& y) { return to_quad(y) + x; })
      .def("__sub__", [](const QuadElem& x, const py::object& y) { return x - to_quad(y); })
      .def("__rsub__", [](const QuadElem& x, const py::object& y) { return to_quad(y) - x; })
      .def("__mul__", [](const QuadElem& x, const py::object& y) { return x * to_quad(y); })
      .def("__rmul__", [](const QuadElem& x, const py::object& y) { return to_quad(y) * x; })
      .def("__truediv__", [](const QuadElem& x, const py::object& y) { return x / to_quad(y); })
      .def("__neg__", [](const QuadElem& x) { return -x; })
      .def("__eq__", [](const QuadElem& x, const py::object& y) { return x == to_quad(y); })
      .def("__hash__", [](const QuadElem& x) { return py::hash(py::str(to_wire(x))); })
      .def("__str__", [](const QuadElem& x) { return to_wire(x); })
      .def("__repr__", [](const QuadElem& x) { return "QuadElem('" + to_wire(x) + "')"; });

  m.def("squarefree_kernel", [](const py::object& v) {
    const SquarefreeKernel k = squarefree_kernel(to_int(v));
    return py::make_tuple(py::int_(py::str(to_string(k.d))), py::int_(py::str(to_string(k.f))));
  });

  m.def("verify_triple",
        [](const py::object& n, const py::object& r, const py::object& s, const py::object& t) {
          const Verdict v = verify_triple(to_int(n), to_quad(r), to_quad(s), to_quad(t));
          return py::make_tuple(v.ok, v.reason);
        },
        py::arg("n"), py::arg("r"), py::arg("s"), py::arg("t"));

  m.def("candidate_rs", [](const py::object& n) {
    std::vector<std::string> out;
    for (const Int& r : candidate_rs(to_int(n))) out.push_back(to_string(r));
    return out;
  });

  m.def("_solve_in_ok", [](const py::object& n) {
    Json out = Json::array();
    for (const SolutionRecord& rec : solve_in_ok(to_int(n))) out.push_back(to_json(rec));
    return out.dump();
  });

  m.def("_curve_report", [](const py::object& n, const py::object& claims) {
    return curve_report(to_int(n), claims_of(claims)).dump();
  }, py::arg("n"), py::arg("claims") = py::none());

  m.def("_torsion_report", [](const py::object& a, const py::object& b, const py::object& claims) {
    return torsion_report(to_rat(a), to_rat(b), claims_of(claims)).dump();
  }, py::arg("a"), py::arg("b"), py::arg("claims") = py::none());

  m.def("_search_report",
        [](const py::object& a, const py::object& b, const py::object& bound, const py::object& den_bound) {
          return search_report(to_rat(a), to_rat(b), bounds_of(bound, den_bound)).dump();
        },
        py::arg("a"), py::arg("b"), py::arg("bound") = py::none(), py::arg("den_bound") = py::none());

  m.def("_twist_report",
        [](const py::object& a, const py::object& b, const py::object& d, const py::object& bound,
           const py::object& den_bound, const py::object& claims) {
          return twist_report(to_rat(a), to_rat(b), to_int(d), bounds_of(bound, den_bound), claims_of(claims))
              .dump();
        },
        py::arg("a"), py::arg("b"), py::arg("d"), py::arg("bound") = py::none(),
        py::arg("den_bound") = py::none(), py::arg("claims") = py::none());

  m.def("_solve_report",
        [](const py::object& n, const py::object& bound, const py::object& den_bound,
           const py::object& scan_bound, const py::object& probe_bound, const py::object& claims) {
          SolveOptions o;
          o.bounds = bounds_of(bound, den_bound);
          if (!scan_bound.is_none()) o.scan_bound = to_int(scan_bound);
          if (!probe_bound.is_none()) o.probe_bound = to_int(probe_bound);
          return solve_report(to_int(n), o, claims_of(claims)).dump();
        },
        py::arg("n"), py::arg("bound") = py::none(), py::arg("den_bound") = py::none(),
        py::arg("scan_bound") = py::none(), py::arg("probe_bound") = py::none(), py::arg("claims") = py::none());

  m.def("_verify_report",
        [](const py::object& n, const py::object& r, const py::object& s, const py::object& t) {
          return verify_report(to_int(n), to_quad(r), to_quad(s), to_quad(t)).dump();
        },
        py::arg("n"), py::arg("r"), py::arg("s"), py::arg("t"));

  m.def("_full_report",
        [](const std::vector<py::object>& ns, const py::object& bound, const py::object& den_bound,
           const py::object& scan_bound, const py::object& claims) {
          SolveOptions o;
          o.bounds = bounds_of(bound, den_bound);
          if (!scan_bound.is_none()) o.scan_bound = to_int(scan_bound);
          std::vector<Int> values;
          for (const py::object& n : ns) values.push_back(to_int(n));
          return full_report(values, o, claims_of(claims)).dump();
        },
        py::arg("ns"), py::arg("bound") = py::none(), py::arg("den_bound") = py::none(),
        py::arg("scan_bound") = py::none(), py::arg("claims") = py::none());

  m.def("render_text", [](const std::string& report_json) { return render_text(Json::parse(report_json)); });
}
