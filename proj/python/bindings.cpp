#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knotpoly/knotpoly.hpp"

namespace py = pybind11;
using namespace knotpoly;

namespace {

py::object integer_to_py(const Integer& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

py::dict winding_dict(const WindingResidueCheck& c) {
  py::list coefficients;
  for (const auto& x : c.coefficients) coefficients.append(integer_to_py(x));
  py::dict d;
  d["violation"] = std::string(to_string(c.violation));
  d["exponents"] = c.exponents;
  d["coefficients"] = coefficients;
  d["pattern_genus"] = c.pattern_genus;
  d["companion_genus"] = c.companion_genus;
  d["product"] = to_string(c.product);
  return d;
}

std::string_view kind_name(Thinness::Kind k) {
  switch (k) {
    case Thinness::Kind::point: return "point";
    case Thinness::Kind::thin: return "thin";
    case Thinness::Kind::not_thin: return "not_thin";
  }
  return "?";
}

py::list points(const std::vector<LatticePoint>& v) {
  py::list out;
  for (const auto& p : v) out.append(py::make_tuple(p.a, p.b));
  return out;
}

}  // namespace

PYBIND11_MODULE(_knotpoly, m) {
  m.doc() = "Exact Alexander and A-polynomial computations for torus and satellite knots";

  // Kept alive for the lifetime of the interpreter.
  static PyObject* error_type =
      py::exception<Error>(m, "KnotpolyError", PyExc_ValueError).inc_ref().ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const std::string kind(to_string(e.kind()));
      py::object inst = py::handle(error_type)(kind + ": " + e.what());
      inst.attr("kind") = kind;
      inst.attr("detail") = std::string(e.what());
      PyErr_SetObject(error_type, inst.ptr());
    }
  });

  py::class_<TorusKnot>(m, "TorusKnot")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("a"), py::arg("b"))
      .def(py::init([](const std::string& s) { return TorusKnot::parse(s); }), py::arg("text"))
      .def_property_readonly("a", &TorusKnot::a)
      .def_property_readonly("b", &TorusKnot::b)
      .def_property_readonly("p", &TorusKnot::p)
      .def_property_readonly("is_positive", &TorusKnot::is_positive)
      .def("mirror", &TorusKnot::mirror)
      .def("__eq__", [](const TorusKnot& x, const TorusKnot& y) { return x == y; })
      .def("__hash__", [](const TorusKnot& k) { return py::hash(py::make_tuple(k.a(), k.b())); })
      .def("__str__", [](const TorusKnot& k) { return to_string(k); })
      .def("__repr__", [](const TorusKnot& k) { return "TorusKnot('" + to_string(k) + "')"; });
  py::implicitly_convertible<py::str, TorusKnot>();

  m.def("alexander", [](const TorusKnot& k) { return to_string(alexander(k)); }, py::arg("knot"),
        "Symmetrized Alexander polynomial as text, e.g. 't - 1 + t^-1'.");
  m.def("leading_form", [](const TorusKnot& k) { return to_string(leading_form(k)); },
        py::arg("knot"));
  m.def("genus", [](const TorusKnot& k) { return genus(k); }, py::arg("knot"));
  m.def("enhanced_apoly", [](const TorusKnot& k) { return to_string(enhanced_apoly(k)); },
        py::arg("knot"));

  m.def("symmetrize", [](const std::string& f) { return to_string(symmetrize(parse_laurent(f))); },
        py::arg("poly"));
  m.def("dilate",
        [](const std::string& f, std::int64_t w) { return to_string(dilate(parse_laurent(f), w)); },
        py::arg("poly"), py::arg("w"));
  m.def("exact_divide",
        [](const std::string& f, const std::string& g) {
          return to_string(exact_divide(parse_laurent(f), parse_laurent(g)));
        },
        py::arg("dividend"), py::arg("divisor"));

  m.def("satellite_alexander",
        [](const std::string& pattern, const std::string& companion, std::int64_t w) {
          return to_string(satellite_alexander(
              SatelliteSpec(parse_laurent(pattern), parse_laurent(companion), w)));
        },
        py::arg("pattern"), py::arg("companion"), py::arg("w"));

  m.def("lspace_admissible",
        [](const std::string& f) {
          const AdmissibilityReport r = lspace_admissible(parse_laurent(f));
          py::list witness;
          for (const auto& [e, c] : r.witness_coefficients)
            witness.append(py::make_tuple(e, integer_to_py(c)));
          py::dict d;
          d["verdict"] = std::string(to_string(r.verdict));
          d["witness_exponent"] =
              r.witness_exponent ? py::object(py::int_(*r.witness_exponent)) : py::none();
          d["witness_coefficients"] = witness;
          return d;
        },
        py::arg("poly"));

  m.def("check_winding_residue",
        [](std::int64_t a, std::int64_t b, std::int64_t w, const std::string& companion) {
          return winding_dict(check_winding_residue(a, b, w, parse_laurent(companion)));
        },
        py::arg("a"), py::arg("b"), py::arg("w"), py::arg("companion"));

  m.def("torus_pattern_obstruction",
        [](std::int64_t a, std::int64_t b, std::int64_t w, const std::string& companion) {
          const ObstructionResult r = torus_pattern_obstruction(a, b, w, parse_laurent(companion));
          py::dict d;
          d["verdict"] = std::string(to_string(r.verdict));
          d["check"] = r.check ? py::object(winding_dict(*r.check)) : py::none();
          d["reason"] = r.reason;
          return d;
        },
        py::arg("a"), py::arg("b"), py::arg("w"), py::arg("companion"));

  m.def("newton_polygon",
        [](const std::string& f) {
          const NewtonPolygon n = newton_polygon(parse_bipoly(f));
          py::list slopes;
          for (const auto& s : n.edge_slopes) slopes.append(to_string(s));
          py::dict d;
          d["points"] = points(n.lattice_points);
          d["hull"] = points(n.hull_vertices);
          d["edge_slopes"] = slopes;
          return d;
        },
        py::arg("poly"));

  m.def("thinness",
        [](const std::string& f) {
          const Thinness t = thinness(parse_bipoly(f));
          py::dict d;
          d["kind"] = std::string(kind_name(t.kind));
          d["slope"] = t.slope ? py::object(py::str(to_string(*t.slope))) : py::none();
          d["vertical"] = t.vertical;
          return d;
        },
        py::arg("poly"));

  m.def("detect",
        [](const std::string& f, std::optional<std::int64_t> degree) {
          const BiPoly poly = parse_bipoly(f);
          const DetectionResult r =
              degree ? detect_with_degree(poly, *degree) : detect_torus_from_apoly(poly);
          py::dict d;
          d["candidates"] = r.candidates;
          d["unique"] = r.unique;
          d["unknot"] = r.is_unknot;
          return d;
        },
        py::arg("poly"), py::arg("degree") = py::none());
  m.def("detectability", &detectability, py::arg("knot"));
  m.def("coprime_factorizations", &coprime_factorizations, py::arg("n"));

  m.def("choose_k", &choose_k, py::arg("m"), py::arg("p"), py::arg("d"));
  m.def("glue_verify",
        [](int case_id, std::uint64_t seed, std::uint64_t index, double tol) {
          const GlueInstance g = sample_glue_instance(case_id, seed, index);
          const Extension e = construct_extension(g);
          const VerifyResult v = verify_extension(g, e, tol);
          py::dict d;
          d["case"] = e.case_id;
          d["p"] = g.p();
          d["q"] = g.q();
          d["w"] = g.w();
          d["d"] = g.d();
          d["k"] = e.chosen_k ? py::object(py::int_(*e.chosen_k)) : py::none();
          d["central_twist"] = e.central_twist_used;
          d["residuals"] = std::vector<double>(v.residuals.begin(), v.residuals.end());
          d["ok"] = v.ok;
          return d;
        },
        py::arg("case"), py::arg("seed"), py::arg("index"), py::arg("tol") = kRepTolerance);
}
