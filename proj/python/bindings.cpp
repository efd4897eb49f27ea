#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "knot/alexander.hpp"
#include "knot/bracket.hpp"
#include "knot/cli.hpp"
#include "knot/coloring.hpp"
#include "knot/error.hpp"
#include "knot/khovanov.hpp"
#include "knot/render.hpp"
#include "knot/states.hpp"
#include "knot/tangle.hpp"

#include <sstream>

namespace py = pybind11;
using namespace knot;

namespace {

py::int_ to_python(const Integer& v) {
  return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(v.str().c_str(), nullptr, 10)));
}

// [(quarter_exponent, coefficient), ...] by descending exponent, as in --json.
py::list terms(const LaurentPoly& p) {
  py::list out;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.append(py::make_tuple(it->first, to_python(it->second)));
  return out;
}

Field field_of(const std::string& name) {
  if (name == "Q") return Field::Rational;
  if (name == "Z2") return Field::Mod2;
  throw py::value_error("field must be Q or Z2");
}

}  // namespace

PYBIND11_MODULE(pyknot, m) {
  m.doc() = "Knot invariants from planar diagram codes";

  // The message starts with the error name, e.g. "SyntaxError: ...".
  py::register_exception<KnotError>(m, "KnotError");

  m.def("alexander", [](const std::string& pd) { return terms(alexander_poly(parse_pd(pd))); },
        "Canonical Alexander polynomial in x.");
  m.def("conway", [](const std::string& pd) { return terms(conway_poly(parse_pd(pd))); },
        "Conway polynomial in x from the state sum.");
  m.def("bracket", [](const std::string& pd) { return terms(bracket(parse_pd(pd))); });
  m.def("f_poly", [](const std::string& pd) { return terms(f_poly(parse_pd(pd))); });
  m.def("jones", [](const std::string& pd) { return terms(jones(parse_pd(pd))); });
  m.def("writhe", [](const std::string& pd) { return writhe(parse_pd(pd)); });
  m.def("determinant", [](const std::string& pd) { return to_python(knot_determinant(parse_pd(pd))); });
  m.def("state_count", [](const std::string& pd) {
    const LinkDiagram d = parse_pd(pd);
    return enumerate_states(d, default_star(d)).size();
  });
  m.def("fox_colorings", [](const std::string& pd, long long modulus) {
    return to_python(fox_colorings(parse_pd(pd), modulus).count);
  });
  m.def("tree_count", [](const std::string& pd) {
    const LinkDiagram d = parse_pd(pd);
    const Universe& u = d.universe();
    return to_python(spanning_tree_count(checkerboard_graph(u, checkerboard(u))));
  });
  m.def("khovanov", [](const std::string& pd, const std::string& field) {
    py::dict out;
    for (const auto& [ij, r] : homology(build_complex(parse_pd(pd), field_of(field))))
      out[py::make_tuple(ij.first, ij.second)] = r;
    return out;
  }, py::arg("pd"), py::arg("field") = "Q");
  m.def("tangle_bracket", [](const std::string& text) {
    const BracketVector br = tangle_bracket(parse_tangle(text));
    return py::make_tuple(terms(br.alpha), terms(br.beta));
  });
  m.def("hopf_pair", [](const std::string& t, const std::string& u) {
    return terms(bracket(hopf_pairing(parse_tangle(t), parse_tangle(u))));
  });
  m.def("conservation", [](const std::string& pattern) {
    const ConservationReport r = conservation_report(parse_pattern(pattern));
    return py::make_tuple(r.identity, r.mirror_inverse);
  }, "(identity holds, mirror recipe inverts Omega)");
  m.def("render", [](const std::string& pd, const std::string& invariant) {
    const LinkDiagram d = parse_pd(pd);
    if (invariant == "bracket") return render_poly(bracket(d), "A");
    if (invariant == "jones") return render_poly(jones(d), "t", TermOrder::Ascending);
    if (invariant == "alexander") return render_poly(alexander_poly(d), "x");
    throw py::value_error("invariant must be bracket, jones or alexander");
  });
  m.def("run", [](const std::vector<std::string>& args) {
    std::vector<std::string> argv{"knot"};
    argv.insert(argv.end(), args.begin(), args.end());
    std::ostringstream out, err;
    const int code = run(argv, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, "Run the command line; returns (exit code, stdout, stderr).");
}
