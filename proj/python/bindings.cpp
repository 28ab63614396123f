#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "circulant/classifier.hpp"
#include "circulant/diophantine.hpp"
#include "circulant/dynamics.hpp"
#include "circulant/error.hpp"
#include "circulant/graph.hpp"
#include "circulant/serialization.hpp"
#include "circulant/spectral.hpp"

namespace py = pybind11;
using namespace circulant;

namespace {

PyObject* g_error_type = nullptr;

py::dict record_dict(const TransferRecord& r) {
  py::dict d;
  d["q"] = r.q ? py::object(py::int_(*r.q)) : py::object(py::none());
  d["t"] = r.t;
  d["amplitude"] = r.amplitude;
  d["fidelity"] = r.fidelity;
  return d;
}

TimeLattice lattice_from(const std::string& name) { return TimeLattice::of(parse_lattice(name)); }

VertexPair pair_from(const std::pair<Index, Index>& p) { return {p.first, p.second}; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Continuous-time quantum walks on circulant graphs";

  auto exc = py::exception<Error>(m, "CirculantError", PyExc_ValueError);
  g_error_type = exc.ptr();
  Py_INCREF(g_error_type);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::tuple args = py::make_tuple(std::string(to_string(e.code())), std::string(e.what()));
      PyErr_SetObject(g_error_type, args.ptr());
    }
  });

  py::class_<CirculantGraph>(m, "CirculantGraph")
      .def(py::init([](Index n, const std::vector<Index>& set) { return make_graph(n, set); }),
           py::arg("n"), py::arg("set"))
      .def_property_readonly("n", &CirculantGraph::order)
      .def_property_readonly("set", &CirculantGraph::connections)
      .def("contains", &CirculantGraph::contains)
      .def("is_cycle", &CirculantGraph::is_cycle)
      .def("to_json", [](const CirculantGraph& g) { return to_json(g).dump(); })
      .def("__eq__", [](const CirculantGraph& a, const CirculantGraph& b) { return a == b; })
      .def("__repr__", [](const CirculantGraph& g) {
        return "CirculantGraph(n=" + std::to_string(g.order()) + ", set=[" +
               format_connection_set(g.connections()) + "])";
      });

  m.def("make_graph", [](Index n, const std::vector<Index>& set) { return make_graph(n, set); },
        py::arg("n"), py::arg("set"));
  m.def("parse_connection_set", &parse_connection_set);
  m.def("graph_from_json", [](const std::string& text) { return graph_from_json(Json::parse(text)); });

  m.def("gcd_class", [](Index n, Index d) { return gcd_class(n, d).members; }, py::arg("n"),
        py::arg("d"));
  m.def("divisor_profile", [](const CirculantGraph& g) {
    py::list out;
    for (const auto& e : divisor_profile(g).entries) {
      py::dict d;
      d["d"] = e.divisor;
      d["intersection"] = e.intersection_size;
      d["class_size"] = e.class_size;
      d["status"] = std::string(to_string(e.status));
      out.append(d);
    }
    return out;
  });
  m.def("is_gcd_set", &is_gcd_set);
  m.def("symmetric_sets", &symmetric_sets);

  m.def("cycle_eigenvalue", &cycle_eigenvalue, py::arg("n"), py::arg("l"));
  m.def("distinct_positive_cycle_eigenvalues", [](Index n) {
    std::vector<std::pair<Index, double>> out;
    for (const auto& e : distinct_positive_cycle_eigenvalues(n)) out.emplace_back(e.index, e.value);
    return out;
  });

  py::class_<Spectrum>(m, "Spectrum")
      .def_readonly("n", &Spectrum::n)
      .def_readonly("values", &Spectrum::values)
      .def_readonly("integral", &Spectrum::integral);
  m.def("spectrum", &spectrum, py::arg("graph"), py::arg("integrality_tol") = 1e-9);
  m.def(
      "parity_conflicts",
      [](const Spectrum& s, double tol) {
        std::vector<std::tuple<Index, Index, double>> out;
        for (const auto& c : parity_conflicts(s, tol)) out.emplace_back(c.l, c.l_prime, c.value);
        return out;
      },
      py::arg("spectrum"), py::arg("tol") = 1e-10);

  m.def("transition_entry", &transition_entry, py::arg("graph"), py::arg("u"), py::arg("v"),
        py::arg("t"));
  m.def("fidelity", py::overload_cast<const CirculantGraph&, Index, Index, double>(&fidelity),
        py::arg("graph"), py::arg("u"), py::arg("v"), py::arg("t"));
  m.def("transition_matrix",
        py::overload_cast<const CirculantGraph&, double, Index>(&transition_matrix),
        py::arg("graph"), py::arg("t"), py::arg("cap") = kDefaultMatrixCap);
  m.def("is_periodic_at", &is_periodic_at, py::arg("graph"), py::arg("t"), py::arg("tol") = 1e-9);
  m.def("product_law_check", &product_law_check, py::arg("first"), py::arg("second"),
        py::arg("t"), py::arg("cap") = kDefaultMatrixCap);

  m.def(
      "scan_lattice",
      [](const CirculantGraph& g, std::pair<Index, Index> pair, const std::string& lattice,
         Index qmin, Index qmax, unsigned threads) {
        ScanOptions options;
        options.threads = threads;
        const auto records =
            scan_lattice(g, pair_from(pair), lattice_from(lattice), {qmin, qmax}, options);
        std::vector<Index> q;
        std::vector<double> t, re, im, fid;
        for (const auto& r : records) {
          q.push_back(*r.q);
          t.push_back(r.t);
          re.push_back(r.amplitude.real());
          im.push_back(r.amplitude.imag());
          fid.push_back(r.fidelity);
        }
        py::dict d;
        d["q"] = q;
        d["t"] = t;
        d["re"] = re;
        d["im"] = im;
        d["fidelity"] = fid;
        return d;
      },
      py::arg("graph"), py::arg("pair"), py::arg("lattice"), py::arg("qmin"), py::arg("qmax"),
      py::arg("threads") = 0);
  m.def(
      "best_time_on_lattice",
      [](const CirculantGraph& g, std::pair<Index, Index> pair, const std::string& lattice,
         Index qmin, Index qmax, unsigned threads) {
        ScanOptions options;
        options.threads = threads;
        return record_dict(
            best_time_on_lattice(g, pair_from(pair), lattice_from(lattice), {qmin, qmax}, options));
      },
      py::arg("graph"), py::arg("pair"), py::arg("lattice"), py::arg("qmin"), py::arg("qmax"),
      py::arg("threads") = 0);

  m.def(
      "kronecker_solve",
      [](std::vector<double> thetas, std::vector<double> alphas, double eps,
         Index q_max) -> py::object {
        const auto sol = kronecker_solve({std::move(thetas), std::move(alphas), eps}, q_max);
        if (!sol) return py::none();
        return py::make_tuple(sol->q, sol->residuals);
      },
      py::arg("thetas"), py::arg("alphas"), py::arg("eps"), py::arg("q_max"));
  m.def(
      "half_turn_targets",
      [](Index n, Index divisor) {
        const auto t = half_turn_targets(n, divisor);
        return py::make_tuple(t.thetas, t.alphas);
      },
      py::arg("n"), py::arg("divisor"));

  m.def(
      "classify",
      [](const CirculantGraph& g, double integrality_tol, double equality_tol) {
        const auto c = classify(g, {integrality_tol, equality_tol});
        return py::module_::import("json").attr("loads")(to_json(g, c).dump());
      },
      py::arg("graph"), py::arg("integrality_tol") = 1e-9, py::arg("equality_tol") = 1e-10);
  m.def("theorem_hypotheses", [](const CirculantGraph& g) {
    return py::module_::import("json").attr("loads")(to_json(theorem_hypotheses(g)).dump());
  });
  m.def(
      "verify_classification",
      [](const CirculantGraph& g, Index q_max) {
        VerificationBudget budget;
        budget.q_max = q_max;
        const auto ev = verify_classification(g, classify(g), budget);
        return py::module_::import("json").attr("loads")(to_json(ev).dump());
      },
      py::arg("graph"), py::arg("q_max") = 100000);
}
