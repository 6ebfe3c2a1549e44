#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "expander_forge/bounds.hpp"
#include "expander_forge/cheeger.hpp"
#include "expander_forge/construct.hpp"
#include "expander_forge/errors.hpp"
#include "expander_forge/graph_io.hpp"
#include "expander_forge/sampler.hpp"
#include "expander_forge/spectra.hpp"

namespace py = pybind11;
using namespace expander_forge;

namespace {

py::object to_py_int(const BigInt& z) { return py::module_::import("builtins").attr("int")(z.get_str()); }

py::object to_fraction(const Rational& q) {
  Rational c(q);
  c.canonicalize();
  return py::module_::import("fractions").attr("Fraction")(to_py_int(c.get_num()), to_py_int(c.get_den()));
}

Rational from_py_rational(const py::handle& x) {
  return parse_rational(py::str(x).cast<std::string>());
}

Role role_from(const std::string& s) {
  if (s == "interior") return Role::Interior;
  if (s == "boundary") return Role::Boundary;
  throw PreconditionError("role must be 'interior' or 'boundary'");
}

CheegerMethod method_from(const std::string& s) {
  if (s == "auto") return CheegerMethod::Auto;
  if (s == "subsets") return CheegerMethod::Subsets;
  if (s == "bonds") return CheegerMethod::Bonds;
  throw PreconditionError("method must be 'auto', 'subsets' or 'bonds'");
}

py::dict certificate(const CheegerCertificate& c) {
  py::dict d;
  d["h"] = to_fraction(c.h);
  d["witness"] = c.witness;
  d["boundary"] = c.boundary_size;
  d["exact"] = c.exact;
  return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Random degree-1/degree-3 graphs: sampling, spectra, Cheeger constants, bounds and constructions";

  auto base_error = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ParityError>(m, "ParityError", base_error.ptr());
  py::register_exception<PreconditionError>(m, "PreconditionError", base_error.ptr());
  py::register_exception<GuardExceeded>(m, "GuardExceeded", base_error.ptr());
  py::register_exception<CertificationFailure>(m, "CertificationFailure", base_error.ptr());
  py::register_exception<ParseError>(m, "ParseError", base_error.ptr());
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", base_error.ptr());

  py::class_<MultiGraph>(m, "Graph")
      .def(py::init([](const std::vector<std::string>& roles, const std::vector<std::pair<int, int>>& edges) {
             std::vector<Role> r;
             for (const auto& s : roles) r.push_back(role_from(s));
             std::vector<Edge> e;
             for (auto [u, v] : edges) e.emplace_back(u, v);
             return MultiGraph(std::move(r), std::move(e));
           }),
           py::arg("roles"), py::arg("edges"))
      .def_property_readonly("vertex_count", &MultiGraph::vertex_count)
      .def_property_readonly("edge_count", &MultiGraph::edge_count)
      .def_property_readonly("roles",
                             [](const MultiGraph& g) {
                               std::vector<std::string> out;
                               for (Role r : g.roles()) out.emplace_back(r == Role::Interior ? "interior" : "boundary");
                               return out;
                             })
      .def_property_readonly("edges",
                             [](const MultiGraph& g) {
                               std::vector<std::pair<int, int>> out;
                               for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
                               return out;
                             })
      .def_property_readonly("degrees", &MultiGraph::degrees)
      .def_property_readonly("interior_count", &MultiGraph::interior_count)
      .def_property_readonly("boundary_count", &MultiGraph::boundary_count)
      .def("is_connected", [](const MultiGraph& g) { return is_connected(g); })
      .def("genus", [](const MultiGraph& g) { return topology(g).genus; })
      .def("components", [](const MultiGraph& g) { return connected_components(g); })
      .def("to_text", [](const MultiGraph& g) { return to_graph_text(g); })
      .def_static("from_text", &parse_graph_text, py::arg("text"))
      .def("__eq__", [](const MultiGraph& a, const MultiGraph& b) { return a == b; })
      .def("__repr__", [](const MultiGraph& g) {
        return "<Graph chi=" + std::to_string(g.interior_count()) + " n=" + std::to_string(g.boundary_count()) +
               " edges=" + std::to_string(g.edge_count()) + ">";
      });

  m.def("rng_name", [] { return std::string(Rng::kRngName); });
  m.def("count_family", [](int chi, int n) { return to_py_int(count_family(chi, n)); }, py::arg("chi"), py::arg("n"));
  m.def(
      "sample_graph",
      [](int chi, int n, std::uint64_t seed, std::uint64_t trial) {
        return build_graph(sample_partition(SampleConfig{chi, n, trial + 1, seed}, trial));
      },
      py::arg("chi"), py::arg("n"), py::arg("seed") = 0, py::arg("trial") = 0);
  m.def(
      "sample_pairs",
      [](int chi, int n, std::uint64_t seed, std::uint64_t trial) {
        return sample_partition(SampleConfig{chi, n, trial + 1, seed}, trial).pairs();
      },
      py::arg("chi"), py::arg("n"), py::arg("seed") = 0, py::arg("trial") = 0);
  m.def(
      "estimate_connectivity",
      [](int chi, int n, std::uint64_t trials, std::uint64_t seed) {
        const auto e = estimate_connectivity({chi, n, trials, seed});
        py::dict d;
        d["connected"] = e.connected;
        d["trials"] = e.trials;
        d["fraction"] = e.fraction();
        d["ci"] = py::make_tuple(e.ci_low, e.ci_high);
        return d;
      },
      py::arg("chi"), py::arg("n"), py::arg("trials"), py::arg("seed") = 0);

  m.def(
      "laplacian_spectrum", [](const MultiGraph& g, double tol) { return laplacian_spectrum(g, tol).eigenvalues; },
      py::arg("graph"), py::arg("tol") = kDefaultTol);
  m.def(
      "lambda1", [](const MultiGraph& g, double tol) { return laplacian_spectrum(g, tol).lambda1; }, py::arg("graph"),
      py::arg("tol") = kDefaultTol);
  m.def(
      "steklov_spectrum", [](const MultiGraph& g, double tol) { return steklov_spectrum(g, tol).eigenvalues; },
      py::arg("graph"), py::arg("tol") = kDefaultTol);

  m.def(
      "cheeger_exact",
      [](const MultiGraph& g, const std::string& method, int guard) {
        CheegerOptions opts;
        opts.method = method_from(method);
        opts.guard = guard;
        return certificate(cheeger_exact(g, opts));
      },
      py::arg("graph"), py::arg("method") = "auto", py::arg("guard") = kDefaultCheegerGuard);
  m.def(
      "cheeger_upper", [](const MultiGraph& g, bool sweep) { return certificate(cheeger_upper(g, sweep)); },
      py::arg("graph"), py::arg("sweep") = true);

  m.def(
      "is_mu_pair",
      [](int a, int b, int s, int chi, int n, const py::object& mu) {
        return is_mu_pair(a, b, s, chi, n, from_py_rational(mu));
      },
      py::arg("a"), py::arg("b"), py::arg("s"), py::arg("chi"), py::arg("n"), py::arg("mu"));
  m.def(
      "xyz_bound",
      [](int chi, int n, int a, int b, int s) {
        const auto r = xyz_bound(chi, n, a, b, s);
        py::dict d;
        d["x"] = to_fraction(r.x);
        d["y"] = to_fraction(r.y);
        d["z"] = to_fraction(r.z);
        d["product"] = to_fraction(r.product);
        return d;
      },
      py::arg("chi"), py::arg("n"), py::arg("a"), py::arg("b"), py::arg("s"));
  m.def(
      "mu_pair_sum",
      [](int chi, int n, const py::object& mu) { return to_fraction(mu_pair_sum(chi, n, from_py_rational(mu))); },
      py::arg("chi"), py::arg("n"), py::arg("mu"));
  m.def(
      "count_subsets",
      [](const MultiGraph& g, int a, int b, int s, bool pendant_closed) {
        return to_py_int(count_Nabs(g, a, b, s, pendant_closed ? SubsetClass::PendantClosed : SubsetClass::All));
      },
      py::arg("graph"), py::arg("a"), py::arg("b"), py::arg("s"), py::arg("pendant_closed") = false);

  m.def(
      "two_tree_split",
      [](const MultiGraph& g) {
        const auto s = two_tree_split(g);
        std::vector<std::pair<int, int>> removed;
        for (const Edge& e : s.removed_edges) removed.emplace_back(e.u, e.v);
        py::dict d;
        d["removed_edges"] = removed;
        d["side_a"] = s.side_a;
        d["side_b"] = s.side_b;
        return d;
      },
      py::arg("graph"));
  m.def(
      "balanced_boundary_subset",
      [](const MultiGraph& g) {
        const auto h = balanced_boundary_subset(g);
        const auto f = steklov_test_function(g, h);
        py::dict d;
        d["h_set"] = h.h_set;
        d["boundary_edges"] = h.boundary_edges;
        d["boundary_vertices_inside"] = h.boundary_vertices_inside;
        d["rayleigh"] = to_fraction(f.rayleigh);
        d["bound"] = to_fraction(f.bound);
        return d;
      },
      py::arg("graph"));

  m.def("plant_trees", &plant_trees, py::arg("graph"), py::arg("k"));
  m.def("complete_graph_k4", &complete_graph_k4);
  m.def("petersen_graph", &petersen_graph);
  m.def(
      "planted_cheeger_bound",
      [](const py::object& h, int k) { return to_fraction(planted_cheeger_bound(from_py_rational(h), k)); },
      py::arg("h"), py::arg("k"));
  m.def(
      "expander_family",
      [](const py::object& theta, int genus, std::uint64_t seed, int guard) {
        const auto member =
            expander_family(FamilyPlan::from_theta(from_py_rational(theta)), genus, certified_base_provider(seed, guard));
        return member.graph;
      },
      py::arg("theta"), py::arg("genus"), py::arg("seed") = 0, py::arg("guard") = kDefaultCheegerGuard);
}
