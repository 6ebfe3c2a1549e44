#include "expander_forge/report.hpp"

#include <cstdio>

namespace expander_forge {

namespace {

Json edge_list(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

}  // namespace

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

Json to_json(const SpectralReport& r) {
  Json j;
  j["chi"] = r.chi;
  j["n"] = r.n;
  j["genus"] = r.genus;
  j["connected"] = r.connected;
  j["lambda"] = r.lambda;
  j["sigma"] = r.sigma;
  j["lambda1"] = r.lambda1;
  j["sigma1"] = r.sigma1 ? Json(*r.sigma1) : Json(nullptr);
  j["tol"] = r.tol;
  return j;
}

Json to_json(const CheegerCertificate& c) {
  Json j;
  j["h_num"] = c.h.get_num().get_str();
  j["h_den"] = c.h.get_den().get_str();
  j["omega"] = c.witness;
  j["boundary"] = c.boundary_size;
  j["exact"] = c.exact;
  return j;
}

Json to_json(const TreeSplit& s) {
  Json j;
  j["removed_edges"] = edge_list(s.removed_edges);
  j["side_a"] = s.side_a;
  j["side_b"] = s.side_b;
  return j;
}

Json to_json(const BalancedSubset& h) {
  Json j;
  j["h_set"] = h.h_set;
  j["boundary_edges"] = h.boundary_edges;
  j["boundary_vertices_inside"] = h.boundary_vertices_inside;
  return j;
}

Json to_json(const TestFunction& f) {
  Json j;
  Json values = Json::array();
  for (const auto& v : f.values) values.push_back(to_string(v));
  j["values"] = std::move(values);
  j["rayleigh"] = to_string(f.rayleigh);
  j["bound"] = to_string(f.bound);
  j["within_bound"] = f.within_bound;
  return j;
}

Json to_json(const MuPairTerm& t) {
  Json j;
  j["a"] = t.a;
  j["b"] = t.b;
  j["s"] = t.s;
  j["x"] = to_string(t.bound.x);
  j["y"] = to_string(t.bound.y);
  j["z"] = to_string(t.bound.z);
  j["product"] = to_string(t.bound.product);
  j["product_float"] = to_double(t.bound.product);
  return j;
}

Json to_json(const AuditReport& a) {
  Json j;
  j["estimate"] = a.estimate;
  j["ci"] = {a.ci_low, a.ci_high};
  j["bound_float"] = a.bound_float;
  j["pass"] = a.pass;
  j["bound"] = to_string(a.bound);
  j["chi"] = a.chi;
  j["n"] = a.n;
  j["a"] = a.a;
  j["b"] = a.b;
  j["s"] = a.s;
  j["trials"] = a.trials;
  j["seed"] = a.seed;
  j["subsets"] = to_string(a.cls);
  return j;
}

const char* to_string(SubsetClass cls) { return cls == SubsetClass::All ? "all" : "pendant-closed"; }

}  // namespace expander_forge
