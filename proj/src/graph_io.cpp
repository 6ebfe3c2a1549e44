#include "expander_forge/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "expander_forge/errors.hpp"

namespace expander_forge {

namespace {

std::vector<int> rank_within_role(const MultiGraph& g) {
  std::vector<int> rank(static_cast<std::size_t>(g.vertex_count()));
  int interior = 0;
  int boundary = 0;
  for (int v = 0; v < g.vertex_count(); ++v) rank[v] = g.role(v) == Role::Interior ? ++interior : ++boundary;
  return rank;
}

int parse_count(const std::string& token, int line_no) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(token, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != token.size() || value < 0)
    throw ParseError("line " + std::to_string(line_no) + ": bad count '" + token + "'");
  return value;
}

}  // namespace

std::string vertex_name(const MultiGraph& g, int v) {
  int rank = 0;
  for (int u = 0; u <= v; ++u)
    if (g.role(u) == g.role(v)) ++rank;
  return (g.role(v) == Role::Interior ? "v" : "w") + std::to_string(rank);
}

void write_graph(std::ostream& out, const MultiGraph& g) {
  const auto rank = rank_within_role(g);
  auto name = [&](int v) { return (g.role(v) == Role::Interior ? "v" : "w") + std::to_string(rank[v]); };
  out << "G " << g.interior_count() << ' ' << g.boundary_count() << '\n';
  for (const Edge& e : g.edges()) out << "E " << name(e.u) << ' ' << name(e.v) << '\n';
}

std::string to_graph_text(const MultiGraph& g) {
  std::ostringstream os;
  write_graph(os, g);
  return os.str();
}

MultiGraph read_graph(std::istream& in) {
  std::string line;
  int line_no = 0;
  int chi = -1;
  int n = -1;
  std::vector<Edge> edges;

  auto resolve = [&](const std::string& tok) {
    if (tok.size() < 2 || (tok[0] != 'v' && tok[0] != 'w'))
      throw ParseError("line " + std::to_string(line_no) + ": bad vertex name '" + tok + "'");
    const int idx = parse_count(tok.substr(1), line_no);
    if (tok[0] == 'v') {
      if (idx < 1 || idx > chi) throw ParseError("line " + std::to_string(line_no) + ": no interior vertex " + tok);
      return idx - 1;
    }
    if (idx < 1 || idx > n) throw ParseError("line " + std::to_string(line_no) + ": no boundary vertex " + tok);
    return chi + idx - 1;
  };

  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tag;
    if (!(ls >> tag)) continue;
    std::string a, b, extra;
    if (!(ls >> a >> b) || (ls >> extra))
      throw ParseError("line " + std::to_string(line_no) + ": expected exactly two fields after '" + tag + "'");
    if (tag == "G") {
      if (chi >= 0) throw ParseError("line " + std::to_string(line_no) + ": duplicate header");
      chi = parse_count(a, line_no);
      n = parse_count(b, line_no);
    } else if (tag == "E") {
      if (chi < 0) throw ParseError("line " + std::to_string(line_no) + ": edge before header");
      edges.emplace_back(resolve(a), resolve(b));
    } else {
      throw ParseError("line " + std::to_string(line_no) + ": unknown record '" + tag + "'");
    }
  }
  if (chi < 0) throw ParseError("missing 'G <chi> <n>' header");

  std::vector<Role> roles(static_cast<std::size_t>(chi + n), Role::Boundary);
  std::fill(roles.begin(), roles.begin() + chi, Role::Interior);
  return MultiGraph(std::move(roles), std::move(edges));
}

MultiGraph parse_graph_text(const std::string& text) {
  std::istringstream is(text);
  return read_graph(is);
}

MultiGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file " + path.string());
  return read_graph(in);
}

void save_graph(const std::filesystem::path& path, const MultiGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_graph(out, g);
}

}  // namespace expander_forge
