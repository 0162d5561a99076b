#include "ssg/graph_io.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace ssg {

std::string export_edgelist(const RotationGraph& g) {
  // One record per port pair, taken from its smaller endpoint.
  std::vector<std::array<std::int64_t, 4>> records;
  for (std::int64_t v = 0; v < g.n_vertices(); ++v)
    for (int p = 0; p < g.degree(); ++p) {
      const auto [u, q] = g.rot(v, p);
      if (u < v || (u == v && q < p)) continue;
      records.push_back({v, u, p, q});
    }
  std::sort(records.begin(), records.end());

  std::ostringstream out;
  out << g.n_vertices() << ' ' << g.degree() << '\n';
  for (const auto& r : records) out << r[0] << ' ' << r[1] << ' ' << r[2] << ' ' << r[3] << '\n';
  return out.str();
}

RotationGraph import_edgelist(const std::string& text) {
  std::istringstream in(text);
  std::int64_t n = 0;
  int d = 0;
  if (!(in >> n >> d)) throw std::invalid_argument("import_edgelist: missing header");
  RotationGraph g(n, d);
  std::int64_t u, v;
  int pu, pv;
  while (in >> u >> v >> pu >> pv) {
    if (u < 0 || u >= n || v < 0 || v >= n || pu < 0 || pu >= d || pv < 0 || pv >= d)
      throw std::invalid_argument("import_edgelist: record out of range");
    g.connect(u, pu, v, pv);
  }
  g.validate();
  return g;
}

std::string export_dot(const RotationGraph& g) {
  std::ostringstream out;
  out << "graph rotation {\n";
  for (std::int64_t v = 0; v < g.n_vertices(); ++v) out << "  v" << v << ";\n";
  for (std::int64_t v = 0; v < g.n_vertices(); ++v)
    for (int p = 0; p < g.degree(); ++p) {
      const auto [u, q] = g.rot(v, p);
      if (u < v || (u == v && q < p)) continue;
      out << "  v" << v << " -- v" << u << " [label=\"" << p << '|' << q << "\"];\n";
    }
  out << "}\n";
  return out.str();
}

}  // namespace ssg
