#include "ssg/rotation_graph.hpp"

#include <stdexcept>

namespace ssg {

RotationGraph::RotationGraph(std::int64_t n_vertices, int degree) : n_(n_vertices), d_(degree) {
  if (n_vertices < 0 || degree < 0) throw std::invalid_argument("RotationGraph: negative size");
  rot_.assign(static_cast<std::size_t>(n_) * d_, -1);
}

void RotationGraph::set_arc(std::int64_t v, int p, std::int64_t u, int q) {
  rot_[static_cast<std::size_t>(v) * d_ + p] = u * d_ + q;
}

void RotationGraph::connect(std::int64_t v, int p, std::int64_t u, int q) {
  set_arc(v, p, u, q);
  set_arc(u, q, v, p);
}

bool RotationGraph::rot_total() const {
  for (std::int64_t e : rot_)
    if (e < 0) return false;
  return true;
}

bool RotationGraph::rot_involution() const {
  for (std::int64_t v = 0; v < n_; ++v)
    for (int p = 0; p < d_; ++p) {
      const std::int64_t e = rot_[static_cast<std::size_t>(v) * d_ + p];
      if (e < 0) return false;
      if (rot_[static_cast<std::size_t>(e)] != v * d_ + p) return false;
    }
  return true;
}

void RotationGraph::validate() const {
  if (!rot_total()) throw std::runtime_error("RotationGraph: rotation map not total");
  if (!rot_involution()) throw std::runtime_error("RotationGraph: rotation map not an involution");
}

std::optional<PortMismatch> labeled_difference(const RotationGraph& g, const RotationGraph& h,
                                               const std::vector<std::int64_t>& vertex_map,
                                               const std::vector<int>& port_map) {
  if (g.n_vertices() != h.n_vertices() || g.degree() != h.degree() ||
      static_cast<std::int64_t>(vertex_map.size()) != g.n_vertices() ||
      static_cast<int>(port_map.size()) != g.degree())
    throw std::invalid_argument("labeled_difference: incompatible sizes");

  // Both maps must be bijections.
  std::vector<char> vseen(g.n_vertices(), 0);
  for (std::int64_t v : vertex_map) {
    if (v < 0 || v >= g.n_vertices() || vseen[v]) throw std::invalid_argument("labeled_difference: vertex_map not a bijection");
    vseen[v] = 1;
  }
  std::vector<char> pseen(g.degree(), 0);
  for (int p : port_map) {
    if (p < 0 || p >= g.degree() || pseen[p]) throw std::invalid_argument("labeled_difference: port_map not a bijection");
    pseen[p] = 1;
  }

  for (std::int64_t v = 0; v < g.n_vertices(); ++v)
    for (int p = 0; p < g.degree(); ++p) {
      const auto [u, q] = g.rot(v, p);
      const auto [hu, hq] = h.rot(vertex_map[v], port_map[p]);
      if (hu != vertex_map[u] || hq != port_map[q]) return PortMismatch{v, p};
    }
  return std::nullopt;
}

bool equal_labeled(const RotationGraph& g, const RotationGraph& h,
                   const std::vector<std::int64_t>& vertex_map,
                   const std::vector<int>& port_map) {
  if (g.n_vertices() != h.n_vertices() || g.degree() != h.degree()) return false;
  return !labeled_difference(g, h, vertex_map, port_map).has_value();
}

std::vector<int> adjacency_row(const RotationGraph& g, std::int64_t v) {
  std::vector<int> counts(g.n_vertices(), 0);
  for (int p = 0; p < g.degree(); ++p) ++counts[g.neighbor(v, p)];
  return counts;
}

}  // namespace ssg
