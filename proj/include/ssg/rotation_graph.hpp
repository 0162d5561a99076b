#ifndef SSG_ROTATION_GRAPH_HPP
#define SSG_ROTATION_GRAPH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ssg {

/// D-regular multigraph on N vertices encoded by a rotation map: an involution
/// on (vertex, port) pairs. A fixed point of the map is a loop occupying a
/// single port; two ports of one vertex mapped to each other form a loop that
/// occupies both. Vertices and ports are 0-based here.
class RotationGraph {
 public:
  struct Endpoint {
    std::int64_t vertex;
    int port;
    friend bool operator==(const Endpoint&, const Endpoint&) = default;
  };

  RotationGraph() : n_(0), d_(0) {}
  RotationGraph(std::int64_t n_vertices, int degree);

  std::int64_t n_vertices() const { return n_; }
  int degree() const { return d_; }

  Endpoint rot(std::int64_t v, int p) const {
    const std::int64_t e = rot_[static_cast<std::size_t>(v) * d_ + p];
    return {e / d_, static_cast<int>(e % d_)};
  }
  std::int64_t neighbor(std::int64_t v, int p) const {
    return rot_[static_cast<std::size_t>(v) * d_ + p] / d_;
  }

  // Sets one direction of the map; use connect() for a whole edge.
  void set_arc(std::int64_t v, int p, std::int64_t u, int q);
  void connect(std::int64_t v, int p, std::int64_t u, int q);

  bool rot_total() const;        // every (vertex, port) assigned
  bool rot_involution() const;   // rot(rot(v,p)) == (v,p) everywhere
  void validate() const;         // throws std::runtime_error if either fails

  // Optional display labels, one per port (empty or size == degree).
  std::vector<std::string> port_names;

 private:
  std::int64_t n_;
  int d_;
  std::vector<std::int64_t> rot_;  // target encoded as u * degree + q; -1 unset
};

struct PortMismatch {
  std::int64_t vertex;  // in g's numbering
  int port;
};

// Rotation-map equality of g and h under a vertex bijection and a port
// bijection (g's numbering mapped into h's). Returns the first differing
// (vertex, port) of g, or nullopt when the labeled graphs are equal.
std::optional<PortMismatch> labeled_difference(const RotationGraph& g, const RotationGraph& h,
                                               const std::vector<std::int64_t>& vertex_map,
                                               const std::vector<int>& port_map);

bool equal_labeled(const RotationGraph& g, const RotationGraph& h,
                   const std::vector<std::int64_t>& vertex_map,
                   const std::vector<int>& port_map);

// Adjacency row of vertex v: counts[u] = number of ports of v leading to u.
// Row sums equal the degree; a 1-port loop contributes 1, a 2-port loop 2.
std::vector<int> adjacency_row(const RotationGraph& g, std::int64_t v);

}  // namespace ssg

#endif
