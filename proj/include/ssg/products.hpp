#ifndef SSG_PRODUCTS_HPP
#define SSG_PRODUCTS_HPP

#include "ssg/rotation_graph.hpp"

namespace ssg {

// k-th power: same vertices, degree D^k. Ports are k-tuples of g-ports in
// lexicographic order, first step most significant; an edge follows the tuple
// as a path and its back-port is the reversed tuple of back-ports.
RotationGraph power(const RotationGraph& g, int k);

// Zig-zag product. h must have g.degree() vertices. The result lives on pairs
// (x, v), x a vertex of h, v a vertex of g, indexed x * g.n_vertices() + v.
// Port (a, b) (index a * h.degree() + b) encodes zig a, g-step, zag b.
RotationGraph zigzag(const RotationGraph& g, const RotationGraph& h);

// Replacement product: every vertex of g is replaced by a copy of h. Ports
// 0..h.degree()-1 stay inside the copy; the last port follows g's edges.
RotationGraph replacement(const RotationGraph& g, const RotationGraph& h);

// Appends c loop ports (rotation fixed points) to every vertex.
RotationGraph add_loops(const RotationGraph& g, int c);

}  // namespace ssg

#endif
