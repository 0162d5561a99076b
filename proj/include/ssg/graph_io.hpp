#ifndef SSG_GRAPH_IO_HPP
#define SSG_GRAPH_IO_HPP

#include <string>

#include "ssg/rotation_graph.hpp"

namespace ssg {

// Edge list: header "N D", then one record "u v pu pv" per port pair with
// (u, pu) <= (v, pv), sorted; a loop on a single port prints "v v p p".
// Deterministic byte-for-byte for a fixed graph.
std::string export_edgelist(const RotationGraph& g);
RotationGraph import_edgelist(const std::string& text);

std::string export_dot(const RotationGraph& g);

}  // namespace ssg

#endif
