#ifndef SSG_METRICS_HPP
#define SSG_METRICS_HPP

#include <optional>

#include "ssg/rotation_graph.hpp"

namespace ssg {

bool is_connected(const RotationGraph& g);

// Max shortest-path distance over all vertex pairs; nullopt when disconnected.
std::optional<std::int64_t> diameter(const RotationGraph& g);

// Length of the shortest cycle: a loop counts 1, parallel edges between two
// distinct vertices count 2. nullopt for forests.
std::optional<std::int64_t> girth(const RotationGraph& g);

// True iff every pair of vertices is joined by a walk of even length
// (connected and non-bipartite, or a single vertex).
bool even_walk_between_all(const RotationGraph& g);

}  // namespace ssg

#endif
