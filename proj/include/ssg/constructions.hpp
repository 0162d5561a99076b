#ifndef SSG_CONSTRUCTIONS_HPP
#define SSG_CONSTRUCTIONS_HPP

#include <utility>
#include <vector>

#include "ssg/perm.hpp"
#include "ssg/rotation_graph.hpp"
#include "ssg/wreath.hpp"

namespace ssg {

/// Zig-zag preset: a symmetric list P of permutations of {1..d} with
/// d = |P|^(2k) + padding. The group has |P|^2 generators s_(pi,tau); when
/// padding > 0 the child lists are filled up with empty words.
struct PresetP {
  std::vector<Perm> perms;
  int k = 1;
  int padding = 0;

  int alphabet_size() const;
  void validate() const;  // throws std::invalid_argument
};

/// Replacement preset: a symmetric list Q of d permutations of
/// {1..(d+1)^k}. Generators are q_1..q_d acting on the first letter plus the
/// connecting generator s.
struct PresetQ {
  std::vector<Perm> perms;
  int k = 1;

  int alphabet_size() const;
  void validate() const;
};

// Generator order for the pairs s_(pi,tau): pair (i, j) of 1-based indices
// into P sits at position |P|*(i-1) + j.
std::vector<std::pair<int, int>> order_SP(const std::vector<Perm>& P);

// Involution on {1..|P|^(2k)} sending the index of a length-k word over the
// pairs to the index of its reversed formal inverse.
Perm gamma_P(const std::vector<Perm>& P, int k);

// Involution on {1..d} of Q-indices: q_i maps to the index of q_i^-1; when a
// (d+1)-st point is present (k = 1 alphabet) it is fixed.
Perm gamma_Q_indices(const std::vector<Perm>& Q);

// Involution on {1..(d+1)^k} by reversed formal inverse of length-k words
// over {q_1..q_d, s}, with s its own inverse.
Perm gamma_Q(const std::vector<Perm>& Q, int k);

WreathRecursion build_GP(const PresetP& preset);
WreathRecursion build_GQ(const PresetQ& preset);

// Graph of the action of a symmetric permutation list on {1..degree}:
// port p at x leads to ps[p](x), labeled at the far end by the index of
// ps[p]^-1. Fixed points of involutions come out as loop ports.
RotationGraph action_of_set(const std::vector<Perm>& ps);

RotationGraph base_graph_P(const PresetP& preset);
RotationGraph base_graph_Q(const PresetQ& preset);

// Length-k words over m symbols, numbered 1..m^k so that the first-applied
// (rightmost) symbol is the most significant digit: the walk realizing word
// number x follows the digits of x-1 in order. Symbols returned 1-based in
// reading order.
std::vector<int> word_symbols_at(std::int64_t number, int m, int k);
std::int64_t word_number_of(const std::vector<int>& symbols, int m);

}  // namespace ssg

#endif
