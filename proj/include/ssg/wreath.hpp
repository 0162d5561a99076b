#ifndef SSG_WREATH_HPP
#define SSG_WREATH_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssg/perm.hpp"
#include "ssg/rotation_graph.hpp"
#include "ssg/word.hpp"

namespace ssg {

/// One generator rule s = root(children[1], ..., children[d]): the generator
/// maps xv to root(x) children[x](v).
struct Generator {
  std::string name;
  Perm root;                   // permutation of the alphabet {1..d}
  std::vector<Word> children;  // child word per input letter, size d
};

/// A finite system of wreath recursions defining a self-similar action on
/// words over {1..d}. Immutable after construction.
class WreathRecursion {
 public:
  // inv_table, when given, is an involution g on generator indices with
  // s_{g(i)} = s_i^-1; check_symmetric() tests that property.
  WreathRecursion(int alphabet_size, std::vector<Generator> generators,
                  std::optional<Perm> inv_table = std::nullopt);

  int alphabet_size() const { return d_; }
  int n_generators() const { return static_cast<int>(gens_.size()); }
  const Generator& generator(int i) const { return gens_[i - 1]; }  // 1-based
  const std::vector<Generator>& generators() const { return gens_; }
  const std::optional<Perm>& inv_table() const { return inv_; }

  // Applies one signed generator to letters[pos..]; +i acts as s_i, -i as
  // s_i^-1 (computed directly from the recursion, no inv_table needed).
  void apply_generator(int signed_index, std::vector<int>& letters, std::size_t pos = 0) const;

  // Image of a letter word (entries 1..d) under the group word g, applied
  // right to left. Length is preserved.
  std::vector<int> evaluate(const Word& g, std::vector<int> input) const;

 private:
  int d_;
  std::vector<Generator> gens_;
  std::optional<Perm> inv_;
};

// True iff s_{inv(i)} undoes s_i on every word of length <= n_max.
// Requires inv_table.
bool check_symmetric(const WreathRecursion& rec, int n_max);

// Graph of the action on words of length n: vertices are the d^n words in
// lexicographic order, port i-1 at v leads to s_i(v) with back-port
// inv_table(i)-1. Requires inv_table.
RotationGraph action_graph(const WreathRecursion& rec, int n);

// Lexicographic rank of a letter word (entries 1..d).
std::int64_t word_rank(const std::vector<int>& letters, int d);
std::vector<int> word_at_rank(std::int64_t rank, int d, int n);

/// Finite-state transducer form of a recursion whose children are single
/// letters or empty.
struct MealyAutomaton {
  struct Arrow {
    int to;      // state index
    int output;  // output letter, 1-based
  };
  std::vector<std::string> state_names;
  std::vector<std::vector<Arrow>> arrows;  // arrows[state][input-1]

  std::string to_dot() const;
};

// Fails with std::invalid_argument if some child word has length >= 2 (or a
// child names an inverse and no inv_table is available to resolve it).
MealyAutomaton automaton_export(const WreathRecursion& rec);

}  // namespace ssg

#endif
