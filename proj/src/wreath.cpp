#include "ssg/wreath.hpp"

#include <sstream>
#include <stdexcept>

namespace ssg {

WreathRecursion::WreathRecursion(int alphabet_size, std::vector<Generator> generators,
                                 std::optional<Perm> inv_table)
    : d_(alphabet_size), gens_(std::move(generators)), inv_(std::move(inv_table)) {
  if (d_ < 1) throw std::invalid_argument("WreathRecursion: alphabet must be nonempty");
  const int m = static_cast<int>(gens_.size());
  for (const Generator& g : gens_) {
    if (g.root.degree() != d_)
      throw std::invalid_argument("WreathRecursion: root degree != alphabet size");
    if (static_cast<int>(g.children.size()) != d_)
      throw std::invalid_argument("WreathRecursion: generator needs one child per letter");
    for (const Word& w : g.children)
      for (int l : w.letters) {
        const int idx = l > 0 ? l : -l;
        if (idx < 1 || idx > m)
          throw std::invalid_argument("WreathRecursion: child word references unknown generator");
      }
  }
  if (inv_) {
    if (inv_->degree() != m)
      throw std::invalid_argument("WreathRecursion: inv_table degree != generator count");
    if (!(compose(*inv_, *inv_).is_identity()))
      throw std::invalid_argument("WreathRecursion: inv_table is not an involution");
  }
}

void WreathRecursion::apply_generator(int signed_index, std::vector<int>& letters,
                                      std::size_t pos) const {
  if (pos >= letters.size()) return;
  const int idx = signed_index > 0 ? signed_index : -signed_index;
  if (idx < 1 || idx > n_generators())
    throw std::invalid_argument("apply_generator: index out of range");
  const Generator& gen = gens_[idx - 1];
  const int x = letters[pos];
  if (x < 1 || x > d_) throw std::invalid_argument("apply_generator: letter out of range");

  if (signed_index > 0) {
    letters[pos] = gen.root(x);
    const Word& child = gen.children[x - 1];
    // Word t1 t2 ... tk acts right to left.
    for (auto it = child.letters.rbegin(); it != child.letters.rend(); ++it)
      apply_generator(*it, letters, pos + 1);
  } else {
    // s^-1(xv) = root^-1(x) child_{root^-1(x)}^-1(v); the formal inverse of
    // t1...tk applies t1^-1 first.
    const int y = gen.root.inverse()(x);
    letters[pos] = y;
    const Word& child = gen.children[y - 1];
    for (int l : child.letters) apply_generator(-l, letters, pos + 1);
  }
}

std::vector<int> WreathRecursion::evaluate(const Word& g, std::vector<int> input) const {
  for (int l : input)
    if (l < 1 || l > d_) throw std::invalid_argument("evaluate: letter out of range");
  for (auto it = g.letters.rbegin(); it != g.letters.rend(); ++it)
    apply_generator(*it, input, 0);
  return input;
}

bool check_symmetric(const WreathRecursion& rec, int n_max) {
  if (!rec.inv_table()) throw std::invalid_argument("check_symmetric: recursion has no inv_table");
  const Perm& inv = *rec.inv_table();
  const int d = rec.alphabet_size();
  for (int n = 1; n <= n_max; ++n) {
    std::int64_t total = 1;
    for (int i = 0; i < n; ++i) total *= d;
    std::vector<int> v(n), w(n);
    for (std::int64_t r = 0; r < total; ++r) {
      v = word_at_rank(r, d, n);
      for (int i = 1; i <= rec.n_generators(); ++i) {
        w = v;
        rec.apply_generator(i, w, 0);
        rec.apply_generator(inv(i), w, 0);
        if (w != v) return false;
      }
    }
  }
  return true;
}

std::int64_t word_rank(const std::vector<int>& letters, int d) {
  std::int64_t r = 0;
  for (int l : letters) r = r * d + (l - 1);
  return r;
}

std::vector<int> word_at_rank(std::int64_t rank, int d, int n) {
  std::vector<int> letters(n);
  for (int i = n - 1; i >= 0; --i) {
    letters[i] = static_cast<int>(rank % d) + 1;
    rank /= d;
  }
  return letters;
}

RotationGraph action_graph(const WreathRecursion& rec, int n) {
  if (n < 1) throw std::invalid_argument("action_graph: n must be >= 1");
  if (!rec.inv_table()) throw std::invalid_argument("action_graph: recursion has no inv_table");
  const Perm& inv = *rec.inv_table();
  const int d = rec.alphabet_size();
  const int m = rec.n_generators();

  std::int64_t total = 1;
  for (int i = 0; i < n; ++i) {
    if (total > (std::int64_t{1} << 56) / d) throw std::invalid_argument("action_graph: d^n overflows");
    total *= d;
  }

  RotationGraph graph(total, m);
  std::vector<int> w;
  for (std::int64_t r = 0; r < total; ++r) {
    for (int i = 1; i <= m; ++i) {
      w = word_at_rank(r, d, n);
      rec.apply_generator(i, w, 0);
      graph.set_arc(r, i - 1, word_rank(w, d), inv(i) - 1);
    }
  }
  for (const Generator& g : rec.generators()) graph.port_names.push_back(g.name);
  return graph;
}

MealyAutomaton automaton_export(const WreathRecursion& rec) {
  const int d = rec.alphabet_size();
  const int m = rec.n_generators();

  bool needs_identity = false;
  for (const Generator& g : rec.generators())
    for (const Word& w : g.children) {
      if (w.size() >= 2)
        throw std::invalid_argument("automaton_export: child words must be single letters");
      if (w.empty()) needs_identity = true;
    }

  MealyAutomaton a;
  for (const Generator& g : rec.generators()) a.state_names.push_back(g.name);
  const int e_state = m;  // appended only when used
  if (needs_identity) a.state_names.push_back("e");

  a.arrows.resize(a.state_names.size(), std::vector<MealyAutomaton::Arrow>(d));
  for (int i = 0; i < m; ++i) {
    const Generator& g = rec.generator(i + 1);
    for (int x = 1; x <= d; ++x) {
      const Word& child = g.children[x - 1];
      int to;
      if (child.empty()) {
        to = e_state;
      } else {
        int l = child.letters[0];
        if (l < 0) {
          if (!rec.inv_table())
            throw std::invalid_argument("automaton_export: inverse child needs inv_table");
          l = (*rec.inv_table())(-l);
        }
        to = l - 1;
      }
      a.arrows[i][x - 1] = {to, g.root(x)};
    }
  }
  if (needs_identity)
    for (int x = 1; x <= d; ++x) a.arrows[e_state][x - 1] = {e_state, x};
  return a;
}

std::string MealyAutomaton::to_dot() const {
  std::ostringstream out;
  out << "digraph mealy {\n";
  for (size_t i = 0; i < state_names.size(); ++i)
    out << "  n" << i << " [label=\"" << state_names[i] << "\"];\n";
  for (size_t i = 0; i < arrows.size(); ++i)
    for (size_t x = 0; x < arrows[i].size(); ++x)
      out << "  n" << i << " -> n" << arrows[i][x].to << " [label=\"" << (x + 1) << '|'
          << arrows[i][x].output << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace ssg
