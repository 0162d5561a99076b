#include "ssg/constructions.hpp"

#include <stdexcept>
#include <string>

namespace ssg {

namespace {

std::int64_t checked_pow(std::int64_t base, int exp) {
  std::int64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (r > (std::int64_t{1} << 40) / base) throw std::invalid_argument("preset: alphabet too large");
    r *= base;
  }
  return r;
}

// Extends p to a permutation of {1..degree} fixing the new points.
Perm extend(const Perm& p, int degree) {
  std::vector<int> images(degree);
  for (int x = 1; x <= p.degree(); ++x) images[x - 1] = p(x);
  for (int x = p.degree() + 1; x <= degree; ++x) images[x - 1] = x;
  return Perm::from_images(std::move(images));
}

}  // namespace

std::vector<int> word_symbols_at(std::int64_t number, int m, int k) {
  std::int64_t r = number - 1;
  std::vector<int> symbols(k);
  for (int j = 0; j < k; ++j) {
    symbols[j] = static_cast<int>(r % m) + 1;
    r /= m;
  }
  return symbols;
}

std::int64_t word_number_of(const std::vector<int>& symbols, int m) {
  std::int64_t r = 0;
  for (auto it = symbols.rbegin(); it != symbols.rend(); ++it) r = r * m + (*it - 1);
  return r + 1;
}

int PresetP::alphabet_size() const {
  return static_cast<int>(checked_pow(static_cast<std::int64_t>(perms.size()) * perms.size(), k) +
                          padding);
}

void PresetP::validate() const {
  if (perms.size() < 2) throw std::invalid_argument("PresetP: need at least two permutations");
  if (k < 1) throw std::invalid_argument("PresetP: k must be >= 1");
  if (padding < 0) throw std::invalid_argument("PresetP: negative padding");
  if (!is_symmetric_set(perms))
    throw std::invalid_argument("PresetP: set must be duplicate-free and closed under inverse");
  const int d = alphabet_size();
  for (const Perm& p : perms)
    if (p.degree() != d)
      throw std::invalid_argument("PresetP: permutations must act on " + std::to_string(d) +
                                  " points");
}

int PresetQ::alphabet_size() const {
  return static_cast<int>(checked_pow(static_cast<std::int64_t>(perms.size()) + 1, k));
}

void PresetQ::validate() const {
  if (perms.empty()) throw std::invalid_argument("PresetQ: need at least one permutation");
  if (k < 1) throw std::invalid_argument("PresetQ: k must be >= 1");
  if (!is_symmetric_set(perms))
    throw std::invalid_argument("PresetQ: set must be duplicate-free and closed under inverse");
  const int d = alphabet_size();
  for (const Perm& p : perms)
    if (p.degree() != d)
      throw std::invalid_argument("PresetQ: permutations must act on " + std::to_string(d) +
                                  " points");
}

std::vector<std::pair<int, int>> order_SP(const std::vector<Perm>& P) {
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(P.size() * P.size());
  for (int i = 1; i <= static_cast<int>(P.size()); ++i)
    for (int j = 1; j <= static_cast<int>(P.size()); ++j) pairs.emplace_back(i, j);
  return pairs;
}

namespace {

// Involution on pair indices: s_(pi,tau) -> s_(tau^-1,pi^-1).
Perm pair_involution(const std::vector<Perm>& P) {
  const int m = static_cast<int>(P.size());
  std::vector<int> images(m * m);
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= m; ++j) {
      const int inv_i = inverse_index(P, i - 1) + 1;
      const int inv_j = inverse_index(P, j - 1) + 1;
      images[(i - 1) * m + (j - 1)] = (inv_j - 1) * m + inv_i;
    }
  return Perm::from_images(std::move(images));
}

// Reversed formal inverse on length-k word numbers over m symbols, where
// symbol_inv gives the inverse of each symbol.
Perm reversed_inverse_involution(const Perm& symbol_inv, int m, int k) {
  const std::int64_t total = checked_pow(m, k);
  std::vector<int> images(total);
  for (std::int64_t x = 1; x <= total; ++x) {
    std::vector<int> symbols = word_symbols_at(x, m, k);
    std::vector<int> rev(k);
    for (int j = 0; j < k; ++j) rev[j] = symbol_inv(symbols[k - 1 - j]);
    images[x - 1] = static_cast<int>(word_number_of(rev, m));
  }
  return Perm::from_images(std::move(images));
}

}  // namespace

Perm gamma_P(const std::vector<Perm>& P, int k) {
  const int m2 = static_cast<int>(P.size() * P.size());
  return reversed_inverse_involution(pair_involution(P), m2, k);
}

Perm gamma_Q_indices(const std::vector<Perm>& Q) {
  const int d = static_cast<int>(Q.size());
  std::vector<int> images(d + 1);
  for (int i = 1; i <= d; ++i) images[i - 1] = inverse_index(Q, i - 1) + 1;
  images[d] = d + 1;  // the slot of s
  return Perm::from_images(std::move(images));
}

Perm gamma_Q(const std::vector<Perm>& Q, int k) {
  return reversed_inverse_involution(gamma_Q_indices(Q), static_cast<int>(Q.size()) + 1, k);
}

WreathRecursion build_GP(const PresetP& preset) {
  preset.validate();
  const std::vector<Perm>& P = preset.perms;
  const int m = static_cast<int>(P.size());
  const int n_gens = m * m;
  const int d = preset.alphabet_size();
  const std::int64_t n_words = checked_pow(n_gens, preset.k);  // d - padding

  const Perm gamma = extend(gamma_P(P, preset.k), d);
  const auto pairs = order_SP(P);

  // Child list (w_1, ..., w_{m^2k}, e, ..., e); entry y is the length-k word
  // with number y over the pair symbols.
  std::vector<Word> list(d);
  for (std::int64_t y = 1; y <= n_words; ++y) list[y - 1] = Word(word_symbols_at(y, n_gens, preset.k));

  std::vector<Generator> gens;
  gens.reserve(n_gens);
  for (int g = 0; g < n_gens; ++g) {
    const auto [i, j] = pairs[g];
    const Perm& pi = P[i - 1];
    const Perm& tau = P[j - 1];
    Generator gen;
    gen.name = "s" + std::to_string(g + 1);
    gen.root = compose(tau, compose(gamma, pi));
    gen.children.resize(d);
    for (int x = 1; x <= d; ++x) gen.children[x - 1] = list[pi(x) - 1];
    gens.push_back(std::move(gen));
  }
  return WreathRecursion(d, std::move(gens), pair_involution(P));
}

WreathRecursion build_GQ(const PresetQ& preset) {
  preset.validate();
  const std::vector<Perm>& Q = preset.perms;
  const int d = static_cast<int>(Q.size());
  const int a = preset.alphabet_size();

  std::vector<Generator> gens;
  gens.reserve(d + 1);
  for (int i = 1; i <= d; ++i) {
    Generator gen;
    gen.name = "q" + std::to_string(i);
    gen.root = Q[i - 1];
    gen.children.assign(a, Word{});
    gens.push_back(std::move(gen));
  }
  Generator s;
  s.name = "s";
  s.root = gamma_Q(Q, preset.k);
  s.children.resize(a);
  for (int x = 1; x <= a; ++x) s.children[x - 1] = Word(word_symbols_at(x, d + 1, preset.k));
  gens.push_back(std::move(s));

  return WreathRecursion(a, std::move(gens), gamma_Q_indices(Q));
}

RotationGraph action_of_set(const std::vector<Perm>& ps) {
  if (ps.empty()) throw std::invalid_argument("action_of_set: empty set");
  if (!is_symmetric_set(ps)) throw std::invalid_argument("action_of_set: set must be symmetric");
  const int n = ps[0].degree();
  RotationGraph g(n, static_cast<int>(ps.size()));
  for (int p = 0; p < static_cast<int>(ps.size()); ++p) {
    const int back = inverse_index(ps, p);
    for (int x = 1; x <= n; ++x) g.set_arc(x - 1, p, ps[p](x) - 1, back);
    g.port_names.push_back(ps[p].to_cycles());
  }
  return g;
}

RotationGraph base_graph_P(const PresetP& preset) {
  preset.validate();
  return action_of_set(preset.perms);
}

RotationGraph base_graph_Q(const PresetQ& preset) {
  preset.validate();
  return action_of_set(preset.perms);
}

}  // namespace ssg
