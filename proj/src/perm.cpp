#include "ssg/perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ssg {

Perm::Perm(int degree) {
  if (degree < 0) throw std::invalid_argument("Perm: negative degree");
  images_.resize(degree);
  std::iota(images_.begin(), images_.end(), 1);
}

Perm Perm::from_images(std::vector<int> images) {
  const int m = static_cast<int>(images.size());
  std::vector<bool> seen(m, false);
  for (int v : images) {
    if (v < 1 || v > m) throw std::invalid_argument("Perm: image out of range");
    if (seen[v - 1]) throw std::invalid_argument("Perm: not a bijection");
    seen[v - 1] = true;
  }
  Perm p;
  p.images_ = std::move(images);
  return p;
}

Perm Perm::parse_cycles(const std::string& text, int degree) {
  Perm p(degree);
  std::vector<bool> used(degree, false);

  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ','))
      ++i;
  };

  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '('");
    ++i;
    std::vector<int> cycle;
    skip_ws();
    while (i < text.size() && text[i] != ')') {
      if (!std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("parse_cycles: expected point or ')'");
      int v = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i])))
        v = v * 10 + (text[i++] - '0');
      if (v < 1 || v > degree)
        throw std::invalid_argument("parse_cycles: point out of range: " + std::to_string(v));
      if (used[v - 1])
        throw std::invalid_argument("parse_cycles: repeated point: " + std::to_string(v));
      used[v - 1] = true;
      cycle.push_back(v);
      skip_ws();
    }
    if (i >= text.size()) throw std::invalid_argument("parse_cycles: unterminated cycle");
    ++i;  // ')'
    for (size_t j = 0; j < cycle.size(); ++j)
      p.images_[cycle[j] - 1] = cycle[(j + 1) % cycle.size()];
    skip_ws();
  }
  return p;
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Perm Perm::inverse() const {
  std::vector<int> inv(images_.size());
  for (int i = 0; i < degree(); ++i) inv[images_[i] - 1] = i + 1;
  Perm p;
  p.images_ = std::move(inv);
  return p;
}

std::string Perm::to_cycles() const {
  std::ostringstream out;
  std::vector<bool> done(degree(), false);
  bool any = false;
  for (int start = 1; start <= degree(); ++start) {
    if (done[start - 1] || images_[start - 1] == start) continue;
    any = true;
    out << '(';
    int x = start;
    bool first = true;
    do {
      if (!first) out << ' ';
      out << x;
      done[x - 1] = true;
      x = images_[x - 1];
      first = false;
    } while (x != start);
    out << ')';
  }
  if (!any) return "()";
  return out.str();
}

Perm compose(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree()) throw std::invalid_argument("compose: degree mismatch");
  std::vector<int> images(a.degree());
  for (int x = 1; x <= a.degree(); ++x) images[x - 1] = a(b(x));
  return Perm::from_images(std::move(images));
}

bool is_symmetric_set(const std::vector<Perm>& ps) {
  for (size_t i = 0; i < ps.size(); ++i)
    for (size_t j = i + 1; j < ps.size(); ++j)
      if (ps[i] == ps[j]) return false;
  for (const Perm& p : ps) {
    const Perm inv = p.inverse();
    if (std::find(ps.begin(), ps.end(), inv) == ps.end()) return false;
  }
  return true;
}

int inverse_index(const std::vector<Perm>& ps, int i) {
  const Perm inv = ps[i].inverse();
  auto it = std::find(ps.begin(), ps.end(), inv);
  if (it == ps.end()) throw std::invalid_argument("inverse_index: set not symmetric");
  return static_cast<int>(it - ps.begin());
}

}  // namespace ssg
