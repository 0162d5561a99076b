#include "ssg/products.hpp"

#include <stdexcept>

namespace ssg {

RotationGraph power(const RotationGraph& g, int k) {
  if (k < 1) throw std::invalid_argument("power: k must be >= 1");
  const std::int64_t n = g.n_vertices();
  const int d = g.degree();
  std::int64_t dk = 1;
  for (int i = 0; i < k; ++i) dk *= d;
  if (dk > (std::int64_t{1} << 30)) throw std::invalid_argument("power: degree overflow");

  RotationGraph out(n, static_cast<int>(dk));
  std::vector<int> path(k), back(k);
  for (std::int64_t v = 0; v < n; ++v) {
    for (std::int64_t port = 0; port < dk; ++port) {
      std::int64_t rest = port;
      for (int i = k - 1; i >= 0; --i) {
        path[i] = static_cast<int>(rest % d);
        rest /= d;
      }
      std::int64_t u = v;
      for (int i = 0; i < k; ++i) {
        const auto [nu, q] = g.rot(u, path[i]);
        u = nu;
        back[i] = q;
      }
      std::int64_t back_port = 0;
      for (int i = k - 1; i >= 0; --i) back_port = back_port * d + back[i];
      out.set_arc(v, static_cast<int>(port), u, static_cast<int>(back_port));
    }
  }
  return out;
}

RotationGraph zigzag(const RotationGraph& g, const RotationGraph& h) {
  if (h.n_vertices() != g.degree())
    throw std::invalid_argument("zigzag: h must have g.degree() vertices");
  const std::int64_t n = g.n_vertices();
  const int d = h.degree();

  RotationGraph out(h.n_vertices() * n, d * d);
  for (std::int64_t x = 0; x < h.n_vertices(); ++x)
    for (std::int64_t v = 0; v < n; ++v)
      for (int a = 0; a < d; ++a)
        for (int b = 0; b < d; ++b) {
          const auto [xz, a_back] = h.rot(x, a);          // zig
          const auto [u, yz] = g.rot(v, static_cast<int>(xz));  // g-step
          const auto [y, b_back] = h.rot(yz, b);          // zag
          out.set_arc(x * n + v, a * d + b, y * n + u, b_back * d + a_back);
        }
  return out;
}

RotationGraph replacement(const RotationGraph& g, const RotationGraph& h) {
  if (h.n_vertices() != g.degree())
    throw std::invalid_argument("replacement: h must have g.degree() vertices");
  const std::int64_t n = g.n_vertices();
  const int d = h.degree();

  RotationGraph out(h.n_vertices() * n, d + 1);
  for (std::int64_t x = 0; x < h.n_vertices(); ++x)
    for (std::int64_t v = 0; v < n; ++v) {
      for (int p = 0; p < d; ++p) {
        const auto [y, q] = h.rot(x, p);  // edge inside the copy of h at v
        out.set_arc(x * n + v, p, y * n + v, q);
      }
      const auto [u, y] = g.rot(v, static_cast<int>(x));  // edge of g between copies
      out.set_arc(x * n + v, d, y * n + u, d);
    }
  return out;
}

RotationGraph add_loops(const RotationGraph& g, int c) {
  if (c < 0) throw std::invalid_argument("add_loops: negative count");
  const std::int64_t n = g.n_vertices();
  const int d = g.degree();
  RotationGraph out(n, d + c);
  for (std::int64_t v = 0; v < n; ++v) {
    for (int p = 0; p < d; ++p) {
      const auto [u, q] = g.rot(v, p);
      out.set_arc(v, p, u, q);
    }
    for (int p = d; p < d + c; ++p) out.set_arc(v, p, v, p);
  }
  if (!g.port_names.empty()) {
    out.port_names = g.port_names;
    for (int p = d; p < d + c; ++p) out.port_names.push_back("loop" + std::to_string(p - d + 1));
  }
  return out;
}

}  // namespace ssg
