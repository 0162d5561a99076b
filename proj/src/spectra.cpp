#include "ssg/spectra.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <deque>
#include <random>
#include <stdexcept>

namespace ssg {

namespace {

Eigen::MatrixXd normalized_adjacency(const RotationGraph& g) {
  const std::int64_t n = g.n_vertices();
  Eigen::MatrixXd m = Eigen::MatrixXd::Zero(n, n);
  for (std::int64_t v = 0; v < n; ++v)
    for (int p = 0; p < g.degree(); ++p) m(v, g.neighbor(v, p)) += 1.0;
  m /= static_cast<double>(g.degree());
  return m;
}

}  // namespace

std::vector<double> normalized_spectrum(const RotationGraph& g) {
  if (g.n_vertices() == 0) return {};
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(normalized_adjacency(g),
                                                        Eigen::EigenvaluesOnly);
  const auto& ev = solver.eigenvalues();
  return std::vector<double>(ev.data(), ev.data() + ev.size());
}

SpectralReport lambda_exact(const RotationGraph& g, const SpectralOptions& opts) {
  if (g.n_vertices() > opts.dense_threshold)
    throw std::invalid_argument("lambda_exact: graph exceeds dense threshold");
  if (g.degree() == 0) throw std::invalid_argument("lambda_exact: degree-0 graph");

  std::vector<double> ev = normalized_spectrum(g);  // ascending
  if (ev.empty() || std::abs(ev.back() - 1.0) > 1e-9)
    throw std::runtime_error("lambda_exact: no unit eigenvalue; adjacency is broken");
  ev.pop_back();  // remove one Perron eigenvalue

  SpectralReport r;
  r.method = "dense";
  r.lambda = 0.0;
  for (double mu : ev) r.lambda = std::max(r.lambda, std::abs(mu));
  return r;
}

SpectralReport lambda_iterative(const RotationGraph& g, const SpectralOptions& opts) {
  if (opts.tol <= 0) throw std::invalid_argument("lambda_iterative: tol must be positive");
  const std::int64_t n = g.n_vertices();
  const int d = g.degree();
  if (d == 0) throw std::invalid_argument("lambda_iterative: degree-0 graph");

  SpectralReport r;
  r.method = "iterative";
  if (n <= 1) return r;

  std::mt19937_64 rng(opts.seed);
  std::uniform_real_distribution<double> uni(-1.0, 1.0);
  std::vector<double> v(n), w(n);
  for (double& x : v) x = uni(rng);

  auto project_and_norm = [&](std::vector<double>& x) {
    double mean = 0.0;
    for (double xi : x) mean += xi;
    mean /= static_cast<double>(n);
    double norm2 = 0.0;
    for (double& xi : x) {
      xi -= mean;
      norm2 += xi * xi;
    }
    return std::sqrt(norm2);
  };

  double norm = project_and_norm(v);
  if (norm == 0.0) {  // all-ones start; reseed deterministically
    std::mt19937_64 rng2(opts.seed + 1);
    for (double& x : v) x = uni(rng2);
    norm = project_and_norm(v);
  }
  for (double& x : v) x /= norm;

  constexpr int kWindow = 10;
  std::deque<double> window;
  for (std::int64_t it = 1; it <= opts.max_iter; ++it) {
    for (std::int64_t u = 0; u < n; ++u) {
      double acc = 0.0;
      for (int p = 0; p < d; ++p) acc += v[g.neighbor(u, p)];
      w[u] = acc / d;
    }
    const double ratio = project_and_norm(w);
    r.iterations = it;
    if (ratio == 0.0) {  // operator is zero on the complement
      r.lambda = 0.0;
      r.residual = 0.0;
      return r;
    }
    for (std::int64_t u = 0; u < n; ++u) v[u] = w[u] / ratio;

    window.push_back(ratio);
    if (static_cast<int>(window.size()) > kWindow) window.pop_front();
    if (static_cast<int>(window.size()) == kWindow) {
      const auto [lo, hi] = std::minmax_element(window.begin(), window.end());
      r.residual = *hi - *lo;
      if (r.residual <= opts.tol) {
        double sum = 0.0;
        for (double x : window) sum += x;
        r.lambda = sum / kWindow;
        return r;
      }
    }
  }

  double sum = 0.0;
  for (double x : window) sum += x;
  r.lambda = window.empty() ? 0.0 : sum / static_cast<double>(window.size());
  r.converged = false;
  return r;
}

SpectralReport lambda_auto(const RotationGraph& g, const SpectralOptions& opts) {
  if (g.n_vertices() <= std::min(opts.auto_dense_limit, opts.dense_threshold))
    return lambda_exact(g, opts);
  return lambda_iterative(g, opts);
}

}  // namespace ssg
