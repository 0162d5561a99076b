#ifndef SSG_SPECTRA_HPP
#define SSG_SPECTRA_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ssg/rotation_graph.hpp"

namespace ssg {

/// lambda = second largest absolute eigenvalue of the normalized adjacency
/// matrix A/D (1 for disconnected graphs, < 1 for connected non-bipartite).
struct SpectralReport {
  double lambda = 0.0;
  std::string method;  // "dense" or "iterative"
  double residual = 0.0;
  std::int64_t iterations = 0;
  bool converged = true;
};

struct SpectralOptions {
  std::int64_t dense_threshold = 4096;
  double tol = 1e-10;
  std::int64_t max_iter = 200000;
  std::uint64_t seed = 0x5EED;
  // lambda_auto switches to the iterative path above this vertex count.
  std::int64_t auto_dense_limit = 1500;
};

// Full spectrum of A/D, ascending. Dense; meant for small graphs and tests.
std::vector<double> normalized_spectrum(const RotationGraph& g);

// Exact lambda by dense symmetric eigensolve. Removes exactly one eigenvalue
// within 1e-9 of 1 (the Perron value) and throws std::runtime_error if none
// is present. Throws std::invalid_argument above opts.dense_threshold.
SpectralReport lambda_exact(const RotationGraph& g, const SpectralOptions& opts = {});

// Power iteration on A/D restricted to the complement of the all-ones
// vector, re-projected every step. Tracks the norm-growth ratio, so +-
// paired eigenvalues are handled; the estimate is accepted once the ratio
// stabilizes within tol over a 10-iteration window. Non-convergence is
// reported via converged/residual, not an error.
SpectralReport lambda_iterative(const RotationGraph& g, const SpectralOptions& opts = {});

// Dense below opts.auto_dense_limit, iterative otherwise.
SpectralReport lambda_auto(const RotationGraph& g, const SpectralOptions& opts = {});

}  // namespace ssg

#endif
