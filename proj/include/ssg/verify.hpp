#ifndef SSG_VERIFY_HPP
#define SSG_VERIFY_HPP

#include <optional>
#include <string>
#include <vector>

#include "ssg/constructions.hpp"
#include "ssg/rotation_graph.hpp"
#include "ssg/spectra.hpp"

namespace ssg {

enum class ProductKind { zigzag, replacement };

struct LevelReport {
  int n = 0;
  std::int64_t vertices = 0;
  SpectralReport spectral;
  std::optional<std::int64_t> diameter;
  std::optional<std::int64_t> girth;
  bool connected = false;

  // Rotation-map equality of this level against the product built from the
  // previous level. Level 1 is the seed of the iteration and has no check.
  enum class Check { seed, pass, fail } theorem = Check::seed;
  std::optional<PortMismatch> mismatch;

  bool metrics_present = false;
};

struct VerifyOptions {
  int n_max = 3;
  bool with_metrics = true;  // lambda / diameter / girth per level
  std::int64_t port_budget = 50'000'000;
  SpectralOptions spectral;
};

struct VerifyResult {
  std::vector<LevelReport> levels;  // levels 1..n_max+1
  bool base_connected = false;
  double base_lambda = 0.0;  // only when with_metrics
  std::optional<std::int64_t> base_diameter;
  std::optional<std::int64_t> base_girth;

  bool all_levels_pass() const;
  // Theorem 2 clause: every level connected whenever the base graph is.
  bool connectivity_ok() const;
};

// Checks action_graph(rec, n+1) == zigzag(power(action_graph(rec, n), k), base)
// for n = 1..n_max, exactly, port for port. Padded presets get the padding
// loops appended to the powered graph before the product.
VerifyResult verify_zz(const PresetP& preset, const VerifyOptions& opts);

// Same with the replacement product and the Q construction.
VerifyResult verify_rp(const PresetQ& preset, const VerifyOptions& opts);

struct BoundsCheck {
  bool ok = true;
  int first_violation = 0;  // level index that broke the bound, 0 = none
  double base_lambda = 0.0;
  std::vector<double> rhs;  // bound value per checked transition
};

// Spectral recursion bounds, slack 1e-7:
//   zigzag:      lambda_{n+1} <= lambda_n^k + L + L^2
//   replacement: lambda_{n+1} <= (p + (1-p)(lambda_n^k + L + L^2))^(1/3),
// with L the base lambda and p = d^2/(d+1)^3 for a d-regular base.
BoundsCheck verify_bounds(const std::vector<LevelReport>& levels, double base_lambda,
                          ProductKind kind, int k, int base_degree, double slack = 1e-7);

struct CorollaryCheck {
  bool ok = true;
  bool girth_ok = true;
  bool diameter_ok = true;
  int first_girth_violation = 0;
  int first_diameter_violation = 0;
  int skipped_infinite = 0;  // transitions skipped because a diameter is infinite
};

// Diameter and girth consequences:
//   zigzag:      diam_{n+1} <= k*diam_n + 2*diam(base), girth_n <= 4 for n >= 2
//   replacement: diam_{n+1} <= k*diam_n*diam(base),     girth_n <= girth(base)
CorollaryCheck verify_corollary(const VerifyResult& result, ProductKind kind, int k);

struct ExpanderReport {
  ProductKind kind = ProductKind::zigzag;
  bool ceiling_applicable = false;
  double ceiling = 0.0;  // 2/5 for zigzag, 1/10 for replacement
  std::vector<bool> ceiling_holds;  // per level, parallel to result.levels
  std::string note;
};

// Flags the lambda ceiling at computed levels when the small-base
// preconditions hold (lambda(base) <= 1/5; for replacement additionally
// lambda(level 1) <= 1/5 and k >= 4). The family-level claim is only
// spot-checked at the levels actually built.
ExpanderReport expander_report(const VerifyResult& result, ProductKind kind, int k);

}  // namespace ssg

#endif
