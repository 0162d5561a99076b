#include "ssg/verify.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ssg/metrics.hpp"
#include "ssg/products.hpp"

namespace ssg {

bool VerifyResult::all_levels_pass() const {
  for (const LevelReport& l : levels)
    if (l.theorem == LevelReport::Check::fail) return false;
  return true;
}

bool VerifyResult::connectivity_ok() const {
  if (!base_connected) return true;
  for (const LevelReport& l : levels)
    if (!l.connected) return false;
  return true;
}

namespace {

void fill_metrics(LevelReport& report, const RotationGraph& g, const VerifyOptions& opts) {
  report.vertices = g.n_vertices();
  report.connected = is_connected(g);
  if (!opts.with_metrics) return;
  report.metrics_present = true;
  report.spectral = lambda_auto(g, opts.spectral);
  report.diameter = diameter(g);
  report.girth = girth(g);
}

void check_budget(std::int64_t vertices, std::int64_t degree, std::int64_t budget) {
  if (vertices > budget / degree)
    throw std::invalid_argument("verify: level exceeds the port budget");
}

// Both products index the pair (x, v) as x * N + v, which is exactly the
// lexicographic rank of the word xv; the vertex identification is the
// identity on indices.
std::vector<std::int64_t> word_prepend_vertex_map(std::int64_t n_product) {
  std::vector<std::int64_t> map(n_product);
  std::iota(map.begin(), map.end(), std::int64_t{0});
  return map;
}

VerifyResult run_iteration(const WreathRecursion& rec, const RotationGraph& base, int k,
                           int padding, ProductKind kind, const std::vector<int>& port_map,
                           const VerifyOptions& opts) {
  if (opts.n_max < 1) throw std::invalid_argument("verify: n_max must be >= 1");
  VerifyResult result;
  result.base_connected = is_connected(base);
  if (opts.with_metrics) {
    result.base_lambda = lambda_auto(base, opts.spectral).lambda;
    result.base_diameter = diameter(base);
    result.base_girth = girth(base);
  }

  std::int64_t vertices = rec.alphabet_size();
  for (int n = 1; n <= opts.n_max; ++n) vertices *= rec.alphabet_size();
  check_budget(vertices, std::max(rec.n_generators(), base.degree() * base.degree()),
               opts.port_budget);

  RotationGraph level = action_graph(rec, 1);
  for (int n = 1; n <= opts.n_max + 1; ++n) {
    LevelReport report;
    report.n = n;
    fill_metrics(report, level, opts);

    if (n > 1) {
      // The previous level is rebuilt here on the product side; `level` was
      // produced by the recursion side.
      RotationGraph mid = power(action_graph(rec, n - 1), k);
      if (padding > 0) mid = add_loops(mid, padding);
      const RotationGraph product =
          kind == ProductKind::zigzag ? zigzag(mid, base) : replacement(mid, base);

      const auto diff =
          labeled_difference(level, product, word_prepend_vertex_map(level.n_vertices()), port_map);
      report.theorem = diff ? LevelReport::Check::fail : LevelReport::Check::pass;
      report.mismatch = diff;
    }

    result.levels.push_back(std::move(report));
    if (n <= opts.n_max) level = action_graph(rec, n + 1);
  }
  return result;
}

}  // namespace

VerifyResult verify_zz(const PresetP& preset, const VerifyOptions& opts) {
  preset.validate();
  const WreathRecursion rec = build_GP(preset);
  const RotationGraph base = base_graph_P(preset);

  // Generator s_(pi,tau) sits at pair position (i-1)*|P| + (j-1), and the
  // zig-zag port (zig a, zag b) at a*|P| + b; pi drives the zig and tau the
  // zag, so the port map sends each generator to its own index.
  const int m = static_cast<int>(preset.perms.size());
  const auto pairs = order_SP(preset.perms);
  std::vector<int> port_map(rec.n_generators());
  for (int g = 0; g < rec.n_generators(); ++g) {
    const auto [i, j] = pairs[g];
    port_map[g] = (i - 1) * m + (j - 1);
  }

  return run_iteration(rec, base, preset.k, preset.padding, ProductKind::zigzag, port_map, opts);
}

VerifyResult verify_rp(const PresetQ& preset, const VerifyOptions& opts) {
  preset.validate();
  const WreathRecursion rec = build_GQ(preset);
  const RotationGraph base = base_graph_Q(preset);

  // Generators q_1..q_d match the copy-internal ports 0..d-1 and s matches
  // the inter-copy port d.
  std::vector<int> port_map(rec.n_generators());
  std::iota(port_map.begin(), port_map.end(), 0);

  return run_iteration(rec, base, preset.k, 0, ProductKind::replacement, port_map, opts);
}

BoundsCheck verify_bounds(const std::vector<LevelReport>& levels, double base_lambda,
                          ProductKind kind, int k, int base_degree, double slack) {
  BoundsCheck check;
  check.base_lambda = base_lambda;
  const double base_term = base_lambda + base_lambda * base_lambda;
  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!levels[i].metrics_present || !levels[i + 1].metrics_present)
      throw std::invalid_argument("verify_bounds: levels carry no lambda values");
    const double prev = levels[i].spectral.lambda;
    const double next = levels[i + 1].spectral.lambda;
    double rhs = std::pow(prev, k) + base_term;
    if (kind == ProductKind::replacement) {
      const double p = static_cast<double>(base_degree) * base_degree /
                       std::pow(static_cast<double>(base_degree) + 1.0, 3);
      rhs = std::cbrt(p + (1.0 - p) * rhs);
    }
    check.rhs.push_back(rhs);
    if (next > rhs + slack && check.ok) {
      check.ok = false;
      check.first_violation = levels[i + 1].n;
    }
  }
  return check;
}

CorollaryCheck verify_corollary(const VerifyResult& result, ProductKind kind, int k) {
  CorollaryCheck check;
  const auto& levels = result.levels;

  for (const LevelReport& level : levels) {
    if (!level.metrics_present) throw std::invalid_argument("verify_corollary: metrics missing");
    const bool applies = kind == ProductKind::replacement || level.n >= 2;
    if (!applies) continue;
    bool ok;
    if (kind == ProductKind::zigzag) {
      ok = level.girth.has_value() && *level.girth <= 4;
    } else {
      // A forest base makes the claim vacuous.
      ok = !result.base_girth.has_value() ||
           (level.girth.has_value() && *level.girth <= *result.base_girth);
    }
    if (!ok && check.girth_ok) {
      check.girth_ok = false;
      check.first_girth_violation = level.n;
    }
  }

  for (size_t i = 0; i + 1 < levels.size(); ++i) {
    if (!levels[i].diameter || !levels[i + 1].diameter || !result.base_diameter) {
      ++check.skipped_infinite;
      continue;
    }
    const std::int64_t prev = *levels[i].diameter;
    const std::int64_t next = *levels[i + 1].diameter;
    const std::int64_t base = *result.base_diameter;
    const std::int64_t bound =
        kind == ProductKind::zigzag ? k * prev + 2 * base : k * prev * base;
    if (next > bound && check.diameter_ok) {
      check.diameter_ok = false;
      check.first_diameter_violation = levels[i + 1].n;
    }
  }

  check.ok = check.girth_ok && check.diameter_ok;
  return check;
}

ExpanderReport expander_report(const VerifyResult& result, ProductKind kind, int k) {
  ExpanderReport report;
  report.kind = kind;
  report.ceiling = kind == ProductKind::zigzag ? 0.4 : 0.1;

  const double eps = 1e-12;
  if (kind == ProductKind::zigzag) {
    report.ceiling_applicable = result.base_lambda <= 0.2 + eps;
  } else {
    const bool level1_small =
        !result.levels.empty() && result.levels.front().spectral.lambda <= 0.2 + eps;
    report.ceiling_applicable = result.base_lambda <= 0.2 + eps && level1_small && k >= 4;
  }

  for (const LevelReport& level : result.levels)
    report.ceiling_holds.push_back(level.spectral.lambda <= report.ceiling + eps);

  report.note = report.ceiling_applicable
                    ? "ceiling holds for the whole family by the spectral recursion; "
                      "checked here only at the computed levels"
                    : "not applicable: the base graph does not meet the small-lambda "
                      "preconditions";
  return report;
}

}  // namespace ssg
