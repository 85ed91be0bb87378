#include "entropic/search.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <random>

#include "entropic/binning.hpp"
#include "entropic/errors.hpp"

namespace entropic {
namespace {

constexpr double kCollapseDiameter = 1e-6;
constexpr int kStarts = 5;

// triangle-wave fold of the real line onto [0, 1]
double fold_unit(double u) {
  u = std::fmod(u, 2.0);
  if (u < 0.0) u += 2.0;
  return u <= 1.0 ? u : 2.0 - u;
}

struct NmRun {
  std::vector<double> best_point;
  double best_value = 0.0;
  bool collapsed = false;
};

// Nelder-Mead on [0,1]^d with fold reflection at the bounds. Stops when the
// simplex L-inf diameter drops below kCollapseDiameter or the evaluation
// budget runs out; the best vertex is monotone in the iteration count, so a
// larger budget can only improve the result.
NmRun nelder_mead(const std::function<double(const std::vector<double>&)>& fn,
                  std::vector<double> start, long long max_evals,
                  long long& evals_used) {
  const std::size_t d = start.size();
  std::vector<std::vector<double>> pts;
  std::vector<double> vals;
  long long used = 0;

  const auto eval = [&](const std::vector<double>& p) {
    ++used;
    return fn(p);
  };

  pts.push_back(start);
  for (std::size_t i = 0; i < d; ++i) {
    auto p = start;
    p[i] = fold_unit(p[i] + 0.1);
    pts.push_back(std::move(p));
  }
  for (const auto& p : pts) {
    if (used >= max_evals) break;
    vals.push_back(eval(p));
  }
  while (vals.size() < pts.size()) {
    // budget died during setup; pad so the argmin below stays well formed
    vals.push_back(std::numeric_limits<double>::infinity());
  }

  const auto order = [&] {
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        if (vals[j] < vals[i]) {
          std::swap(vals[i], vals[j]);
          std::swap(pts[i], pts[j]);
        }
      }
    }
  };
  const auto diameter = [&] {
    double dmax = 0.0;
    for (std::size_t i = 1; i < pts.size(); ++i) {
      for (std::size_t k = 0; k < d; ++k) {
        dmax = std::max(dmax, std::abs(pts[i][k] - pts[0][k]));
      }
    }
    return dmax;
  };
  const auto blend = [&](const std::vector<double>& c,
                         const std::vector<double>& x, double t) {
    std::vector<double> out(d);
    for (std::size_t k = 0; k < d; ++k) {
      out[k] = fold_unit(c[k] + t * (x[k] - c[k]));
    }
    return out;
  };

  NmRun run;
  while (true) {
    order();
    if (diameter() < kCollapseDiameter) {
      run.collapsed = true;
      break;
    }
    if (used + 2 > max_evals) break;

    std::vector<double> centroid(d, 0.0);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
      for (std::size_t k = 0; k < d; ++k) centroid[k] += pts[i][k];
    }
    for (auto& c : centroid) c /= static_cast<double>(pts.size() - 1);

    auto& worst = pts.back();
    auto& worst_val = vals.back();
    const auto reflected = blend(centroid, worst, -1.0);
    const double fr = eval(reflected);

    if (fr < vals.front()) {
      const auto expanded = blend(centroid, worst, -2.0);
      const double fe = eval(expanded);
      if (fe < fr) {
        worst = expanded;
        worst_val = fe;
      } else {
        worst = reflected;
        worst_val = fr;
      }
    } else if (fr < vals[vals.size() - 2]) {
      worst = reflected;
      worst_val = fr;
    } else {
      const bool outside = fr < worst_val;
      const auto contracted =
          outside ? blend(centroid, reflected, 0.5) : blend(centroid, worst, 0.5);
      const double fc = eval(contracted);
      if (fc < std::min(fr, worst_val)) {
        worst = contracted;
        worst_val = fc;
      } else {
        // shrink toward the best vertex
        for (std::size_t i = 1; i < pts.size(); ++i) {
          if (used >= max_evals) break;
          pts[i] = blend(pts.front(), pts[i], 0.5);
          vals[i] = eval(pts[i]);
        }
        if (used >= max_evals) break;
      }
    }
  }

  order();
  run.best_point = pts.front();
  run.best_value = vals.front();
  evals_used += used;
  return run;
}

}  // namespace

Optimum minimize_entropy_sum(const FamilySpec& family, double dx, double dp,
                             double alpha, const PhysicalConstants& consts,
                             long long budget, std::uint64_t seed) {
  if (budget < 50) throw DomainError("budget must be at least 50");
  if (!(dx > 0.0) || !(dp > 0.0)) {
    throw DomainError("bin widths must be positive");
  }
  if (!(alpha >= 1.0)) throw DomainError("alpha must be at least 1");
  const EntropyOrderPair pair = EntropyOrderPair::from_alpha(alpha);

  std::vector<ParameterRange> box;
  if (family.x0_range) {
    if (!(family.x0_range->lo <= family.x0_range->hi)) {
      throw DomainError("x0 range is empty");
    }
    box.push_back(*family.x0_range);
  }
  if (family.sigma_range) {
    if (!(family.sigma_range->lo <= family.sigma_range->hi)) {
      throw DomainError("sigma range is empty");
    }
    if (!(family.sigma_range->lo >= 1e-3 * dx)) {
      throw DomainError("sigma range must stay above 1e-3 bin widths");
    }
    box.push_back(*family.sigma_range);
  }
  const std::size_t d = box.size();

  const auto to_params = [&](const std::vector<double>& unit) {
    std::vector<double> actual(d);
    for (std::size_t k = 0; k < d; ++k) {
      actual[k] = box[k].lo + unit[k] * (box[k].hi - box[k].lo);
    }
    return actual;
  };
  const auto objective = [&](const std::vector<double>& unit) {
    const auto actual = to_params(unit);
    std::size_t next = 0;
    const double x0 = family.x0_range ? actual[next++] : family.x0;
    const double sigma = family.sigma_range ? actual[next++] : family.sigma;
    const GaussianState state(x0, family.p0, sigma);
    const auto pv_p = bin_probabilities(state, Space::momentum,
                                        UniformBins{dp, 0.0}, consts);
    const auto pv_x = bin_probabilities(state, Space::position,
                                        UniformBins{dx, 0.0}, consts);
    return renyi(pv_p, pair.alpha()) + renyi(pv_x, pair.beta());
  };

  Optimum result;
  result.bound_value = renyi_bound(pair, dx, dp, consts);

  if (d == 0) {
    result.best_value = objective({});
    result.evaluations = 1;
    result.converged = true;
    result.gap = result.best_value - result.bound_value;
    return result;
  }

  // start 0 at the box center, the rest seeded; mt19937_64 keeps the stream
  // identical across platforms
  std::mt19937_64 rng(seed);
  std::vector<std::vector<double>> starts;
  starts.emplace_back(d, 0.5);
  for (int s = 1; s < kStarts; ++s) {
    std::vector<double> pt(d);
    for (auto& u : pt) {
      u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
    }
    starts.push_back(std::move(pt));
  }

  const long long per_start = budget / kStarts;
  long long evals = 0;
  bool all_collapsed = true;
  bool have_best = false;
  NmRun best;
  for (const auto& start : starts) {
    const NmRun run = nelder_mead(objective, start, per_start, evals);
    all_collapsed = all_collapsed && run.collapsed;
    if (!have_best || run.best_value < best.best_value) {
      best = run;
      have_best = true;
    }
  }

  result.best_parameters = to_params(best.best_point);
  result.best_value = best.best_value;
  result.gap = result.best_value - result.bound_value;
  result.evaluations = evals;
  result.converged = all_collapsed;
  return result;
}

}  // namespace entropic
