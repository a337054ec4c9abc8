#include "imaginarity/nelder_mead.hpp"

#include <algorithm>
#include <numeric>

namespace imag {

NelderMeadResult nelder_mead_minimize(const std::function<double(std::span<const double>)>& f,
                                      std::vector<double> x0, const NelderMeadOptions& opts) {
  const std::size_t n = x0.size();
  if (n == 0) return {x0, f(x0), 0, true};
  std::vector<std::vector<double>> pts(n + 1, x0);
  for (std::size_t i = 0; i < n; ++i) pts[i + 1][i] += opts.initial_step;
  std::vector<double> vals(n + 1);
  for (std::size_t i = 0; i <= n; ++i) vals[i] = f(pts[i]);

  std::vector<std::size_t> order(n + 1);
  std::vector<double> centroid(n), trial(n), trial2(n);
  int iter = 0;
  bool converged = false;

  auto blend = [&](std::vector<double>& out, double t) {
    // out = centroid + t (centroid - worst)
    const auto& worst = pts[order[n]];
    for (std::size_t j = 0; j < n; ++j) out[j] = centroid[j] + t * (centroid[j] - worst[j]);
  };

  for (; iter < opts.max_iters; ++iter) {
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
    if (vals[order[n]] - vals[order[0]] <= opts.value_tol) {
      converged = true;
      break;
    }
    std::fill(centroid.begin(), centroid.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) centroid[j] += pts[order[i]][j] / static_cast<double>(n);

    const std::size_t worst = order[n];
    blend(trial, 1.0);
    const double fr = f(trial);
    if (fr < vals[order[0]]) {
      blend(trial2, 2.0);
      const double fe = f(trial2);
      if (fe < fr) {
        pts[worst] = trial2;
        vals[worst] = fe;
      } else {
        pts[worst] = trial;
        vals[worst] = fr;
      }
      continue;
    }
    if (fr < vals[order[n - 1]]) {
      pts[worst] = trial;
      vals[worst] = fr;
      continue;
    }
    const bool outside = fr < vals[worst];
    blend(trial2, outside ? 0.5 : -0.5);
    const double fc = f(trial2);
    if (fc < (outside ? fr : vals[worst])) {
      pts[worst] = trial2;
      vals[worst] = fc;
      continue;
    }
    const auto best = pts[order[0]];
    for (std::size_t i = 1; i <= n; ++i) {
      auto& p = pts[order[i]];
      for (std::size_t j = 0; j < n; ++j) p[j] = best[j] + 0.5 * (p[j] - best[j]);
      vals[order[i]] = f(p);
    }
  }

  const auto best_it = std::min_element(vals.begin(), vals.end());
  const std::size_t best = static_cast<std::size_t>(best_it - vals.begin());
  return {pts[best], vals[best], iter, converged};
}

}  // namespace imag
