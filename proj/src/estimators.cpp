#include "aslab/estimators.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <thread>

namespace aslab::est {

namespace {

constexpr double kLog2 = 0.6931471805599453;

int resolve_threads(int threads) {
  if (threads > 0) return threads;
  if (const char* s = std::getenv("ASLAB_THREADS")) {
    const int t = std::atoi(s);
    if (t > 0) return t;
  }
  const unsigned hc = std::thread::hardware_concurrency();
  return hc ? int(hc) : 1;
}

}  // namespace

void parallel_for(Eigen::Index n, const std::function<void(Eigen::Index)>& body,
                  int threads) {
  const int t = std::min<Eigen::Index>(resolve_threads(threads), n);
  if (t <= 1) {
    for (Eigen::Index i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<Eigen::Index> next{0};
  std::vector<std::thread> pool;
  pool.reserve(size_t(t));
  for (int w = 0; w < t; ++w)
    pool.emplace_back([&] {
      for (Eigen::Index i; (i = next.fetch_add(1)) < n;) body(i);
    });
  for (auto& th : pool) th.join();
}

ScaleWindow make_window(const PointCloud& cloud, const GridIndex& index,
                        double safety) {
  ScaleWindow w;
  w.level_coarse = 2;
  int fine = index.max_level();
  if (cloud.eps_min > 0.0) {
    const double lim = index.base_side() / (safety * cloud.eps_min);
    if (lim < 2.0) throw std::runtime_error("scale window: eps_min too coarse");
    fine = std::min<int>(fine, int(std::floor(std::log2(lim))));
  }
  // stop before grid saturation: once most points sit alone in their cell,
  // deeper levels only flatten the counts
  while (fine > w.level_coarse &&
         index.occupied_cells(fine) > cloud.size() / 2)
    --fine;
  // stop at the sample's coverage scale: cells narrower than the largest
  // unsampled gaps see holes in the sample, not structure of the set
  const double cover = cloud.coverage >= 0.0
                           ? cloud.coverage
                           : cloud.nearest_neighbour_percentile(99.9);
  if (cover > 0.0) {
    const double lim = index.base_side() / (4.0 * cover);
    if (lim >= 2.0)
      fine = std::min<int>(fine, int(std::floor(std::log2(lim))));
  }
  w.level_fine = fine;
  if (w.level_fine - w.level_coarse < w.min_ratio_levels + 1)
    throw std::runtime_error("scale window: fewer than 4 usable levels");
  return w;
}

std::pair<double, double> fit_slope(const std::vector<double>& x,
                                    const std::vector<double>& y) {
  const size_t n = x.size();
  if (n < 2 || y.size() != n) throw std::invalid_argument("fit_slope: n < 2");
  double mx = 0, my = 0;
  for (size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= double(n);
  my /= double(n);
  double sxx = 0, sxy = 0;
  for (size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx <= 0) throw std::invalid_argument("fit_slope: degenerate x");
  const double slope = sxy / sxx;
  if (n == 2) return {slope, 0.0};
  double rss = 0;
  for (size_t i = 0; i < n; ++i) {
    const double e = y[i] - my - slope * (x[i] - mx);
    rss += e * e;
  }
  return {slope, std::sqrt(rss / (double(n) - 2.0) / sxx)};
}

EstimateReport box_dimension_estimate(const GridIndex& index,
                                      const ScaleWindow& win) {
  std::vector<double> x, y;
  for (int L = win.level_coarse; L <= win.level_fine; ++L) {
    x.push_back(double(L) * kLog2);  // log(1/r), up to the base-side constant
    y.push_back(std::log(double(index.occupied_cells(L))));
  }
  auto [slope, se] = fit_slope(x, y);
  EstimateReport rep;
  rep.value = slope;
  rep.half_width = se;
  rep.witness_R = index.cell_side(win.level_coarse);
  rep.witness_r = index.cell_side(win.level_fine);
  rep.levels_used = int(x.size());
  return rep;
}

namespace {

std::vector<Eigen::VectorXd> candidate_centers(const PointCloud& cloud,
                                               const GridIndex& index,
                                               int level_R, double R,
                                               const LocalOptions& opt) {
  const int lvl = std::min(index.max_level(), level_R + opt.center_refine);
  auto centers = index.representatives(lvl);
  if (int(centers.size()) > opt.max_centers) {  // deterministic stride thinning
    std::vector<Eigen::VectorXd> thin;
    const size_t stride = centers.size() / size_t(opt.max_centers) + 1;
    for (size_t i = 0; i < centers.size(); i += stride) thin.push_back(centers[i]);
    centers = std::move(thin);
  }
  for (Eigen::Index j = 0; j < cloud.special_points.cols(); ++j)
    centers.push_back(cloud.special_points.col(j).head(cloud.dim));
  if (!cloud.truncated) return centers;
  // truncated sample: balls poking past the sampled region see artificial
  // emptiness, so keep only centers with margin R inside the bounding box
  const auto box = cloud.bounding_box();
  std::vector<Eigen::VectorXd> kept;
  for (const auto& c : centers) {
    bool inside = true;
    for (int i = 0; i < cloud.dim && inside; ++i)
      inside = c(i) - box.min()(i) >= R && box.max()(i) - c(i) >= R;
    if (inside) kept.push_back(c);
  }
  return kept.empty() ? centers : kept;
}

Eigen::Index extremal_count(const GridIndex& index,
                            const std::vector<Eigen::VectorXd>& centers,
                            double R, int level_r, bool take_max, int threads) {
  std::vector<Eigen::Index> counts(centers.size());
  parallel_for(Eigen::Index(centers.size()),
               [&](Eigen::Index i) {
                 counts[size_t(i)] =
                     index.ball_covering_count(centers[size_t(i)], R, level_r);
               },
               threads);
  if (take_max) return *std::max_element(counts.begin(), counts.end());
  return *std::min_element(counts.begin(), counts.end());
}

EstimateReport spectrum_estimate(const PointCloud& cloud, const GridIndex& index,
                                 const ScaleWindow& win, double theta,
                                 const LocalOptions& opt, bool take_max) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("spectrum: theta in (0,1)");
  struct Pair {
    double x, y, R, r;
  };
  std::vector<Pair> pairs;
  for (int lR = 1; lR <= win.level_fine; ++lR) {
    const int lr = int(std::llround(double(lR) / theta));
    if (lr - lR < win.min_ratio_levels) continue;
    if (lr > win.level_fine) continue;
    if (lR >= win.level_coarse || pairs.empty()) {
      const double R = index.cell_side(lR);
      const auto centers = candidate_centers(cloud, index, lR, R, opt);
      if (centers.empty()) continue;
      const auto m = extremal_count(index, centers, R, lr, take_max, opt.threads);
      pairs.push_back({double(lr - lR) * kLog2, std::log(double(std::max<Eigen::Index>(m, 1))),
                       R, index.cell_side(lr)});
    }
  }
  if (pairs.empty())
    throw std::runtime_error("scale window: no admissible (R,r) pair at this theta");

  EstimateReport rep;
  rep.levels_used = int(pairs.size());
  double best = take_max ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  for (const auto& p : pairs) {
    const double ratio = p.y / p.x;
    if (take_max ? ratio > best : ratio < best) {
      best = ratio;
      rep.witness_R = p.R;
      rep.witness_r = p.r;
    }
  }
  bool distinct_gaps = false;
  for (const auto& p : pairs) distinct_gaps |= p.x != pairs.front().x;
  if (opt.raw_ratios || !distinct_gaps) {
    rep.value = std::clamp(best, 0.0, double(index.dim()));
    return rep;
  }
  std::vector<double> x, y;
  for (const auto& p : pairs) {
    x.push_back(p.x);
    y.push_back(p.y);
  }
  auto [slope, se] = fit_slope(x, y);
  rep.value = std::clamp(slope, 0.0, double(index.dim()));
  rep.half_width = se;
  return rep;
}

EstimateReport dimension_estimate(const PointCloud& cloud, const GridIndex& index,
                                  const ScaleWindow& win, const LocalOptions& opt,
                                  bool take_max) {
  EstimateReport rep;
  double best = take_max ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  int used = 0;
  const int lR_max = std::max(win.level_coarse,
                              win.level_fine - win.min_ratio_levels - 1);
  for (int lR = win.level_coarse; lR <= lR_max; ++lR) {
    const double R = index.cell_side(lR);
    const auto centers = candidate_centers(cloud, index, lR, R, opt);
    if (centers.empty()) continue;
    std::vector<int> levels;
    for (int lr = lR + win.min_ratio_levels; lr <= win.level_fine; ++lr)
      levels.push_back(lr);
    if (levels.empty()) continue;
    // per-center scaling exponents, then the extremal one
    std::vector<std::vector<double>> counts(
        centers.size(), std::vector<double>(levels.size()));
    parallel_for(
        Eigen::Index(centers.size()),
        [&](Eigen::Index i) {
          for (size_t l = 0; l < levels.size(); ++l)
            counts[size_t(i)][l] = double(std::max<Eigen::Index>(
                index.ball_covering_count(centers[size_t(i)], R, levels[l]), 1));
        },
        opt.threads);
    std::vector<double> x;
    for (int lr : levels) x.push_back(double(lr - lR) * kLog2);
    for (size_t i = 0; i < centers.size(); ++i) {
      std::vector<double> y;
      for (double cgt : counts[i]) y.push_back(std::log(cgt));
      const double slope =
          x.size() >= 2 ? fit_slope(x, y).first : y.back() / x.back();
      if (take_max ? slope > best : slope < best) {
        best = slope;
        rep.witness_R = R;
        rep.witness_r = index.cell_side(win.level_fine);
      }
    }
    ++used;
  }
  if (used == 0)
    throw std::runtime_error("scale window: no admissible R level");
  rep.value = std::clamp(best, 0.0, double(index.dim()));
  rep.levels_used = used;
  return rep;
}

}  // namespace

EstimateReport assouad_spectrum_estimate(const PointCloud& cloud,
                                         const GridIndex& index,
                                         const ScaleWindow& win, double theta,
                                         const LocalOptions& opt) {
  return spectrum_estimate(cloud, index, win, theta, opt, /*take_max=*/true);
}

EstimateReport lower_spectrum_estimate(const PointCloud& cloud,
                                       const GridIndex& index,
                                       const ScaleWindow& win, double theta,
                                       const LocalOptions& opt) {
  return spectrum_estimate(cloud, index, win, theta, opt, /*take_max=*/false);
}

EstimateReport assouad_dimension_estimate(const PointCloud& cloud,
                                          const GridIndex& index,
                                          const ScaleWindow& win,
                                          const LocalOptions& opt) {
  return dimension_estimate(cloud, index, win, opt, /*take_max=*/true);
}

EstimateReport lower_dimension_estimate(const PointCloud& cloud,
                                        const GridIndex& index,
                                        const ScaleWindow& win,
                                        const LocalOptions& opt) {
  return dimension_estimate(cloud, index, win, opt, /*take_max=*/false);
}

}  // namespace aslab::est
