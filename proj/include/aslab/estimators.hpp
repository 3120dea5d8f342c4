#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "aslab/cloud.hpp"
#include "aslab/grid_index.hpp"

namespace aslab::est {

// Dyadic scale window for a cloud: levels fine enough to see structure but
// coarser than 8 x eps_min (below that the sample is just isolated points).
struct ScaleWindow {
  int level_coarse = 2;  // coarsest R level
  int level_fine = 10;   // finest usable r level
  int min_ratio_levels = 3;

  int levels() const { return level_fine - level_coarse; }
};

// Throws std::runtime_error when fewer than min_ratio_levels + 1 usable
// levels remain; callers surface this as a scale-window violation.
ScaleWindow make_window(const PointCloud& cloud, const GridIndex& index,
                        double safety = 8.0);

struct EstimateReport {
  double value = 0.0;
  double half_width = 0.0;  // regression standard error on the slope
  double witness_R = 0.0;   // coarse scale of the extremal pair
  double witness_r = 0.0;
  int levels_used = 0;
};

// least squares slope of y on x with standard error; n >= 2
std::pair<double, double> fit_slope(const std::vector<double>& x,
                                    const std::vector<double>& y);

EstimateReport box_dimension_estimate(const GridIndex& index,
                                      const ScaleWindow& win);

struct LocalOptions {
  bool raw_ratios = false;  // true: sup/inf of two-scale ratios instead of
                            // the per-R regression (noisier, biased high)
  int center_refine = 2;    // candidate centers: one per cell at level(R)+this
  int max_centers = 4096;   // stride-thin beyond this many candidates
  int threads = 0;          // 0: ASLAB_THREADS or hardware_concurrency
};

// Assouad / lower spectrum at theta: r = R^{1/theta} on the dyadic grid,
// slope of the extremal local covering count against log(R/r).
EstimateReport assouad_spectrum_estimate(const PointCloud& cloud,
                                         const GridIndex& index,
                                         const ScaleWindow& win, double theta,
                                         const LocalOptions& opt = {});
EstimateReport lower_spectrum_estimate(const PointCloud& cloud,
                                       const GridIndex& index,
                                       const ScaleWindow& win, double theta,
                                       const LocalOptions& opt = {});

// Assouad / lower dimension: extremal per-R regression slope over all
// admissible (R, r) with r independent of R.
EstimateReport assouad_dimension_estimate(const PointCloud& cloud,
                                          const GridIndex& index,
                                          const ScaleWindow& win,
                                          const LocalOptions& opt = {});
EstimateReport lower_dimension_estimate(const PointCloud& cloud,
                                        const GridIndex& index,
                                        const ScaleWindow& win,
                                        const LocalOptions& opt = {});

// chunked parallel loop; honors ASLAB_THREADS
void parallel_for(Eigen::Index n, const std::function<void(Eigen::Index)>& body,
                  int threads = 0);

}  // namespace aslab::est
