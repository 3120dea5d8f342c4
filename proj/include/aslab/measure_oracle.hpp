#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "aslab/estimators.hpp"
#include "aslab/formulas.hpp"

namespace aslab::est {

// Exact ball-mass model queried in log space: t = -log r, so astronomically
// small radii cost nothing.  Each tag is one point of the space, with
// log m(B(x, e^-t)) = -Y_tag(t) for a piecewise linear Y.
class MeasureOracle {
 public:
  virtual ~MeasureOracle() = default;
  virtual std::vector<std::string> tags() const = 0;
  virtual double log_mass(const std::string& tag, double log_r) const = 0;
  // slope-change locations of Y_tag, as t = -log r
  virtual std::vector<double> breakpoints(const std::string& tag) const = 0;
  virtual std::pair<double, double> t_range() const = 0;
};

// Y on [0, inf): Y(0) = 0, slope segments[i].second on
// [segments[i].first, segments[i+1].first).
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<std::pair<double, double>> segments);
  double operator()(double t) const;
  std::vector<double> knots() const;
  double min_slope() const;

 private:
  std::vector<double> t_, y_, slope_;
};

// Orbital counting measure of a geodesic excursion pattern: ball decay
// exp(-t d - rho(t)(d - k)) where rho is the time spent inside a rank-k
// cusp neighbourhood.  Tags cover the excursion shapes that witness every
// branch of the spectra: no excursion, a bounded excursion into the
// extreme-rank cusps, a terminal plunge, and an excursion that exits one
// cusp straight into another.
class SyntheticKleinianOracle : public MeasureOracle {
 public:
  explicit SyntheticKleinianOracle(const formulas::KleinianParams& params,
                                   double excursion_span = 1e4);

  std::vector<std::string> tags() const override;
  double log_mass(const std::string& tag, double log_r) const override;
  std::vector<double> breakpoints(const std::string& tag) const override;
  std::pair<double, double> t_range() const override;

  const formulas::KleinianParams& params() const { return params_; }

 private:
  formulas::KleinianParams params_;
  std::map<std::string, PiecewiseLinear> profiles_;
};

// Parabolic conformal-measure model: r^h with a window correction per
// approach to the parabolic point.  Window layouts: one huge window
// ("gap", the extremal approach), geometric ladders, doubly exponential
// ladders, and a terminating (pre-parabolic) tail.
class SyntheticJuliaOracle : public MeasureOracle {
 public:
  explicit SyntheticJuliaOracle(const formulas::JuliaParams& params,
                                double gap_span = 1e6);

  std::vector<std::string> tags() const override;
  double log_mass(const std::string& tag, double log_r) const override;
  std::vector<double> breakpoints(const std::string& tag) const override;
  std::pair<double, double> t_range() const override;

  const formulas::JuliaParams& params() const { return params_; }

 private:
  formulas::JuliaParams params_;
  std::map<std::string, PiecewiseLinear> profiles_;
  double t_max_;
};

// sup (Assouad) / inf (lower) over tags and scale pairs r = R^{1/theta} of
// log(m(B(x,R)) / m(B(x,r))) / log(R/r).  Scale pairs are sampled on a
// grid joined with every profile breakpoint b and every b*theta, so the
// extremal configurations are hit exactly.
EstimateReport measure_spectrum_estimate(const MeasureOracle& oracle,
                                         double theta, formulas::Mode mode,
                                         int grid = 64);

// end-to-end decay rate, maximized over tags
double measure_box_estimate(const MeasureOracle& oracle);

}  // namespace aslab::est
