#include "aslab/measure_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace aslab::est {

PiecewiseLinear::PiecewiseLinear(std::vector<std::pair<double, double>> segments) {
  if (segments.empty() || segments.front().first != 0.0)
    throw std::invalid_argument("PiecewiseLinear: first segment must start at 0");
  double y = 0.0;
  for (size_t i = 0; i < segments.size(); ++i) {
    if (i > 0) {
      if (segments[i].first <= segments[i - 1].first)
        throw std::invalid_argument("PiecewiseLinear: knots must increase");
      y += slope_.back() * (segments[i].first - segments[i - 1].first);
    }
    t_.push_back(segments[i].first);
    y_.push_back(y);
    slope_.push_back(segments[i].second);
  }
}

double PiecewiseLinear::operator()(double t) const {
  if (t < 0.0) throw std::invalid_argument("PiecewiseLinear: t < 0");
  const auto it = std::upper_bound(t_.begin(), t_.end(), t);
  const size_t i = size_t(it - t_.begin()) - 1;
  return y_[i] + slope_[i] * (t - t_[i]);
}

std::vector<double> PiecewiseLinear::knots() const { return t_; }

double PiecewiseLinear::min_slope() const {
  return *std::min_element(slope_.begin(), slope_.end());
}

SyntheticKleinianOracle::SyntheticKleinianOracle(
    const formulas::KleinianParams& params, double s)
    : params_(params) {
  params_.validate();
  const double d = params_.delta;
  auto tent = [&](double k) {
    // excursion [0, 2s]: in by depth, out by depth, flat afterwards
    return PiecewiseLinear({{0.0, 2 * d - k}, {s, k}, {2 * s, d}});
  };
  auto terminal = [&](double k) {
    // plunge after time 1 and never come back out
    return PiecewiseLinear({{0.0, d}, {1.0, 2 * d - k}});
  };
  auto dragged = [&](double k_in, double k_out) {
    // bounded excursion into rank k_in, then a terminal rank-k_out plunge
    return PiecewiseLinear(
        {{0.0, 2 * d - k_in}, {s, k_in}, {2 * s, 2 * d - k_out}});
  };
  const double kmin = params_.k_min, kmax = params_.k_max;
  profiles_.emplace("flat", PiecewiseLinear({{0.0, d}}));
  profiles_.emplace("tent_kmax", tent(kmax));
  profiles_.emplace("tent_kmin", tent(kmin));
  profiles_.emplace("center_kmin", terminal(kmin));
  profiles_.emplace("center_kmax", terminal(kmax));
  profiles_.emplace("dragged", dragged(kmax, kmin));
  profiles_.emplace("dragged_dual", dragged(kmin, kmax));
  for (const auto& [name, prof] : profiles_)
    if (prof.min_slope() < 0.0)
      throw std::invalid_argument("oracle: ball mass not monotone (" + name +
                                  "); needs delta >= k_max/2");
}

std::vector<std::string> SyntheticKleinianOracle::tags() const {
  std::vector<std::string> out;
  for (const auto& [name, prof] : profiles_) out.push_back(name);
  return out;
}

double SyntheticKleinianOracle::log_mass(const std::string& tag,
                                         double log_r) const {
  return -profiles_.at(tag)(-log_r);
}

std::vector<double> SyntheticKleinianOracle::breakpoints(
    const std::string& tag) const {
  return profiles_.at(tag).knots();
}

std::pair<double, double> SyntheticKleinianOracle::t_range() const {
  return {1e-6, 1e8};
}

namespace {

// Y for one approach ladder: slope h outside windows; inside a window
// [a, b] the top (1/(1+p) of its log-length) has slope h + (h-1) p and the
// rest slope 1.
PiecewiseLinear window_profile(double h, int p,
                               const std::vector<std::pair<double, double>>& windows,
                               bool terminating) {
  const double sigma = h + (h - 1.0) * p;
  std::vector<std::pair<double, double>> seg;
  double cursor = 0.0;
  for (const auto& [a, b] : windows) {
    if (a > cursor || cursor == 0.0) seg.push_back({cursor, h});
    const double split = a + (b - a) / (1.0 + p);
    seg.push_back({a, sigma});
    seg.push_back({split, 1.0});
    cursor = b;
  }
  if (terminating)
    seg.push_back({cursor, sigma});
  else
    seg.push_back({cursor, h});
  if (seg.front().first != 0.0) seg.insert(seg.begin(), {0.0, h});
  return PiecewiseLinear(seg);
}

}  // namespace

SyntheticJuliaOracle::SyntheticJuliaOracle(const formulas::JuliaParams& params,
                                           double gap_span)
    : params_(params) {
  params_.validate();
  const double h = params_.h;
  const int p = params_.p_max;
  t_max_ = 10.0 * gap_span;

  // the extremal approach: one window spanning almost all scales
  profiles_.emplace("gap",
                    window_profile(h, p, {{1.0, gap_span}}, false));

  auto ladder = [&](double growth, bool geometric) {
    std::vector<std::pair<double, double>> w;
    double a = 1.0;
    while (a < t_max_) {
      const double b = geometric ? a + growth : a * growth;
      w.push_back({a, b});
      a = b * 1.125;  // short excursions away from the cusp between windows
    }
    return w;
  };
  profiles_.emplace("geometric_2", window_profile(h, p, ladder(std::log(2.0) * 8, true), false));
  profiles_.emplace("geometric_10", window_profile(h, p, ladder(std::log(10.0) * 8, true), false));
  profiles_.emplace("doubly_exp_1.5", window_profile(h, p, ladder(1.5, false), false));
  profiles_.emplace("doubly_exp_2", window_profile(h, p, ladder(2.0, false), false));
  profiles_.emplace("terminating",
                    window_profile(h, p, {{1.0, 32.0}}, true));
  if (params_.p_min != params_.p_max)
    profiles_.emplace("gap_pmin",
                      window_profile(h, params_.p_min, {{1.0, gap_span}}, false));
  for (const auto& [name, prof] : profiles_)
    if (prof.min_slope() < 0.0)
      throw std::invalid_argument("oracle: ball mass not monotone (" + name + ")");
}

std::vector<std::string> SyntheticJuliaOracle::tags() const {
  std::vector<std::string> out;
  for (const auto& [name, prof] : profiles_) out.push_back(name);
  return out;
}

double SyntheticJuliaOracle::log_mass(const std::string& tag,
                                      double log_r) const {
  return -profiles_.at(tag)(-log_r);
}

std::vector<double> SyntheticJuliaOracle::breakpoints(
    const std::string& tag) const {
  return profiles_.at(tag).knots();
}

std::pair<double, double> SyntheticJuliaOracle::t_range() const {
  return {1e-6, t_max_};
}

EstimateReport measure_spectrum_estimate(const MeasureOracle& oracle,
                                         double theta, formulas::Mode mode,
                                         int grid) {
  if (!(theta > 0.0 && theta < 1.0))
    throw std::invalid_argument("measure spectrum: theta in (0,1)");
  const auto [t_min, t_max] = oracle.t_range();
  const double hi = theta * t_max;  // so that t/theta stays in range
  if (hi <= t_min)
    throw std::runtime_error("scale window: theta too small for oracle range");

  const bool take_max = mode == formulas::Mode::Assouad;
  EstimateReport rep;
  double best = take_max ? -std::numeric_limits<double>::infinity()
                         : std::numeric_limits<double>::infinity();
  for (const auto& tag : oracle.tags()) {
    std::vector<double> samples;
    for (int i = 0; i <= grid; ++i)
      samples.push_back(t_min * std::pow(hi / t_min, double(i) / grid));
    for (double b : oracle.breakpoints(tag)) {
      samples.push_back(b);
      samples.push_back(b * theta);
    }
    for (double T : samples) {
      if (!(T >= t_min && T <= hi)) continue;
      const double Tr = T / theta;
      const double num =
          oracle.log_mass(tag, -T) - oracle.log_mass(tag, -Tr);
      const double ratio = num / (Tr - T);
      if (take_max ? ratio > best : ratio < best) {
        best = ratio;
        rep.witness_R = std::exp(-T);
        rep.witness_r = std::exp(-Tr);
      }
      ++rep.levels_used;
    }
  }
  rep.value = best;
  return rep;
}

double measure_box_estimate(const MeasureOracle& oracle) {
  const auto [t_min, t_max] = oracle.t_range();
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& tag : oracle.tags()) {
    const double slope = (oracle.log_mass(tag, -t_min) -
                          oracle.log_mass(tag, -t_max)) /
                         (t_max - t_min);
    best = std::max(best, slope);
  }
  return best;
}

}  // namespace aslab::est
