#include "aslab/formulas.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace aslab::formulas {

namespace {

double theta_factor(double theta) {
  return std::min(1.0, theta / (1.0 - theta));
}

double julia_theta_factor(double theta, int p_max) {
  return std::min(1.0, theta * p_max / (1.0 - theta));
}

SpectrumProfile constant_profile(double v) {
  return {[v](double) { return v; }, v, v, std::nullopt};
}

}  // namespace

void KleinianParams::validate() const {
  if (k_min < 1 || k_max < k_min)
    throw std::invalid_argument("KleinianParams: need 1 <= k_min <= k_max");
  if (!(delta > k_max / 2.0))
    throw std::invalid_argument("KleinianParams: need delta > k_max/2");
}

void JuliaParams::validate() const {
  if (p_min < 1 || p_max < p_min)
    throw std::invalid_argument("JuliaParams: need 1 <= p_min <= p_max");
  if (!(h > double(p_max) / (1.0 + p_max)))
    throw std::invalid_argument("JuliaParams: need h > p_max/(1+p_max)");
  if (!(h < 2.0))
    throw std::invalid_argument("JuliaParams: need h < 2");
}

KleinianDims kleinian_dims(const KleinianParams& p) {
  p.validate();
  return {std::max(p.delta, double(p.k_max)),
          std::min(p.delta, double(p.k_min)),
          std::max(2.0 * p.delta - p.k_min, double(p.k_max)),
          std::min(2.0 * p.delta - p.k_max, double(p.k_min)),
          p.delta};
}

double kleinian_measure_box(const KleinianParams& p) {
  p.validate();
  return std::max(p.delta, 2.0 * p.delta - p.k_min);
}

SpectrumProfile kleinian_measure_spectrum(const KleinianParams& p, Mode mode) {
  p.validate();
  const double delta = p.delta;
  const double kmin = p.k_min, kmax = p.k_max;
  const double mid = (kmin + kmax) / 2.0;
  if (mode == Mode::Assouad) {
    if (delta < kmin) {
      return {[=](double t) { return delta + theta_factor(t) * (kmax - delta); },
              delta, kmax,
              kmax > delta ? std::optional<double>(0.5) : std::nullopt};
    }
    if (delta < mid) {
      const double base = 2.0 * delta - kmin;
      return {[=](double t) {
                return base + theta_factor(t) * (kmin + kmax - 2.0 * delta);
              },
              base, kmax, std::optional<double>(0.5)};
    }
    return constant_profile(2.0 * delta - kmin);
  }
  // Lower spectrum
  if (delta > kmax) {
    return {[=](double t) { return delta - theta_factor(t) * (delta - kmin); },
            delta, kmin,
            delta > kmin ? std::optional<double>(0.5) : std::nullopt};
  }
  if (delta > mid) {
    const double base = 2.0 * delta - kmax;
    return {[=](double t) {
              return base - theta_factor(t) * (2.0 * delta - kmin - kmax);
            },
            base, kmin,
            2.0 * delta != kmin + kmax ? std::optional<double>(0.5) : std::nullopt};
  }
  return constant_profile(2.0 * delta - kmax);
}

SpectrumProfile kleinian_set_spectrum(const KleinianParams& p, Mode mode) {
  p.validate();
  const double delta = p.delta;
  const double kmin = p.k_min, kmax = p.k_max;
  if (mode == Mode::Assouad) {
    if (delta < kmax) {
      return {[=](double t) { return delta + theta_factor(t) * (kmax - delta); },
              delta, kmax, std::optional<double>(0.5)};
    }
    return constant_profile(delta);
  }
  if (delta <= kmin) return constant_profile(delta);
  return {[=](double t) { return delta - theta_factor(t) * (delta - kmin); },
          delta, kmin, std::optional<double>(0.5)};
}

JuliaDims julia_dims(const JuliaParams& p) {
  p.validate();
  const double cusp = p.h + (p.h - 1.0) * p.p_max;
  return {std::max(1.0, p.h), std::min(1.0, p.h),
          std::max(1.0, cusp), std::min(1.0, cusp),
          std::max(p.h, cusp)};
}

SpectrumProfile julia_measure_spectrum(const JuliaParams& p, Mode mode) {
  p.validate();
  const double h = p.h;
  const int pmax = p.p_max;
  const double rho = 1.0 / (1.0 + pmax);
  const bool sloped = (mode == Mode::Assouad) ? (h < 1.0) : (h >= 1.0);
  if (!sloped) return constant_profile(h + (h - 1.0) * pmax);
  return {[=](double t) { return h + julia_theta_factor(t, pmax) * (1.0 - h); },
          h, 1.0, h != 1.0 ? std::optional<double>(rho) : std::nullopt};
}

SpectrumProfile julia_set_spectrum(const JuliaParams& p, Mode mode) {
  p.validate();
  const double h = p.h;
  const int pmax = p.p_max;
  const double rho = 1.0 / (1.0 + pmax);
  const bool sloped = (mode == Mode::Assouad) ? (h < 1.0) : (h >= 1.0);
  if (!sloped) return constant_profile(h);
  return {[=](double t) { return h + julia_theta_factor(t, pmax) * (1.0 - h); },
          h, 1.0, h != 1.0 ? std::optional<double>(rho) : std::nullopt};
}

std::pair<double, double> general_spectrum_bounds(double box_upper,
                                                  double assouad, double theta) {
  return {box_upper, std::min(assouad, box_upper / (1.0 - theta))};
}

double debug_formula_skew() {
  static const double skew = [] {
    const char* s = std::getenv("ASLAB_FORMULA_SKEW");
    return s ? std::atof(s) : 0.0;
  }();
  return skew;
}

double phase_transition_form(double box, double assouad, double rho_pt,
                             double theta) {
  const double slope = (1.0 - rho_pt) * theta / ((1.0 - theta) * rho_pt);
  return std::min(box + slope * (assouad - box), assouad) + debug_formula_skew();
}

double sv_global_measure(double delta, double k, double T, double rho) {
  return std::exp(-T * delta) * std::exp(-rho * (delta - k));
}

double log_julia_phi(double h, int p, double log_r, double log_rj,
                     double log_rj1) {
  if (!(log_rj1 <= log_r && log_r < log_rj) && log_r != log_rj)
    throw std::invalid_argument("julia_phi: r outside window [r_{j+1}, r_j)");
  const double log_threshold = log_rj + (log_rj1 - log_rj) / (1.0 + p);
  if (log_r > log_threshold)
    return (h - 1.0) * p * (log_r - log_rj);
  return (h - 1.0) * (log_rj1 - log_r);
}

double log_julia_phi_terminating(double h, int p, double log_r, double log_rl) {
  if (log_r > log_rl)
    throw std::invalid_argument("julia_phi_terminating: requires r <= r_l");
  return (h - 1.0) * p * (log_r - log_rl);
}

double julia_phi(double h, int p, double r, double r_j, double r_j1) {
  return std::exp(log_julia_phi(h, p, std::log(r), std::log(r_j), std::log(r_j1)));
}

double julia_phi_terminating(double h, int p, double r, double r_l) {
  return std::exp(log_julia_phi_terminating(h, p, std::log(r), std::log(r_l)));
}

namespace {

std::string classify(double L, double H, double A, double tol = 1e-12) {
  const bool lh = L < H - tol;
  const bool ha = H < A - tol;
  if (!lh && !ha) return "L=H=A";
  if (!lh) return "L=H<A";
  if (!ha) return "L<H=A";
  return "L<H<A";
}

}  // namespace

DictionaryReport sullivan_dictionary_report(
    const std::vector<KleinianParams>& kleinian,
    const std::vector<JuliaParams>& julia) {
  DictionaryReport rep;
  for (const auto& kp : kleinian) {
    const auto d = kleinian_dims(kp);
    DictionaryEntry e;
    e.setting = "kleinian";
    e.configuration = classify(d.set_lower, d.hausdorff, d.set_assouad);
    e.allowed = true;  // all four rows possible in the Kleinian column
    e.special_coincidence = (kp.k_min == 1 && kp.k_max == 1);
    if (e.configuration == "L<H<A") ++rep.kleinian_lha;
    rep.entries.push_back(e);
  }
  for (const auto& jp : julia) {
    const auto d = julia_dims(jp);
    DictionaryEntry e;
    e.setting = "julia";
    e.configuration = classify(d.set_lower, jp.h, d.set_assouad);
    e.allowed = e.configuration != "L<H<A";
    e.special_coincidence = (jp.p_max == 1);
    if (e.configuration == "L<H<A") ++rep.julia_lha;
    if (!(d.set_assouad < 2.0)) ++rep.julia_assouad_full;
    if (!(d.set_lower > double(jp.p_max) / (1.0 + jp.p_max)))
      ++rep.julia_lower_bound_viol;
    rep.entries.push_back(e);
  }
  return rep;
}

}  // namespace aslab::formulas
