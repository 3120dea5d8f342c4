#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace aslab::formulas {

enum class Mode { Assouad, Lower };

struct KleinianParams {
  double delta = 1.0;
  int k_min = 1;
  int k_max = 1;

  void validate() const;  // throws on delta <= k_max/2, k_min > k_max, ...
};

struct JuliaParams {
  double h = 1.0;
  int p_min = 1;
  int p_max = 1;

  void validate() const;  // throws unless p_max/(1+p_max) < h < 2
};

// theta |-> dimension value on (0,1), with its theta -> 0/1 limits and the
// phase transition (smallest theta at which the Assouad spectrum reaches
// the Assouad dimension), when the profile is non-constant.
struct SpectrumProfile {
  std::function<double(double)> eval;
  double theta0_limit = 0.0;
  double theta1_limit = 0.0;
  std::optional<double> rho_pt;

  double operator()(double theta) const { return eval(theta); }
};

struct KleinianDims {
  double set_assouad, set_lower, measure_assouad, measure_lower, hausdorff;
};

struct JuliaDims {
  double set_assouad, set_lower, measure_assouad, measure_lower, measure_box;
};

KleinianDims kleinian_dims(const KleinianParams& p);
double kleinian_measure_box(const KleinianParams& p);
SpectrumProfile kleinian_measure_spectrum(const KleinianParams& p, Mode mode);
SpectrumProfile kleinian_set_spectrum(const KleinianParams& p, Mode mode);

JuliaDims julia_dims(const JuliaParams& p);
SpectrumProfile julia_measure_spectrum(const JuliaParams& p, Mode mode);
SpectrumProfile julia_set_spectrum(const JuliaParams& p, Mode mode);

/// [box, min{assouad, box/(1-theta)}] containment interval for any
/// Assouad-spectrum value at this theta.
std::pair<double, double> general_spectrum_bounds(double box_upper,
                                                  double assouad, double theta);

/// min{ box + ((1-rho) theta / ((1-theta) rho)) (assouad - box), assouad }.
double phase_transition_form(double box, double assouad, double rho_pt,
                             double theta);

/// Global measure formula, Kleinian side: exp(-T delta) exp(-rho (delta - k)).
double sv_global_measure(double delta, double k, double T, double rho);

/// Global measure formula, Julia side: the window factor phi on
/// [r_j1, r_j), branch threshold at r_j (r_j1/r_j)^{1/(1+p)}.
double julia_phi(double h, int p, double r, double r_j, double r_j1);
/// Terminating (pre-parabolic) tail: phi for r <= r_l.
double julia_phi_terminating(double h, int p, double r, double r_l);

// log-space twins, exact for astronomically small radii.
double log_julia_phi(double h, int p, double log_r, double log_rj, double log_rj1);
double log_julia_phi_terminating(double h, int p, double log_r, double log_rl);

struct DictionaryEntry {
  std::string setting;        // "kleinian" | "julia"
  std::string configuration;  // e.g. "L<H<A"
  bool allowed = true;
  bool special_coincidence = false;  // k_min = k_max = p_max = 1 case
};

struct DictionaryReport {
  std::vector<DictionaryEntry> entries;
  int julia_assouad_full = 0;      // violations of dim_A J < 2
  int julia_lower_bound_viol = 0;  // violations of dim_L J > p_max/(1+p_max)
  int julia_lha = 0;               // Julia tuples realizing L<H<A
  int kleinian_lha = 0;            // Kleinian tuples realizing L<H<A
};

DictionaryReport sullivan_dictionary_report(
    const std::vector<KleinianParams>& kleinian,
    const std::vector<JuliaParams>& julia);

// Test hook: when the environment variable ASLAB_FORMULA_SKEW is set, its
// value is added to phase_transition_form so the selftest can prove it
// detects a perturbed constant.  Zero in normal operation.
double debug_formula_skew();

}  // namespace aslab::formulas
