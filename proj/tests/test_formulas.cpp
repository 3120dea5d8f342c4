#include <doctest.h>

#include <cmath>
#include <random>

#include "aslab/formulas.hpp"

using namespace aslab::formulas;

namespace {

// Independent reference for the spectra, written straight from the
// branch-by-branch case analysis rather than via the shared helpers.
double ref_kleinian_measure(const KleinianParams& p, Mode m, double t) {
  const double d = p.delta, kn = p.k_min, kx = p.k_max;
  const double f = t < 0.5 ? t / (1.0 - t) : 1.0;
  if (m == Mode::Assouad) {
    if (d < kn) return d + f * (kx - d);
    if (2.0 * d < kn + kx) return (2.0 * d - kn) + f * (kn + kx - 2.0 * d);
    return 2.0 * d - kn;
  }
  if (d > kx) return d - f * (d - kn);
  if (2.0 * d > kn + kx) return (2.0 * d - kx) - f * (2.0 * d - kn - kx);
  return 2.0 * d - kx;
}

double ref_kleinian_set(const KleinianParams& p, Mode m, double t) {
  const double d = p.delta, kn = p.k_min, kx = p.k_max;
  const double f = t < 0.5 ? t / (1.0 - t) : 1.0;
  if (m == Mode::Assouad) return d < kx ? d + f * (kx - d) : d;
  return d > kn ? d - f * (d - kn) : d;
}

double ref_julia(const JuliaParams& p, Mode m, double t, bool measure) {
  const double h = p.h;
  const int q = p.p_max;
  const double f = std::min(1.0, t * q / (1.0 - t));
  const bool sloped = (m == Mode::Assouad) ? h < 1.0 : h >= 1.0;
  if (sloped) return h + f * (1.0 - h);
  return measure ? h + (h - 1.0) * q : h;
}

std::mt19937_64 rng(7);

KleinianParams random_kleinian() {
  std::uniform_int_distribution<int> ks(1, 3);
  const int kn = ks(rng);
  const int kx = kn + std::uniform_int_distribution<int>(0, 2)(rng);
  std::uniform_real_distribution<double> ds(kx / 2.0 + 1e-3, kx + 1.0);
  return {ds(rng), kn, kx};
}

JuliaParams random_julia() {
  std::uniform_int_distribution<int> ps(1, 4);
  const int pn = ps(rng);
  const int px = pn + std::uniform_int_distribution<int>(0, 2)(rng);
  const double lo = px / (1.0 + px);
  std::uniform_real_distribution<double> hs(lo + 1e-3, 2.0 - 1e-3);
  return {hs(rng), pn, px};
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS(KleinianParams{1.0, 2, 1}.validate());
  CHECK_THROWS(KleinianParams{1.0, 0, 1}.validate());
  CHECK_THROWS(KleinianParams{0.5, 1, 1}.validate());  // delta = k_max/2
  CHECK_NOTHROW(KleinianParams{0.51, 1, 1}.validate());
  CHECK_THROWS(JuliaParams{0.5, 1, 1}.validate());  // h = p/(1+p)
  CHECK_THROWS(JuliaParams{2.0, 1, 1}.validate());
  CHECK_THROWS(JuliaParams{1.0, 3, 2}.validate());
  CHECK_NOTHROW(JuliaParams{1.5, 1, 4}.validate());
}

TEST_CASE("dimension endpoints") {
  for (int i = 0; i < 500; ++i) {
    const auto p = random_kleinian();
    const auto d = kleinian_dims(p);
    CHECK(d.set_assouad == std::max(p.delta, double(p.k_max)));
    CHECK(d.set_lower == std::min(p.delta, double(p.k_min)));
    CHECK(d.measure_assouad == std::max(2.0 * p.delta - p.k_min, double(p.k_max)));
    CHECK(d.measure_lower == std::min(2.0 * p.delta - p.k_max, double(p.k_min)));
    CHECK(kleinian_measure_box(p) == std::max(p.delta, 2.0 * p.delta - p.k_min));
  }
  for (int i = 0; i < 500; ++i) {
    const auto p = random_julia();
    const auto d = julia_dims(p);
    const double cusp = p.h + (p.h - 1.0) * p.p_max;
    CHECK(d.set_assouad == std::max(1.0, p.h));
    CHECK(d.set_lower == std::min(1.0, p.h));
    CHECK(d.measure_assouad == doctest::Approx(std::max(1.0, cusp)));
    CHECK(d.measure_lower == doctest::Approx(std::min(1.0, cusp)));
    CHECK(d.measure_box == doctest::Approx(std::max(p.h, cusp)));
  }
}

TEST_CASE("spectra match the branch formulas and their limits") {
  for (int i = 0; i < 300; ++i) {
    const auto kp = random_kleinian();
    const auto jp = random_julia();
    for (Mode m : {Mode::Assouad, Mode::Lower}) {
      const auto km = kleinian_measure_spectrum(kp, m);
      const auto ks = kleinian_set_spectrum(kp, m);
      const auto jm = julia_measure_spectrum(jp, m);
      const auto js = julia_set_spectrum(jp, m);
      for (double t = 0.05; t < 1.0; t += 0.05) {
        CHECK(km(t) == doctest::Approx(ref_kleinian_measure(kp, m, t)).epsilon(1e-13));
        CHECK(ks(t) == doctest::Approx(ref_kleinian_set(kp, m, t)).epsilon(1e-13));
        CHECK(jm(t) == doctest::Approx(ref_julia(jp, m, t, true)).epsilon(1e-13));
        CHECK(js(t) == doctest::Approx(ref_julia(jp, m, t, false)).epsilon(1e-13));
      }
      // limits stored on the profile agree with evaluation near the ends
      CHECK(km(1e-9) == doctest::Approx(km.theta0_limit).epsilon(1e-6));
      CHECK(km(1.0 - 1e-12) == doctest::Approx(km.theta1_limit).epsilon(1e-6));
      CHECK(js(1e-9) == doctest::Approx(js.theta0_limit).epsilon(1e-6));
      CHECK(js(1.0 - 1e-12) == doctest::Approx(js.theta1_limit).epsilon(1e-6));
    }
  }
}

TEST_CASE("theta limits hit the dimension theorems") {
  for (int i = 0; i < 300; ++i) {
    const auto kp = random_kleinian();
    const auto d = kleinian_dims(kp);
    CHECK(kleinian_set_spectrum(kp, Mode::Assouad).theta1_limit ==
          doctest::Approx(d.set_assouad));
    CHECK(kleinian_set_spectrum(kp, Mode::Lower).theta1_limit ==
          doctest::Approx(d.set_lower));
    CHECK(kleinian_measure_spectrum(kp, Mode::Assouad).theta1_limit ==
          doctest::Approx(d.measure_assouad));
    CHECK(kleinian_measure_spectrum(kp, Mode::Lower).theta1_limit ==
          doctest::Approx(d.measure_lower));
    // theta -> 0 ends at the box dimension of set / measure
    CHECK(kleinian_set_spectrum(kp, Mode::Assouad).theta0_limit ==
          doctest::Approx(kp.delta));
    CHECK(kleinian_measure_spectrum(kp, Mode::Assouad).theta0_limit ==
          doctest::Approx(kleinian_measure_box(kp)));
  }
  for (int i = 0; i < 300; ++i) {
    const auto jp = random_julia();
    const auto d = julia_dims(jp);
    CHECK(julia_set_spectrum(jp, Mode::Assouad).theta0_limit ==
          doctest::Approx(jp.h));
    CHECK(julia_set_spectrum(jp, Mode::Lower).theta0_limit ==
          doctest::Approx(jp.h));
    CHECK(julia_measure_spectrum(jp, Mode::Assouad).theta0_limit ==
          doctest::Approx(d.measure_box));
  }
}

TEST_CASE("ordering of the four spectra at every theta") {
  for (int i = 0; i < 300; ++i) {
    const auto kp = random_kleinian();
    const auto ml = kleinian_measure_spectrum(kp, Mode::Lower);
    const auto sl = kleinian_set_spectrum(kp, Mode::Lower);
    const auto sa = kleinian_set_spectrum(kp, Mode::Assouad);
    const auto ma = kleinian_measure_spectrum(kp, Mode::Assouad);
    const auto jp = random_julia();
    const auto jml = julia_measure_spectrum(jp, Mode::Lower);
    const auto jsl = julia_set_spectrum(jp, Mode::Lower);
    const auto jsa = julia_set_spectrum(jp, Mode::Assouad);
    const auto jma = julia_measure_spectrum(jp, Mode::Assouad);
    for (double t = 0.01; t < 1.0; t += 0.01) {
      CHECK(ml(t) <= sl(t) + 1e-12);
      CHECK(sl(t) <= sa(t) + 1e-12);
      CHECK(sa(t) <= ma(t) + 1e-12);
      CHECK(jml(t) <= jsl(t) + 1e-12);
      CHECK(jsl(t) <= jsa(t) + 1e-12);
      CHECK(jsa(t) <= jma(t) + 1e-12);
    }
  }
}

TEST_CASE("phase transition closed form reproduces the spectra") {
  for (int i = 0; i < 300; ++i) {
    const auto kp = random_kleinian();
    const auto sa = kleinian_set_spectrum(kp, Mode::Assouad);
    const auto dims = kleinian_dims(kp);
    const auto jp = random_julia();
    const auto js = julia_set_spectrum(jp, Mode::Assouad);
    for (double t = 0.02; t < 1.0; t += 0.02) {
      CHECK(sa(t) == doctest::Approx(phase_transition_form(
                         kp.delta, dims.set_assouad, 0.5, t))
                         .epsilon(1e-13));
      if (jp.h < 1.0)
        CHECK(js(t) == doctest::Approx(
                           phase_transition_form(jp.h, 1.0,
                                                 1.0 / (1.0 + jp.p_max), t))
                           .epsilon(1e-13));
    }
    if (sa.rho_pt) CHECK(*sa.rho_pt == 0.5);
    if (js.rho_pt) CHECK(*js.rho_pt == doctest::Approx(1.0 / (1.0 + jp.p_max)));
  }
}

TEST_CASE("general spectrum bounds contain every profile") {
  for (int i = 0; i < 300; ++i) {
    const auto kp = random_kleinian();
    const auto sa = kleinian_set_spectrum(kp, Mode::Assouad);
    const double box = kp.delta;
    const double A = kleinian_dims(kp).set_assouad;
    for (double t = 0.02; t < 1.0; t += 0.02) {
      const auto [lo, hi] = general_spectrum_bounds(box, A, t);
      CHECK(sa(t) >= lo - 1e-12);
      CHECK(sa(t) <= hi + 1e-12);
    }
    // strict improvement of the phase transition over the general bound
    if (sa.rho_pt) CHECK(*sa.rho_pt > 1.0 - box / A);
  }
}

TEST_CASE("window factor: branches meet continuously at the threshold") {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < 200; ++i) {
    const auto jp = random_julia();
    const double log_rj = -1.0 - 10.0 * u(rng);
    const double log_rj1 = log_rj - 1.0 - 100.0 * u(rng);
    const double thr = log_rj + (log_rj1 - log_rj) / (1.0 + jp.p_max);
    const double up = log_julia_phi(jp.h, jp.p_max, thr + 1e-12, log_rj, log_rj1);
    const double dn = log_julia_phi(jp.h, jp.p_max, thr - 1e-12, log_rj, log_rj1);
    CHECK(up == doctest::Approx(dn).epsilon(1e-9));
    // endpoints: no correction at the window top, full (h-1)p drop across it
    CHECK(log_julia_phi(jp.h, jp.p_max, log_rj, log_rj, log_rj1) == 0.0);
    CHECK(julia_phi(jp.h, jp.p_max, std::exp(log_rj), std::exp(log_rj),
                    std::exp(log_rj1)) == doctest::Approx(1.0));
  }
  CHECK_THROWS(log_julia_phi(1.0, 1, 0.0, -1.0, -2.0));    // above window
  CHECK_THROWS(log_julia_phi(1.0, 1, -3.0, -1.0, -2.0));   // below window
  CHECK_THROWS(log_julia_phi_terminating(1.0, 1, -1.0, -2.0));
}

TEST_CASE("global measure formula") {
  CHECK(sv_global_measure(1.5, 1.0, 0.0, 0.0) == doctest::Approx(1.0));
  CHECK(sv_global_measure(1.5, 1.0, 2.0, 3.0) ==
        doctest::Approx(std::exp(-2.0 * 1.5 - 3.0 * 0.5)));
  // rank k = delta: cusp excursions cost nothing
  CHECK(sv_global_measure(2.0, 2.0, 1.0, 5.0) == doctest::Approx(std::exp(-2.0)));
}

TEST_CASE("dictionary: which inequality patterns occur on each side") {
  std::vector<KleinianParams> kl;
  std::vector<JuliaParams> ju;
  for (int i = 0; i < 2000; ++i) {
    kl.push_back(random_kleinian());
    ju.push_back(random_julia());
  }
  kl.push_back({1.7, 1, 2});  // strict L < H < A on the Kleinian side
  const auto rep = sullivan_dictionary_report(kl, ju);
  CHECK(rep.julia_assouad_full == 0);
  CHECK(rep.julia_lower_bound_viol == 0);
  CHECK(rep.julia_lha == 0);
  CHECK(rep.kleinian_lha >= 1);
  for (const auto& e : rep.entries)
    if (e.setting == "julia") CHECK(e.allowed == (e.configuration != "L<H<A"));
}

TEST_CASE("figure-parameter hand values") {
  // delta 0.6, ranks 1..1: set Assouad spectrum
  const auto f3 = kleinian_set_spectrum({0.6, 1, 1}, Mode::Assouad);
  CHECK(f3(0.25) == doctest::Approx(0.6 + (0.25 / 0.75) * 0.4).epsilon(1e-13));
  CHECK(f3(0.5) == doctest::Approx(1.0));
  // h 1.4, petals up to 4: set lower spectrum
  const auto f4 = julia_set_spectrum({1.4, 1, 4}, Mode::Lower);
  CHECK(f4(0.1) == doctest::Approx(1.4 + (0.1 * 4 / 0.9) * (-0.4)).epsilon(1e-13));
  CHECK(f4(0.2) == doctest::Approx(1.0));
  CHECK(f4(0.75) == doctest::Approx(1.0));
  // delta 1.7, ranks 1..2: measure Assouad constant 2.4, set lower hits 1
  const auto f5m = kleinian_measure_spectrum({1.7, 1, 2}, Mode::Assouad);
  const auto f5s = kleinian_set_spectrum({1.7, 1, 2}, Mode::Lower);
  for (double t : {0.25, 0.5, 0.75}) CHECK(f5m(t) == doctest::Approx(2.4));
  CHECK(f5s(0.5) == doctest::Approx(1.0));
  CHECK(f5s(0.75) == doctest::Approx(1.0));
}
