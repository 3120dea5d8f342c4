#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "aslab/mobius.hpp"

using namespace aslab::geo;

namespace {
std::mt19937_64 rng(13);
Complex rc() {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  return {u(rng), u(rng)};
}
}  // namespace

TEST_CASE("normalization, composition, inverse") {
  for (int i = 0; i < 200; ++i) {
    Complex a = rc(), b = rc(), c = rc(), d = rc();
    if (std::abs(a * d - b * c) < 1e-3) continue;
    const MobiusMap f(a, b, c, d);
    CHECK(std::abs(f.det() - 1.0) < 1e-12);
    const MobiusMap g(rc(), rc(), Complex(1.0), rc());
    const Complex z = rc();
    CHECK(std::abs(f.compose(g).apply(z) - f.apply(g.apply(z))) < 1e-8);
    CHECK(std::abs(f.inverse().apply(f.apply(z)) - z) < 1e-8);
  }
}

TEST_CASE("parabolicity and fixed points") {
  const MobiusMap translation(1.0, 2.5, 0.0, 1.0);
  CHECK(translation.is_parabolic());
  const MobiusMap identity;
  CHECK_FALSE(identity.is_parabolic());
  // z / (cz + 1): parabolic, fixes 0
  const MobiusMap f(1.0, 0.0, Complex(0.0, -2.0), 1.0);
  CHECK(f.is_parabolic());
  CHECK(std::abs(f.parabolic_fixed_point()) < 1e-12);
  // conjugate of a translation fixes the conjugated point
  for (int i = 0; i < 100; ++i) {
    const Complex p = rc();
    const MobiusMap s(1.0, p, 1.0, p + 1.0);  // sends infinity to ... generic
    const MobiusMap g = s.compose(translation).compose(s.inverse());
    CHECK(g.is_parabolic());
    const Complex q = g.parabolic_fixed_point();
    CHECK(std::abs(g.apply(q) - q) < 1e-6);
  }
  const MobiusMap loxo(2.0, 0.0, 0.0, 0.5);
  CHECK_FALSE(loxo.is_parabolic());
}

TEST_CASE("Poincare extension: heights transform conformally") {
  for (int i = 0; i < 200; ++i) {
    Complex a = rc(), b = rc(), c = rc(), d = rc();
    if (std::abs(a * d - b * c) < 1e-3) continue;
    const MobiusMap f(a, b, c, d);
    const Complex z = rc();
    const double t = 0.3;
    const Vec w = vec(z.real(), z.imag(), t);
    const Vec fw = f.apply_halfspace(w);
    // boundary limit: shrinking the height converges to f(z)
    const Vec fw2 = f.apply_halfspace(vec(z.real(), z.imag(), 1e-9));
    const Complex fz = f.apply(z);
    if (std::abs(c * z + d) > 0.1) {
      CHECK(std::abs(Complex(fw2(0), fw2(1)) - fz) < 1e-6);
      // exact new height: t / (|cz+d|^2 + |c|^2 t^2), det-normalized row
      const double expect =
          t / (std::norm(f.c * z + f.d) + std::norm(f.c) * t * t);
      CHECK(fw(2) / expect == doctest::Approx(1.0).epsilon(1e-8));
      CHECK(fw2(2) > 0.0);
    }
  }
}

TEST_CASE("image horoball diameters") {
  // g(z) = -1/z maps the horoball at p, diameter t, to one of diameter t/|p|^2
  const MobiusMap inv(0.0, -1.0, 1.0, 0.0);
  for (double p : {0.5, 1.0, 3.0})
    CHECK(image_horoball_diameter(inv, Complex(p), 0.1) ==
          doctest::Approx(0.1 / (p * p)).epsilon(1e-12));
  // translations preserve diameters
  const MobiusMap tr(1.0, 4.2, 0.0, 1.0);
  CHECK(image_horoball_diameter(tr, Complex(1.0, 2.0), 0.3) ==
        doctest::Approx(0.3).epsilon(1e-12));
}

TEST_CASE("horoball orbit under a parabolic map: 1/n and 1/n^2 laws") {
  // conjugate z -> z+1 to fix 0
  const MobiusMap s(0.0, 1.0, 1.0, 0.0);  // z -> 1/z, involution
  const MobiusMap g = s.compose(MobiusMap(1.0, 1.0, 0.0, 1.0)).compose(s);
  REQUIRE(g.is_parabolic());
  CHECK(std::abs(g.parabolic_fixed_point()) < 1e-12);
  const auto steps = horoball_radius_sequence(g, Complex(2.0), 0.5, 2000);
  for (size_t n = 10; n < steps.size(); n *= 3) {
    const auto& st = steps[n - 1];
    const double rd = double(n) * st.distance_to_fixed;
    const double rh = double(n) * double(n) * st.diameter;
    CHECK(rd > 1.0 / 50.0);
    CHECK(rd < 50.0);
    CHECK(rh > 1.0 / 50.0);
    CHECK(rh < 50.0);
  }
  const MobiusMap loxo(2.0, 0.0, 0.0, 0.5);
  CHECK_THROWS(horoball_radius_sequence(loxo, Complex(1.0), 0.1, 10));
}
