#include <doctest.h>

#include <cmath>
#include <complex>
#include <set>

#include "aslab/generators.hpp"

using namespace aslab;
using namespace aslab::gen;
using geo::Complex;

TEST_CASE("decreasing sequence sets") {
  const auto c = decreasing_sequence(1, 1000);
  REQUIRE(c.dim == 1);
  REQUIRE(c.size() == 1001);  // n points plus the limit 0
  CHECK(c.pts(0, 0) == 1.0);
  CHECK(c.pts(0, 999) == doctest::Approx(1e-3));
  CHECK(c.pts.row(0).minCoeff() == 0.0);
  // eps_min is the tail gap 1/n - 1/(n+1)
  CHECK(c.eps_min == doctest::Approx(1.0 / 999.0 - 1.0 / 1000.0).epsilon(1e-3));
  const auto c2 = decreasing_sequence(2, 500);
  CHECK(c2.pts(0, 3) == doctest::Approx(0.5));  // 4^{-1/2}
  CHECK(c2.special_points.cols() == 1);
  CHECK_THROWS(decreasing_sequence(0, 10));
}

TEST_CASE("inverted lattice") {
  const auto c = inverted_lattice(2, 30);
  CHECK(c.dim == 2);
  CHECK(c.size() >= 900);
  CHECK(c.pts.maxCoeff() <= 1.0);
  CHECK(c.pts.minCoeff() >= 0.0);
  CHECK_THROWS(inverted_lattice(4, 5));
}

TEST_CASE("tangent-circle packing generators") {
  const auto gens = apollonian_generators();
  REQUIRE(gens.size() == 4);  // [a, b, a^-1, b^-1]
  for (const auto& g : gens) {
    CHECK(g.is_parabolic());
    CHECK(std::abs(g.det() - 1.0) < 1e-12);
  }
  // listed as generators then inverses
  const auto id0 = gens[0].compose(gens[2]);
  CHECK(std::abs(id0.apply(Complex(0.3, 0.7)) - Complex(0.3, 0.7)) < 1e-12);
  // distinct fixed points
  CHECK(std::abs(gens[0].parabolic_fixed_point() -
                 gens[1].parabolic_fixed_point()) > 0.5);
}

TEST_CASE("orbit cloud of the packing group") {
  KleinianOrbitOptions opt;
  opt.max_points = 60'000;
  opt.eps_proj = 2e-3;
  opt.dedup_cell = 1e-3;
  const auto c = kleinian_orbit(apollonian_generators(), opt);
  CHECK(c.dim == 2);
  CHECK(c.size() > 5'000);
  // bounded in the closed unit disk
  for (Eigen::Index i = 0; i < c.size(); ++i)
    CHECK(c.pts.col(i).norm() <= 1.0 + 1e-6);
  // group invariance: generator images of sample points stay close to the
  // sample (the limit set is invariant)
  const auto gens = apollonian_generators();
  int ok = 0, total = 0;
  for (Eigen::Index i = 0; i < c.size(); i += 97) {
    const Complex z(c.pts(0, i), c.pts(1, i));
    const Complex w = gens[0].apply(z);
    double best = 1e9;
    for (Eigen::Index j = 0; j < c.size(); ++j)
      best = std::min(best,
                      std::abs(w - Complex(c.pts(0, j), c.pts(1, j))));
    ++total;
    if (best < 20 * opt.eps_proj) ++ok;
  }
  CHECK(double(ok) >= 0.95 * double(total));
  // determinism
  const auto c2 = kleinian_orbit(apollonian_generators(), opt);
  CHECK(c2.size() == c.size());
  CHECK((c2.pts - c.pts).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("polynomial roots") {
  // z^2 - 1
  const auto r = poly_roots({Complex(-1.0), Complex(0.0), Complex(1.0)});
  REQUIRE(r.size() == 2);
  std::multiset<double> re{r[0].real(), r[1].real()};
  CHECK(*re.begin() == doctest::Approx(-1.0));
  CHECK(*re.rbegin() == doctest::Approx(1.0));
  // z^3 = -1: roots on the unit circle
  const auto r3 = poly_roots({Complex(1.0), Complex(0.0), Complex(0.0), Complex(1.0)});
  REQUIRE(r3.size() == 3);
  for (auto z : r3) {
    CHECK(std::abs(z) == doctest::Approx(1.0));
    CHECK(std::abs(z * z * z + 1.0) < 1e-10);
  }
}

TEST_CASE("backward-orbit Julia samples are forward invariant") {
  JuliaOptions opt;
  opt.n_points = 40'000;
  const auto c = cauliflower_julia(opt);
  CHECK(c.dim == 2);
  CHECK(c.size() > 30'000);
  CHECK(c.eps_min > 0.0);
  // special points are the parabolic point preimages
  REQUIRE(c.special_points.cols() == 2);
  CHECK(c.special_points(0, 0) == doctest::Approx(0.5));
  // forward invariance: f(x) lands back near the sample for almost all x
  auto f = [](Complex z) { return z * z + 0.25; };
  int ok = 0, total = 0;
  for (Eigen::Index i = 0; i < c.size(); i += 41) {
    const Complex w = f(Complex(c.pts(0, i), c.pts(1, i)));
    double best = 1e9;
    for (Eigen::Index j = 0; j < c.size(); ++j)
      best = std::min(best, std::abs(w - Complex(c.pts(0, j), c.pts(1, j))));
    ++total;
    if (best <= 2.0 * std::max(c.eps_min, 1e-4)) ++ok;
  }
  CHECK(double(ok) >= 0.95 * double(total));
  // bounded: the Julia set of z^2 + 1/4 lies in |z| <= 2
  for (Eigen::Index i = 0; i < c.size(); ++i)
    CHECK(c.pts.col(i).norm() <= 2.0 + 1e-9);
}

TEST_CASE("petal family") {
  JuliaOptions opt;
  opt.n_points = 20'000;
  const auto c = petal_julia(2, opt);
  CHECK(c.size() > 10'000);
  // specials: origin plus the two roots of z^2 = -1
  REQUIRE(c.special_points.cols() == 3);
  CHECK(c.special_points.col(0).norm() == doctest::Approx(0.0));
  CHECK(c.special_points.col(1).norm() == doctest::Approx(1.0));
  CHECK_THROWS(petal_julia(0, opt));
  CHECK_THROWS(petal_julia(9, opt));
}
