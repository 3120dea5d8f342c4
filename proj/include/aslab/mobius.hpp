#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "aslab/geometry.hpp"

namespace aslab::geo {

using Complex = std::complex<double>;

/// Element of PSL(2,C) acting on the Riemann sphere (the boundary of the
/// upper half-space model H^3) and, by Poincare extension, on H^3 itself.
/// Normalized to det = 1 on construction.
struct MobiusMap {
  Complex a{1.0}, b{0.0}, c{0.0}, d{1.0};

  MobiusMap() = default;
  MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_);

  Complex det() const { return a * d - b * c; }
  Complex trace() const { return a + d; }
  bool is_parabolic(double tol = 1e-9) const;

  /// Fixed point of a parabolic map (finite case; infinity if c == 0).
  Complex parabolic_fixed_point() const;

  Complex apply(Complex z) const;
  MobiusMap inverse() const { return MobiusMap(d, -b, -c, a); }
  MobiusMap compose(const MobiusMap& g) const;  // this after g

  /// Poincare extension acting on (z, t) in C x (0,inf), via quaternions.
  /// Input/output packed as geo::Vec with height at index 2.
  Vec apply_halfspace(const Vec& w) const;
};

/// Euclidean diameter of g(H) where H is the horoball tangent to the
/// boundary plane at p with diameter t.  Requires g(p) finite.
double image_horoball_diameter(const MobiusMap& g, Complex p, double t);

struct HoroballOrbitStep {
  double distance_to_fixed;  // |f^n(p') - p|
  double diameter;           // |H_{f^n(p')}|
};

/// Orbit of a seed horoball under iteration of a parabolic map f fixing p,
/// in the half-space model.  Realizes the 1/n and 1/n^2 asymptotics.
/// Rejects non-parabolic f.
std::vector<HoroballOrbitStep> horoball_radius_sequence(
    const MobiusMap& f, Complex seed_base, double seed_diameter, int n_max);

}  // namespace aslab::geo
