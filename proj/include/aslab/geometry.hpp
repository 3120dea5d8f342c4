#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

namespace aslab::geo {

// Points of the Poincare ball D^{d+1} and its boundary sphere S^d live in
// R^{d+1} with d <= 3.  We pad everything into a fixed Vector4d; unused
// trailing coordinates are zero and never affect norms or distances.
using Vec = Eigen::Vector4d;

inline Vec vec(double x, double y = 0.0, double z = 0.0, double w = 0.0) {
  return Vec(x, y, z, w);
}

constexpr double kBoundaryTol = 1e-12;

/// Hyperbolic distance in the ball model, acosh closed form.
/// Rejects points on or outside the unit sphere.
double hyperbolic_distance(const Vec& p, const Vec& q);

// Same formula but returns +inf instead of throwing when an argument
// touches the sphere; used by minimizers that probe near the boundary.
double hyperbolic_distance_clamped(const Vec& p, const Vec& q);

/// Mobius addition a (+) x on the ball (gyro-translation).  The map
/// x -> (-a) (+) x is the hyperbolic isometry sending a to the origin.
Vec mobius_translate(const Vec& a, const Vec& x);

/// Distance between interior points computed via the cross ratio
/// log(|AQ||BP| / (|AP||BQ|)) where A,B are the boundary endpoints of the
/// geodesic through P and Q, A on the P side.  Independent route from
/// hyperbolic_distance: the endpoints are found by translating P to the
/// origin, where the geodesic is a diameter, and translating back.
double cross_ratio_distance(const Vec& P, const Vec& Q);

/// Point z_T on the geodesic ray [0, z) at hyperbolic distance T from 0.
Vec ray_point(const Vec& z, double T);

struct Horoball {
  Vec basepoint;          // on S^d
  double euclidean_diameter = 0.0;
  int rank = 1;

  Vec center() const { return basepoint * (1.0 - euclidean_diameter / 2.0); }
  double radius() const { return euclidean_diameter / 2.0; }
  bool contains(const Vec& x) const {
    return (x - center()).norm() < radius();
  }
};

/// Pairwise disjointness / origin exclusion check for a horoball family.
/// Throws std::invalid_argument on violation (1e-12 slack).
void validate_horoballs(const std::vector<Horoball>& balls);

struct EscapeValue {
  double rho = 0.0;  // hyperbolic depth inside the containing horoball
  int rank = 0;      // 0 when outside all horoballs
};

/// rho(z,T), k(z,T): depth of z_T inside the horoball containing it,
/// computed by golden-section minimization of hyperbolic distance to the
/// horosphere (tolerance 1e-8), and that horoball's rank.
EscapeValue escape_function(const Vec& z, double T,
                            const std::vector<Horoball>& horoballs);

// ---- upper half-space model ----------------------------------------------
// A point of H^{d+1} = R^d x (0,inf) is packed with its d boundary
// coordinates first and the height at index d.

/// Cayley transformation H^{d+1} -> D^{d+1} (an involution; the inverse is
/// the same formula).  `dim` is the boundary dimension d.  The image of
/// infinity is the distinguished boundary point -e_{d}.
Vec halfspace_to_ball(const Vec& x, int dim);
Vec ball_to_halfspace(const Vec& b, int dim);
Vec cayley_infinity_image(int dim);

double hyperbolic_distance_halfspace(const Vec& x, const Vec& y, int dim);

/// Image of the Euclidean sphere (center c, radius r) under the Cayley
/// inversion used by halfspace_to_ball.  Returns (center, radius).
std::pair<Vec, double> cayley_sphere_image(const Vec& c, double r, int dim);

// ---- Circle Lemma ---------------------------------------------------------
// Circle of radius R tangent to the x-axis at the origin, parametrized by
// x(t) = R sin t, y(t) = R(1 - cos t).  For small angles,
//   sqrt(Ry)/2 <= x <= 2 sqrt(Ry)   and   x^2/(4R) <= y <= 4 x^2 / R.

struct CircleLemmaReport {
  bool all_hold = true;
  double worst_upper_x = 0.0;   // max of x / (2 sqrt(Ry))
  double worst_lower_x = 0.0;   // min of x / (sqrt(Ry)/2), as ratio >= 1
  double limit_ratio = 0.0;     // x / sqrt(Ry) at the smallest angle
};

CircleLemmaReport circle_lemma_check(double R, const std::vector<double>& angles);

}  // namespace aslab::geo
