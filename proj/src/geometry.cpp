#include "aslab/geometry.hpp"

#include <cmath>
#include <limits>

namespace aslab::geo {

namespace {

double acosh_distance(double pq2, double p2, double q2) {
  return std::acosh(1.0 + 2.0 * pq2 / ((1.0 - p2) * (1.0 - q2)));
}

}  // namespace

double hyperbolic_distance(const Vec& p, const Vec& q) {
  const double p2 = p.squaredNorm();
  const double q2 = q.squaredNorm();
  if (p2 >= 1.0 - kBoundaryTol || q2 >= 1.0 - kBoundaryTol)
    throw std::invalid_argument("hyperbolic_distance: point not strictly inside the ball");
  return acosh_distance((p - q).squaredNorm(), p2, q2);
}

double hyperbolic_distance_clamped(const Vec& p, const Vec& q) {
  const double p2 = p.squaredNorm();
  const double q2 = q.squaredNorm();
  if (p2 >= 1.0 || q2 >= 1.0) return std::numeric_limits<double>::infinity();
  return acosh_distance((p - q).squaredNorm(), p2, q2);
}

Vec mobius_translate(const Vec& a, const Vec& x) {
  const double ax = a.dot(x);
  const double a2 = a.squaredNorm();
  const double x2 = x.squaredNorm();
  const double denom = 1.0 + 2.0 * ax + a2 * x2;
  return ((1.0 + 2.0 * ax + x2) * a + (1.0 - a2) * x) / denom;
}

double cross_ratio_distance(const Vec& P, const Vec& Q) {
  if ((P - Q).norm() == 0.0) return 0.0;
  if (P.squaredNorm() >= 1.0 - kBoundaryTol || Q.squaredNorm() >= 1.0 - kBoundaryTol)
    throw std::invalid_argument("cross_ratio_distance: point not strictly inside the ball");
  // Translate P to the origin; the geodesic through 0 and Q' is a diameter.
  const Vec u = mobius_translate(-P, Q);
  const Vec dir = u.normalized();
  // A is the endpoint on the P side (P sits between A and Q).
  const Vec A = mobius_translate(P, Vec(-dir));
  const Vec B = mobius_translate(P, dir);
  const double num = (A - Q).norm() * (B - P).norm();
  const double den = (A - P).norm() * (B - Q).norm();
  return std::log(num / den);
}

Vec ray_point(const Vec& z, double T) {
  if (std::abs(z.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("ray_point: z must lie on the unit sphere");
  if (T < 0.0) throw std::invalid_argument("ray_point: T must be nonnegative");
  return std::tanh(T / 2.0) * z;
}

void validate_horoballs(const std::vector<Horoball>& balls) {
  for (const auto& h : balls) {
    if (h.euclidean_diameter <= 0.0 || h.euclidean_diameter > 2.0)
      throw std::invalid_argument("horoball: diameter must lie in (0, 2]");
    if (std::abs(h.basepoint.norm() - 1.0) > 1e-9)
      throw std::invalid_argument("horoball: basepoint must lie on the unit sphere");
    if (h.contains(Vec::Zero()))
      throw std::invalid_argument("horoball: must not contain the origin");
  }
  for (size_t i = 0; i < balls.size(); ++i)
    for (size_t j = i + 1; j < balls.size(); ++j) {
      const double gap = (balls[i].center() - balls[j].center()).norm() -
                         (balls[i].radius() + balls[j].radius());
      if (gap < -1e-12)
        throw std::invalid_argument("horoball family: balls overlap");
    }
}

namespace {

// Depth of an interior point x inside horoball h: minimize hyperbolic
// distance from x to the horosphere, parametrized as a circle in the
// 2-plane through x and the ball's center.
double horoball_depth(const Vec& x, const Horoball& h) {
  const Vec c = h.center();
  const double r = h.radius();
  Vec e1 = x - c;
  if (e1.norm() < 1e-14) e1 = h.basepoint;  // x at the center: any plane works
  e1.normalize();
  // Second in-plane direction: orthogonalize the basepoint direction (or a
  // fallback axis) against e1.
  Vec e2 = h.basepoint - h.basepoint.dot(e1) * e1;
  if (e2.norm() < 1e-10) {
    for (int i = 0; i < 4 && e2.norm() < 1e-10; ++i) {
      Vec axis = Vec::Zero();
      axis[i] = 1.0;
      e2 = axis - axis.dot(e1) * e1;
    }
  }
  e2.normalize();
  auto dist = [&](double phi) {
    const Vec y = c + r * (std::cos(phi) * e1 + std::sin(phi) * e2);
    return hyperbolic_distance_clamped(x, y);
  };
  // Coarse scan, then golden-section refinement in the best bracket.
  const int n = 128;
  int best = 0;
  double best_val = dist(0.0);
  for (int i = 1; i < n; ++i) {
    const double v = dist(2.0 * M_PI * i / n);
    if (v < best_val) { best_val = v; best = i; }
  }
  double a = 2.0 * M_PI * (best - 1) / n;
  double b = 2.0 * M_PI * (best + 1) / n;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
  double f1 = dist(x1), f2 = dist(x2);
  while (b - a > 1e-10) {
    if (f1 < f2) { b = x2; x2 = x1; f2 = f1; x1 = b - gr * (b - a); f1 = dist(x1); }
    else         { a = x1; x1 = x2; f1 = f2; x2 = a + gr * (b - a); f2 = dist(x2); }
  }
  return std::min(f1, f2);
}

}  // namespace

EscapeValue escape_function(const Vec& z, double T,
                            const std::vector<Horoball>& horoballs) {
  validate_horoballs(horoballs);
  const Vec zt = ray_point(z, T);
  for (const auto& h : horoballs) {
    const double d = (zt - h.center()).norm();
    if (d < h.radius() - 1e-15)
      return {horoball_depth(zt, h), h.rank};
    if (d <= h.radius() + 1e-15)
      return {0.0, h.rank};  // exactly on the horosphere
  }
  return {0.0, 0};
}

Vec halfspace_to_ball(const Vec& x, int dim) {
  Vec e = Vec::Zero();
  e[dim] = 1.0;
  const Vec s = x + e;
  const double n2 = s.squaredNorm();
  if (n2 < 1e-300)
    throw std::invalid_argument("cayley: singular point");
  return -e + 2.0 * s / n2;
}

Vec ball_to_halfspace(const Vec& b, int dim) {
  if ((b - cayley_infinity_image(dim)).norm() < 1e-14)
    throw std::invalid_argument("cayley inverse: image of infinity rejected");
  return halfspace_to_ball(b, dim);  // the map is an involution
}

Vec cayley_infinity_image(int dim) {
  Vec e = Vec::Zero();
  e[dim] = -1.0;
  return e;
}

double hyperbolic_distance_halfspace(const Vec& x, const Vec& y, int dim) {
  const double hx = x[dim], hy = y[dim];
  if (hx <= 0.0 || hy <= 0.0)
    throw std::invalid_argument("halfspace distance: height must be positive");
  return std::acosh(1.0 + (x - y).squaredNorm() / (2.0 * hx * hy));
}

std::pair<Vec, double> cayley_sphere_image(const Vec& c, double r, int dim) {
  // halfspace_to_ball is inversion in the sphere of radius sqrt(2) centered
  // at -e; the classical sphere-inversion formula applies.
  Vec e = Vec::Zero();
  e[dim] = 1.0;
  const Vec a = -e;
  const double R2 = 2.0;
  const double q = (c - a).squaredNorm() - r * r;
  if (std::abs(q) < 1e-300)
    throw std::invalid_argument("cayley_sphere_image: sphere through the inversion center");
  const Vec center = a + R2 * (c - a) / q;
  const double radius = std::abs(R2 * r / q);
  return {center, radius};
}

CircleLemmaReport circle_lemma_check(double R, const std::vector<double>& angles) {
  CircleLemmaReport rep;
  double min_angle = std::numeric_limits<double>::infinity();
  rep.worst_lower_x = std::numeric_limits<double>::infinity();
  for (double t : angles) {
    if (t <= 0.0) throw std::invalid_argument("circle_lemma_check: angles must be positive");
    const double x = R * std::sin(t);
    const double y = R * (1.0 - std::cos(t));
    const bool ok = x <= 2.0 * std::sqrt(R * y) && x >= 0.5 * std::sqrt(R * y) &&
                    y <= 4.0 * x * x / R && y >= x * x / (4.0 * R);
    rep.all_hold = rep.all_hold && ok;
    rep.worst_upper_x = std::max(rep.worst_upper_x, x / (2.0 * std::sqrt(R * y)));
    rep.worst_lower_x = std::min(rep.worst_lower_x, x / (0.5 * std::sqrt(R * y)));
    if (t < min_angle) {
      min_angle = t;
      rep.limit_ratio = x / std::sqrt(R * y);
    }
  }
  return rep;
}

}  // namespace aslab::geo
