#include "aslab/mobius.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace aslab::geo {

namespace {

// Quaternion q = w + xi + yj + zk as Vector4d (w, x, y, z).
using Quat = Eigen::Vector4d;

Quat qmul(const Quat& p, const Quat& q) {
  return Quat(p[0] * q[0] - p[1] * q[1] - p[2] * q[2] - p[3] * q[3],
              p[0] * q[1] + p[1] * q[0] + p[2] * q[3] - p[3] * q[2],
              p[0] * q[2] - p[1] * q[3] + p[2] * q[0] + p[3] * q[1],
              p[0] * q[3] + p[1] * q[2] - p[2] * q[1] + p[3] * q[0]);
}

Quat qinv(const Quat& q) {
  const double n2 = q.squaredNorm();
  return Quat(q[0], -q[1], -q[2], -q[3]) / n2;
}

Quat from_complex(Complex z) { return Quat(z.real(), z.imag(), 0.0, 0.0); }

}  // namespace

MobiusMap::MobiusMap(Complex a_, Complex b_, Complex c_, Complex d_)
    : a(a_), b(b_), c(c_), d(d_) {
  const Complex det = a * d - b * c;
  if (std::abs(det) < 1e-14)
    throw std::invalid_argument("MobiusMap: singular matrix");
  const Complex s = std::sqrt(det);
  a /= s; b /= s; c /= s; d /= s;
}

bool MobiusMap::is_parabolic(double tol) const {
  if (std::abs(c) < 1e-14 && std::abs(a - d) < 1e-14 && std::abs(b) > 1e-14)
    return true;  // translation
  const bool identity = std::abs(b) < 1e-14 && std::abs(c) < 1e-14 &&
                        std::abs(a - d) < 1e-14;
  return !identity && std::abs(std::abs(trace()) - 2.0) < tol;
}

Complex MobiusMap::parabolic_fixed_point() const {
  if (std::abs(c) < 1e-14)
    throw std::invalid_argument("parabolic_fixed_point: fixed point at infinity");
  return (a - d) / (2.0 * c);
}

Complex MobiusMap::apply(Complex z) const {
  const Complex den = c * z + d;
  if (std::abs(den) < 1e-300)
    return std::numeric_limits<double>::infinity();
  return (a * z + b) / den;
}

MobiusMap MobiusMap::compose(const MobiusMap& g) const {
  return MobiusMap(a * g.a + b * g.c, a * g.b + b * g.d,
                   c * g.a + d * g.c, c * g.b + d * g.d);
}

Vec MobiusMap::apply_halfspace(const Vec& w) const {
  // (aw + b)(cw + d)^{-1} with w = x + yi + tj; the k component of the
  // result vanishes identically for this form.
  const Quat q(w[0], w[1], w[2], 0.0);
  const Quat num = qmul(from_complex(a), q) + from_complex(b);
  const Quat den = qmul(from_complex(c), q) + from_complex(d);
  const Quat r = qmul(num, qinv(den));
  Vec out = Vec::Zero();
  out[0] = r[0];
  out[1] = r[1];
  out[2] = std::abs(r[2]);
  return out;
}

double image_horoball_diameter(const MobiusMap& g, Complex p, double t) {
  // Write H(p, t) = S(H_inf(1/t)) with S(z) = p - 1/z; the image of the
  // height-h horoball at infinity under a map with lower row (c, d) has
  // diameter 1/(h |c|^2), so |g(H(p,t))| = t / |c p + d|^2.
  const Complex cp_d = g.c * p + g.d;
  if (std::abs(cp_d) < 1e-14)
    throw std::invalid_argument("image_horoball_diameter: image based at infinity");
  return t / std::norm(cp_d);
}

std::vector<HoroballOrbitStep> horoball_radius_sequence(
    const MobiusMap& f, Complex seed_base, double seed_diameter, int n_max) {
  if (!f.is_parabolic())
    throw std::invalid_argument("horoball_radius_sequence: map is not parabolic");
  const Complex p = f.parabolic_fixed_point();
  std::vector<HoroballOrbitStep> out;
  out.reserve(n_max);
  MobiusMap fn = f;
  for (int n = 1; n <= n_max; ++n) {
    const Complex q = fn.apply(seed_base);
    out.push_back({std::abs(q - p),
                   image_horoball_diameter(fn, seed_base, seed_diameter)});
    fn = f.compose(fn);
  }
  return out;
}

}  // namespace aslab::geo
