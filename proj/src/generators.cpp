#include "aslab/generators.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace aslab::gen {

using Complex = std::complex<double>;

PointCloud decreasing_sequence(int p, int n_max) {
  if (p < 1 || n_max < 2) throw std::invalid_argument("decreasing_sequence");
  PointCloud c;
  c.dim = 1;
  c.pts.resize(1, n_max + 1);
  for (int n = 1; n <= n_max; ++n)
    c.pts(0, n - 1) = std::pow(double(n), -1.0 / p);
  c.pts(0, n_max) = 0.0;
  // tail gap ~ (1/p) n^{-1/p - 1} is the finest resolved feature
  c.eps_min = c.pts(0, n_max - 2) - c.pts(0, n_max - 1);
  c.coverage = 0.0;  // the sample is the whole set
  std::ostringstream prov;
  prov << "decreasing_sequence p=" << p << " n_max=" << n_max;
  c.provenance = prov.str();
  c.special_points.resize(1, 1);
  c.special_points(0, 0) = 0.0;
  return c;
}

PointCloud inverted_lattice(int k, int n_max) {
  if (k < 1 || k > 3 || n_max < 2) throw std::invalid_argument("inverted_lattice");
  PointCloud c;
  c.dim = k;
  Eigen::Index total = 1;
  for (int i = 0; i < k; ++i) total *= n_max;
  c.pts.resize(k, total);
  std::vector<int> idx(k, 1);
  for (Eigen::Index j = 0; j < total; ++j) {
    for (int i = 0; i < k; ++i) c.pts(i, j) = 1.0 / idx[i];
    for (int i = 0; i < k; ++i) {
      if (++idx[i] <= n_max) break;
      idx[i] = 1;
    }
  }
  c.eps_min = 1.0 / double(n_max - 1) - 1.0 / double(n_max);
  c.coverage = 0.0;  // the sample is the whole set
  std::ostringstream prov;
  prov << "inverted_lattice k=" << k << " n_max=" << n_max;
  c.provenance = prov.str();
  c.special_points = Eigen::MatrixXd::Zero(k, 1);
  return c;
}

namespace {

// Orbits of interest stay bounded in the plane; the chordal (sphere)
// metric is bi-Lipschitz to the Euclidean one there, so dimensions agree.
bool planar_ok(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag()) &&
         std::norm(z) < 1e8;
}

struct GridKey {
  int64_t x, y, z;
  bool operator==(const GridKey& o) const {
    return x == o.x && y == o.y && z == o.z;
  }
};

struct GridKeyHash {
  size_t operator()(const GridKey& k) const {
    uint64_t h = 1469598103934665603ull;
    for (int64_t v : {k.x, k.y, k.z}) {
      h ^= uint64_t(v);
      h *= 1099511628211ull;
    }
    return size_t(h);
  }
};

}  // namespace

std::vector<MobiusMap> apollonian_generators() {
  const Complex i(0.0, 1.0);
  MobiusMap a(1.0, 0.0, -2.0 * i, 1.0);
  MobiusMap b(1.0 - i, 1.0, 1.0, 1.0 + i);
  return {a, b, a.inverse(), b.inverse()};
}

PointCloud kleinian_orbit(const std::vector<MobiusMap>& gens,
                          const KleinianOrbitOptions& opt) {
  if (gens.size() % 2 != 0 || gens.empty())
    throw std::invalid_argument("kleinian_orbit: gens must be [g..., g^-1...]");
  const int half = int(gens.size()) / 2;
  auto inverse_of = [&](int s) { return (s + half) % int(gens.size()); };

  // Anchor points inside the limit set: fixed points of the parabolic
  // generators (and the first commutator, when it is parabolic too).
  std::vector<Complex> anchors;
  for (const auto& g : gens)
    if (g.is_parabolic()) anchors.push_back(g.parabolic_fixed_point());
  if (half >= 2) {
    const MobiusMap comm = gens[0]
                               .compose(gens[1])
                               .compose(gens[inverse_of(0)])
                               .compose(gens[inverse_of(1)]);
    if (comm.is_parabolic()) anchors.push_back(comm.parabolic_fixed_point());
  }
  if (anchors.size() < 2)
    throw std::invalid_argument("kleinian_orbit: need parabolic anchors");

  std::unordered_set<GridKey, GridKeyHash> seen;
  std::vector<Eigen::Vector2d> out;
  std::vector<Eigen::Vector2d> specials;
  bool truncated = false;

  auto emit = [&](Complex z) {
    if (!planar_ok(z)) return;
    if (Eigen::Index(out.size()) >= opt.max_points) {
      truncated = true;
      return;
    }
    const Eigen::Vector2d p(z.real(), z.imag());
    GridKey key{int64_t(std::floor(p.x() / opt.dedup_cell)),
                int64_t(std::floor(p.y() / opt.dedup_cell)), 0};
    if (seen.insert(key).second) out.push_back(p);
  };

  for (Complex z : anchors) {
    emit(z);
    specials.push_back({z.real(), z.imag()});
  }

  // Depth-first over reduced words; a branch stops when the images of the
  // anchors have collapsed below eps_proj (chordal diameter on the sphere).
  struct Frame {
    MobiusMap g;
    int last;  // last letter, or -1 at the root
  };
  std::vector<Frame> stack;
  stack.push_back({MobiusMap(), -1});
  const int max_depth = 192;
  std::vector<int> depth_stack{0};

  while (!stack.empty() && !truncated) {
    const Frame f = stack.back();
    stack.pop_back();
    const int depth = depth_stack.back();
    depth_stack.pop_back();
    for (int s = 0; s < int(gens.size()); ++s) {
      if (f.last >= 0 && s == inverse_of(f.last)) continue;
      const MobiusMap g = f.g.compose(gens[s]);
      std::vector<Eigen::Vector2d> imgs;
      for (Complex z : anchors) {
        const Complex w = g.apply(z);
        if (planar_ok(w)) imgs.push_back({w.real(), w.imag()});
      }
      double diam = imgs.size() == anchors.size()
                        ? 0.0
                        : std::numeric_limits<double>::infinity();
      for (size_t i = 0; i < imgs.size(); ++i)
        for (size_t j = i + 1; j < imgs.size(); ++j)
          diam = std::max(diam, (imgs[i] - imgs[j]).norm());
      for (Complex z : anchors) emit(g.apply(z));
      if (truncated) break;
      if (diam > opt.eps_proj && depth + 1 < max_depth) {
        stack.push_back({g, s});
        depth_stack.push_back(depth + 1);
      }
    }
  }

  PointCloud c;
  c.dim = 2;
  c.pts.resize(2, Eigen::Index(out.size()));
  for (Eigen::Index j = 0; j < Eigen::Index(out.size()); ++j)
    c.pts.col(j) = out[size_t(j)];
  c.truncated = truncated;
  c.eps_min = opt.eps_proj;
  // the word pruning rule guarantees every limit point is within eps_proj
  // of an emitted point (unless the point cap cut the search short)
  c.coverage = truncated ? -1.0 : opt.eps_proj;
  std::ostringstream prov;
  prov << "kleinian_orbit gens=" << gens.size() << " eps_proj=" << opt.eps_proj;
  c.provenance = prov.str();
  c.special_points.resize(2, Eigen::Index(specials.size()));
  for (Eigen::Index j = 0; j < Eigen::Index(specials.size()); ++j)
    c.special_points.col(j) = specials[size_t(j)];
  return c;
}

std::vector<Complex> poly_roots(const std::vector<Complex>& coeffs) {
  // coeffs[0] + coeffs[1] z + ... + coeffs[n] z^n, coeffs[n] != 0
  int n = int(coeffs.size()) - 1;
  while (n > 0 && std::abs(coeffs[size_t(n)]) < 1e-300) --n;
  if (n < 1) throw std::invalid_argument("poly_roots: degree < 1");
  Eigen::MatrixXcd comp = Eigen::MatrixXcd::Zero(n, n);
  for (int i = 1; i < n; ++i) comp(i, i - 1) = 1.0;
  for (int i = 0; i < n; ++i) comp(i, n - 1) = -coeffs[size_t(i)] / coeffs[size_t(n)];
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(comp, /*computeEigenvectors=*/false);
  std::vector<Complex> out(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out[size_t(i)] = es.eigenvalues()(i);
  return out;
}

namespace {

PointCloud inverse_iterate(const std::function<std::vector<Complex>(Complex)>& preimages,
                           Complex z0, const std::vector<Complex>& specials,
                           const std::string& prov, const JuliaOptions& opt) {
  std::mt19937_64 rng(opt.seed);
  PointCloud c;
  c.dim = 2;
  c.pts.resize(2, opt.n_points);
  // Walkers seeded on a short backward tree of the parabolic point:
  // a single random walk follows the balanced measure and undersamples the
  // cusp region, many interleaved walks from cusp preimages do not.
  std::vector<Complex> walkers{z0};
  for (Complex s0 : specials) walkers.push_back(s0);
  while (walkers.size() < 256) {
    std::vector<Complex> next;
    for (Complex w : walkers)
      for (Complex q : preimages(w)) next.push_back(q);
    walkers = std::move(next);
  }
  for (auto& w : walkers)
    for (int i = 0; i < opt.burn_in; ++i) {
      auto pre = preimages(w);
      w = pre[rng() % pre.size()];
    }
  // The backward walk equidistributes for the balanced measure, which is far
  // from uniform over the set; cap the samples stored per fine grid cell so
  // extra walk steps fill the rarely visited regions instead.
  const double store_cell = 2.0e-5;
  const Eigen::Index cell_cap = 4;
  std::unordered_map<int64_t, Eigen::Index> cell_fill;
  const int64_t step_budget = int64_t(opt.n_points) * 96;
  Eigen::Index stored = 0;
  for (int64_t step = 0; stored < opt.n_points && step < step_budget; ++step) {
    Complex& z = walkers[size_t(step) % walkers.size()];
    auto pre = preimages(z);
    z = pre[rng() % pre.size()];
    const int64_t kx = int64_t(std::floor(z.real() / store_cell));
    const int64_t ky = int64_t(std::floor(z.imag() / store_cell));
    auto& fill = cell_fill[(kx << 26) ^ (ky & ((int64_t(1) << 26) - 1))];
    if (fill >= cell_cap) continue;
    ++fill;
    c.pts(0, stored) = z.real();
    c.pts(1, stored) = z.imag();
    ++stored;
  }
  c.pts.conservativeResize(2, stored);
  c.provenance = prov;
  c.eps_min = c.nearest_neighbour_percentile(1.0);
  // random backward orbits give no net guarantee; the high NN quantile is
  // an empirical proxy for the largest unsampled gaps
  c.coverage = c.nearest_neighbour_percentile(99.9);
  c.special_points.resize(2, Eigen::Index(specials.size()));
  for (size_t j = 0; j < specials.size(); ++j) {
    c.special_points(0, Eigen::Index(j)) = specials[j].real();
    c.special_points(1, Eigen::Index(j)) = specials[j].imag();
  }
  return c;
}

}  // namespace

PointCloud cauliflower_julia(const JuliaOptions& opt) {
  auto preimages = [](Complex w) {
    const Complex s = std::sqrt(w - 0.25);
    return std::vector<Complex>{s, -s};
  };
  std::ostringstream prov;
  prov << "cauliflower seed=" << opt.seed << " n=" << opt.n_points;
  return inverse_iterate(preimages, Complex(2.0, 0.0),
                         {Complex(0.5, 0.0), Complex(-0.5, 0.0)}, prov.str(), opt);
}

PointCloud petal_julia(int p, const JuliaOptions& opt) {
  if (p < 1 || p > 8) throw std::invalid_argument("petal_julia: p in [1,8]");
  auto preimages = [p](Complex w) {
    // solve z + z^{p+1} = w
    std::vector<Complex> coeffs(size_t(p) + 2, Complex(0.0));
    coeffs[0] = -w;
    coeffs[1] = 1.0;
    coeffs[size_t(p) + 1] = 1.0;
    return poly_roots(coeffs);
  };
  std::vector<Complex> specials{Complex(0.0, 0.0)};
  for (int k = 0; k < p; ++k) {
    const double ang = (2.0 * k + 1.0) * M_PI / p;
    specials.push_back(std::polar(1.0, ang));  // roots of z^p = -1
  }
  std::ostringstream prov;
  prov << "petal p=" << p << " seed=" << opt.seed << " n=" << opt.n_points;
  return inverse_iterate(preimages, Complex(1.0, 1.0), specials, prov.str(), opt);
}

}  // namespace aslab::gen
