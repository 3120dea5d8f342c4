#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "aslab/cloud.hpp"
#include "aslab/mobius.hpp"

namespace aslab::gen {

using geo::MobiusMap;

// { n^{-1/p} : n >= 1 } together with 0.  p = 1 is the classical 1/n set.
PointCloud decreasing_sequence(int p, int n_max);

// { (1/n_1, ..., 1/n_k) } inverted lattice in [0,1]^k, plus the axes limits.
PointCloud inverted_lattice(int k, int n_max);

struct KleinianOrbitOptions {
  int max_points = 2'000'000;
  double eps_proj = 1.3e-4;   // stop expanding a word once the anchor images
                            // have collapsed below this diameter
  double dedup_cell = 6.5e-5; // grid-snap duplicate removal
  uint64_t seed = 1;
};

// Limit-set sample of the group <gens>: depth-first over reduced words,
// emitting images of the parabolic fixed points, pruned once a word
// contracts below eps_proj.  Points are planar (the presets stay bounded).
PointCloud kleinian_orbit(const std::vector<MobiusMap>& gens,
                          const KleinianOrbitOptions& opt = {});

std::vector<MobiusMap> apollonian_generators();

struct JuliaOptions {
  int n_points = 2'000'000;
  int burn_in = 64;
  uint64_t seed = 1;
};

// Inverse-iteration sample of the Julia set of z^2 + 1/4 (parabolic fixed
// point 1/2, one petal).
PointCloud cauliflower_julia(const JuliaOptions& opt = {});

// f(z) = z (1 + z^p): parabolic at the origin with p petals.
PointCloud petal_julia(int p, const JuliaOptions& opt = {});

// roots of a complex monic polynomial via the companion matrix
std::vector<std::complex<double>> poly_roots(
    const std::vector<std::complex<double>>& coeffs_low_to_high);

}  // namespace aslab::gen
