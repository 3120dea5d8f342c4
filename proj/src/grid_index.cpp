#include "aslab/grid_index.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace aslab {

namespace {

int max_level_for_dim(int dim) {
  switch (dim) {
    case 1: return 40;
    case 2: return 31;
    default: return 20;
  }
}

}  // namespace

GridIndex::GridIndex(const PointCloud& cloud, int max_level)
    : dim_(cloud.dim), pts_(cloud.pts) {
  if (dim_ < 1 || dim_ > 3) throw std::invalid_argument("GridIndex: dim in [1,3]");
  if (cloud.size() == 0) throw std::invalid_argument("GridIndex: empty cloud");
  max_level_ = std::min(max_level, max_level_for_dim(dim_));

  const auto box = cloud.bounding_box();
  origin_ = box.min();
  base_side_ = std::max(box.sizes().maxCoeff(), 1e-300) * (1.0 + 1e-12);

  keys_.resize(size_t(max_level_) + 1);
  rep_.resize(size_t(max_level_) + 1);
  std::vector<std::pair<uint64_t, Eigen::Index>> tagged(size_t(cloud.size()));
  for (int L = 0; L <= max_level_; ++L) {
    const double side = cell_side(L);
    const int64_t cap = int64_t(1ull << L) - 1;
    for (Eigen::Index j = 0; j < cloud.size(); ++j) {
      Eigen::VectorXi cell(dim_);
      for (int i = 0; i < dim_; ++i) {
        int64_t v = int64_t(std::floor((pts_(i, j) - origin_(i)) / side));
        cell(i) = int(std::clamp<int64_t>(v, 0, cap));
      }
      tagged[size_t(j)] = {morton_key(cell, dim_, L), j};
    }
    std::sort(tagged.begin(), tagged.end());
    auto& ks = keys_[size_t(L)];
    auto& rs = rep_[size_t(L)];
    for (const auto& [k, j] : tagged) {
      if (ks.empty() || ks.back() != k) {
        ks.push_back(k);
        rs.push_back(j);
      }
    }
  }
}

uint64_t GridIndex::morton_key(const Eigen::VectorXi& cell, int dim, int level) {
  uint64_t key = 0;
  for (int b = 0; b < level; ++b)
    for (int i = 0; i < dim; ++i)
      key |= ((uint64_t(cell(i)) >> b) & 1ull) << (uint64_t(b) * dim + i);
  return key;
}

bool GridIndex::cell_box(int level, uint64_t key, Eigen::VectorXd& lo,
                         Eigen::VectorXd& hi) const {
  lo.resize(dim_);
  hi.resize(dim_);
  const double side = cell_side(level);
  for (int i = 0; i < dim_; ++i) {
    uint64_t c = 0;
    for (int b = 0; b < level; ++b)
      c |= ((key >> (uint64_t(b) * dim_ + i)) & 1ull) << b;
    lo(i) = origin_(i) + double(c) * side;
    hi(i) = lo(i) + side;
  }
  return true;
}

void GridIndex::count_recurse(const Eigen::VectorXd& center, double R, int fine,
                              int level, uint64_t key, Eigen::Index& acc) const {
  Eigen::VectorXd lo, hi;
  cell_box(level, key, lo, hi);
  double min2 = 0.0, max2 = 0.0;
  for (int i = 0; i < dim_; ++i) {
    const double below = lo(i) - center(i), above = center(i) - hi(i);
    const double d = std::max({below, above, 0.0});
    min2 += d * d;
    const double far = std::max(std::abs(center(i) - lo(i)),
                                std::abs(center(i) - hi(i)));
    max2 += far * far;
  }
  const double R2 = R * R;
  if (min2 > R2) return;  // subtree entirely outside the ball

  const auto& fine_keys = keys_[size_t(fine)];
  const int shift = (fine - level) * dim_;
  if (level == fine) {
    ++acc;
    return;
  }
  if (max2 <= R2) {  // subtree entirely inside: count descendants by range
    const uint64_t first = key << shift;
    const uint64_t last = (key + 1) << shift;
    const auto a = std::lower_bound(fine_keys.begin(), fine_keys.end(), first);
    const auto b = std::lower_bound(fine_keys.begin(), fine_keys.end(), last);
    acc += Eigen::Index(b - a);
    return;
  }
  // recurse into occupied children only
  const auto& child_keys = keys_[size_t(level) + 1];
  const uint64_t first = key << dim_;
  const uint64_t last = (key + 1) << dim_;
  auto a = std::lower_bound(child_keys.begin(), child_keys.end(), first);
  const auto b = std::lower_bound(child_keys.begin(), child_keys.end(), last);
  for (; a != b; ++a) count_recurse(center, R, fine, level + 1, *a, acc);
}

Eigen::Index GridIndex::ball_covering_count(const Eigen::VectorXd& center,
                                            double R, int fine) const {
  if (fine < 0 || fine > max_level_)
    throw std::out_of_range("ball_covering_count: level out of range");
  Eigen::Index acc = 0;
  for (uint64_t root : keys_[0]) count_recurse(center, R, fine, 0, root, acc);
  return acc;
}

std::vector<Eigen::VectorXd> GridIndex::representatives(int level) const {
  std::vector<Eigen::VectorXd> out;
  out.reserve(rep_[size_t(level)].size());
  for (Eigen::Index j : rep_[size_t(level)])
    out.push_back(pts_.col(j).head(dim_));
  return out;
}

Eigen::Index GridIndex::ball_covering_count_exact(const PointCloud& cloud,
                                                  const Eigen::VectorXd& center,
                                                  double R, int fine) const {
  // same semantics as the pruned counter: occupied fine cells whose closed
  // box meets B(center, R)
  Eigen::Index acc = 0;
  Eigen::VectorXd lo, hi;
  for (uint64_t k : keys_[size_t(fine)]) {
    cell_box(fine, k, lo, hi);
    double min2 = 0.0;
    for (int i = 0; i < dim_; ++i) {
      const double d = std::max({lo(i) - center(i), center(i) - hi(i), 0.0});
      min2 += d * d;
    }
    if (min2 <= R * R) ++acc;
  }
  (void)cloud;
  return acc;
}

}  // namespace aslab
