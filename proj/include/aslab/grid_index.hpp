#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <vector>

#include "aslab/cloud.hpp"

namespace aslab {

// Dyadic grid hierarchy over a point cloud.  Level L cells have side
// 2^-L * base_side; occupied cells per level are stored as sorted Morton
// keys, so "count level-l descendants of a key range" is two binary
// searches and subtree pruning works on key prefixes.
class GridIndex {
 public:
  GridIndex(const PointCloud& cloud, int max_level);

  int dim() const { return dim_; }
  int max_level() const { return max_level_; }
  double base_side() const { return base_side_; }
  Eigen::VectorXd origin() const { return origin_; }
  double cell_side(int level) const { return base_side_ / double(1ull << level); }

  // number of occupied level-`level` cells in the whole cloud
  Eigen::Index occupied_cells(int level) const {
    return Eigen::Index(keys_[size_t(level)].size());
  }

  // occupied level-`fine` cells whose cell box intersects the closed ball
  // B(center, R); prunes whole subtrees that lie inside or outside.
  Eigen::Index ball_covering_count(const Eigen::VectorXd& center, double R,
                                   int fine) const;

  // one representative point (a cloud point) per occupied cell of `level`
  std::vector<Eigen::VectorXd> representatives(int level) const;

  // exact count of level-`fine` cells hit by cloud points within B(center,R);
  // O(n), for cross-checking the pruned counter in tests
  Eigen::Index ball_covering_count_exact(const PointCloud& cloud,
                                         const Eigen::VectorXd& center,
                                         double R, int fine) const;

  static uint64_t morton_key(const Eigen::VectorXi& cell, int dim, int level);

 private:
  int dim_;
  int max_level_;
  double base_side_;
  Eigen::VectorXd origin_;
  // keys_[L]: sorted Morton keys of occupied level-L cells
  std::vector<std::vector<uint64_t>> keys_;
  // rep_[L][i]: index into the cloud of one point in that cell
  std::vector<std::vector<Eigen::Index>> rep_;
  const Eigen::MatrixXd pts_;

  void count_recurse(const Eigen::VectorXd& center, double R, int fine,
                     int level, uint64_t key, Eigen::Index& acc) const;
  bool cell_box(int level, uint64_t key, Eigen::VectorXd& lo,
                Eigen::VectorXd& hi) const;
};

}  // namespace aslab
