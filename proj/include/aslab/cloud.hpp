#pragma once

#include <Eigen/Core>
#include <Eigen/Geometry>
#include <string>
#include <vector>

namespace aslab {

// A finite sample of a fractal set.  Points are columns; `dim` is the
// ambient dimension actually used (columns are padded with zeros above it).
struct PointCloud {
  int dim = 2;
  Eigen::MatrixXd pts;  // dim x n
  double eps_min = 0.0;     // resolution: below this scale the sample is blind
  // radius within which every point of the underlying set has a sample:
  // 0 = the sample is the set (exact), negative = unknown
  double coverage = -1.0;
  std::string provenance;   // generator tag, e.g. "apollonian seed=7"
  bool truncated = false;   // true if the generator hit its point cap
  Eigen::MatrixXd special_points;  // dim x k, e.g. parabolic points

  Eigen::Index size() const { return pts.cols(); }
  Eigen::AlignedBox<double, Eigen::Dynamic> bounding_box() const;

  // 1st percentile of nearest-neighbour distances; the natural eps_min for
  // a generated sample.
  double nearest_neighbour_percentile(double pct = 1.0) const;
};

// CSV: '#' header lines (dim, eps_min, provenance, truncated) then one
// point per row.  Binary twin: magic "ASLB1", little-endian f64.
void save_cloud_csv(const PointCloud& c, const std::string& path);
PointCloud load_cloud_csv(const std::string& path);
void save_cloud_binary(const PointCloud& c, const std::string& path);
PointCloud load_cloud_binary(const std::string& path);

// write-to-temp-then-rename so readers never see a partial file
void atomic_write(const std::string& path, const std::string& contents);

}  // namespace aslab
