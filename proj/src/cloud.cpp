#include "aslab/cloud.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <limits>
#include <random>
#include <unordered_map>
#include <sstream>
#include <stdexcept>

namespace aslab {

Eigen::AlignedBox<double, Eigen::Dynamic> PointCloud::bounding_box() const {
  Eigen::AlignedBox<double, Eigen::Dynamic> box(dim);
  for (Eigen::Index j = 0; j < pts.cols(); ++j)
    box.extend(Eigen::VectorXd(pts.col(j).head(dim)));
  return box;
}

double PointCloud::nearest_neighbour_percentile(double pct) const {
  const Eigen::Index n = pts.cols();
  if (n < 2) return 0.0;
  // hash-grid accelerated: exact as long as the true NN is within one ring
  // of cells, which the adaptive cell size makes overwhelmingly likely
  const auto box = bounding_box();
  const double extent = std::max(box.sizes().maxCoeff(), 1e-300);
  const double cell = extent / std::max(4.0, std::floor(std::pow(double(n), 1.0 / dim)));
  auto key_of = [&](const Eigen::VectorXd& p) {
    int64_t k = 0;
    for (int i = 0; i < dim; ++i)
      k = k * 73856093 + int64_t(std::floor((p(i) - box.min()(i)) / cell));
    return k;
  };
  std::unordered_multimap<int64_t, Eigen::Index> grid;
  grid.reserve(size_t(n));
  for (Eigen::Index j = 0; j < n; ++j)
    grid.emplace(key_of(Eigen::VectorXd(pts.col(j).head(dim))), j);

  const Eigen::Index m = std::min<Eigen::Index>(n, 4000);
  std::mt19937_64 rng(12345);
  std::vector<Eigen::Index> idx(static_cast<size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) idx[size_t(i)] = i;
  if (m < n) std::shuffle(idx.begin(), idx.end(), rng);
  std::vector<double> nn;
  for (Eigen::Index i = 0; i < m; ++i) {
    const Eigen::VectorXd p = pts.col(idx[size_t(i)]).head(dim);
    double best = std::numeric_limits<double>::infinity();
    for (int ring = 1; ring <= 1 << 12; ring *= 2) {
      Eigen::VectorXi base(dim);
      for (int k = 0; k < dim; ++k)
        base(k) = int(std::floor((p(k) - box.min()(k)) / cell));
      std::vector<int> off(size_t(dim), -ring);
      bool more = true;
      while (more) {
        int64_t key = 0;
        for (int k = 0; k < dim; ++k)
          key = key * 73856093 + (base(k) + off[size_t(k)]);
        for (auto [it, end] = grid.equal_range(key); it != end; ++it) {
          if (it->second == idx[size_t(i)]) continue;
          const double d2 = (pts.col(it->second).head(dim) - p).squaredNorm();
          best = std::min(best, d2);
        }
        more = false;
        for (int k = 0; k < dim; ++k) {
          if (++off[size_t(k)] <= ring) {
            more = true;
            break;
          }
          off[size_t(k)] = -ring;
        }
      }
      if (best <= double(ring) * cell * double(ring) * cell) break;
    }
    nn.push_back(std::sqrt(best));
  }
  std::sort(nn.begin(), nn.end());
  const auto k = std::min<size_t>(nn.size() - 1,
                                  size_t(pct / 100.0 * double(nn.size())));
  return nn[k];
}

void atomic_write(const std::string& path, const std::string& contents) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(contents.data(), std::streamsize(contents.size()));
    if (!out) throw std::runtime_error("short write to " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

void save_cloud_csv(const PointCloud& c, const std::string& path) {
  std::ostringstream out;
  out.precision(17);
  out << "# dim " << c.dim << "\n";
  out << "# eps_min " << c.eps_min << "\n";
  out << "# coverage " << c.coverage << "\n";
  out << "# provenance " << c.provenance << "\n";
  out << "# truncated " << (c.truncated ? 1 : 0) << "\n";
  for (Eigen::Index j = 0; j < c.special_points.cols(); ++j) {
    out << "# special";
    for (int i = 0; i < c.dim; ++i) out << ' ' << c.special_points(i, j);
    out << "\n";
  }
  for (Eigen::Index j = 0; j < c.pts.cols(); ++j) {
    for (int i = 0; i < c.dim; ++i)
      out << (i ? "," : "") << c.pts(i, j);
    out << "\n";
  }
  atomic_write(path, out.str());
}

PointCloud load_cloud_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  PointCloud c;
  std::vector<double> vals;
  Eigen::Index n = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == '#') {
      std::istringstream h(line.substr(1));
      std::string key;
      h >> key;
      if (key == "dim") h >> c.dim;
      else if (key == "eps_min") h >> c.eps_min;
      else if (key == "coverage") h >> c.coverage;
      else if (key == "truncated") { int t = 0; h >> t; c.truncated = t != 0; }
      else if (key == "special") {
        Eigen::VectorXd s(c.dim);
        for (int i = 0; i < c.dim; ++i) h >> s(i);
        c.special_points.conservativeResize(c.dim, c.special_points.cols() + 1);
        c.special_points.col(c.special_points.cols() - 1) = s;
      }
      else if (key == "provenance") {
        std::getline(h, c.provenance);
        const auto pos = c.provenance.find_first_not_of(' ');
        c.provenance = pos == std::string::npos ? "" : c.provenance.substr(pos);
      }
      continue;
    }
    std::istringstream row(line);
    std::string cell;
    int i = 0;
    while (std::getline(row, cell, ',')) {
      vals.push_back(std::stod(cell));
      ++i;
    }
    if (i != c.dim) throw std::runtime_error("row width mismatch in " + path);
    ++n;
  }
  c.pts.resize(c.dim, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (int i = 0; i < c.dim; ++i) c.pts(i, j) = vals[size_t(j) * c.dim + i];
  return c;
}

namespace {

template <class T>
void put(std::string& s, T v) {
  static_assert(std::is_trivially_copyable_v<T>);
  char buf[sizeof(T)];
  std::memcpy(buf, &v, sizeof(T));
  s.append(buf, sizeof(T));
}

template <class T>
T get(std::istream& in) {
  T v;
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw std::runtime_error("truncated binary cloud file");
  return v;
}

}  // namespace

void save_cloud_binary(const PointCloud& c, const std::string& path) {
  std::string out;
  out.append("ASLB1", 5);
  put<int32_t>(out, c.dim);
  put<int64_t>(out, c.pts.cols());
  put<double>(out, c.eps_min);
  put<double>(out, c.coverage);
  put<uint8_t>(out, c.truncated ? 1 : 0);
  put<int32_t>(out, int32_t(c.provenance.size()));
  out.append(c.provenance);
  put<int32_t>(out, int32_t(c.special_points.cols()));
  for (Eigen::Index j = 0; j < c.special_points.cols(); ++j)
    for (int i = 0; i < c.dim; ++i) put<double>(out, c.special_points(i, j));
  for (Eigen::Index j = 0; j < c.pts.cols(); ++j)
    for (int i = 0; i < c.dim; ++i) put<double>(out, c.pts(i, j));
  atomic_write(path, out);
}

PointCloud load_cloud_binary(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  char magic[5];
  in.read(magic, 5);
  if (!in || std::memcmp(magic, "ASLB1", 5) != 0)
    throw std::runtime_error("bad magic in " + path);
  PointCloud c;
  c.dim = get<int32_t>(in);
  const int64_t n = get<int64_t>(in);
  c.eps_min = get<double>(in);
  c.coverage = get<double>(in);
  c.truncated = get<uint8_t>(in) != 0;
  const int32_t plen = get<int32_t>(in);
  if (c.dim < 1 || c.dim > 8 || n < 0 || plen < 0 || plen > 1 << 20)
    throw std::runtime_error("corrupt header in " + path);
  c.provenance.resize(size_t(plen));
  in.read(c.provenance.data(), plen);
  const int32_t nspecial = get<int32_t>(in);
  if (nspecial < 0 || nspecial > 1 << 20)
    throw std::runtime_error("corrupt header in " + path);
  c.special_points.resize(c.dim, nspecial);
  for (Eigen::Index j = 0; j < nspecial; ++j)
    for (int i = 0; i < c.dim; ++i) c.special_points(i, j) = get<double>(in);
  c.pts.resize(c.dim, n);
  for (Eigen::Index j = 0; j < n; ++j)
    for (int i = 0; i < c.dim; ++i) c.pts(i, j) = get<double>(in);
  return c;
}

}  // namespace aslab
