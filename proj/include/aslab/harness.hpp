#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aslab/cloud.hpp"
#include "aslab/formulas.hpp"

namespace aslab::cli {

struct RunConfig {
  int schema = 1;
  std::string preset;            // apollonian|cauliflower|petal1..4|zlattice1|zlattice2
  std::string cloud_file;        // alternative to preset for estimate/plot
  uint64_t seed = 1;
  std::string out = ".";
  double tolerance = 0.1;
  std::vector<double> theta_grid;  // default: 33 points in [0.03, 0.99]
  bool raw_ratios = false;

  // closed-form model, used by predict/compare and the oracle estimates
  std::optional<formulas::KleinianParams> kleinian;
  std::optional<formulas::JuliaParams> julia;

  static RunConfig from_json_file(const std::string& path);
};

std::vector<double> default_theta_grid();

// exit codes: 0 ok, 1 comparison/selftest failure, 2 bad config or
// parameters, 3 scale-window violation
int run(const std::vector<std::string>& args);

PointCloud generate_preset(const std::string& preset, uint64_t seed);

struct PredictionRow {
  double theta;
  double set_assouad, set_lower, measure_assouad, measure_lower;
};

std::vector<PredictionRow> predict_rows(const RunConfig& cfg);
std::string predictions_csv(const std::vector<PredictionRow>& rows);
std::string summary_json(const RunConfig& cfg);

struct EstimateRow {
  double theta;           // 0 for scale-free kinds (box, assouad, lower)
  std::string kind;       // box|assouad|lower|assouad_theta|lower_theta|
                          // measure_assouad_theta|measure_lower_theta
  double value;
  double half_width;
  double witness;         // coarse scale of the witnessing pair
};

std::string estimates_csv(const std::vector<EstimateRow>& rows);

// SVG spectrum plot: set curves solid, measure curves dashed, Assouad
// black, lower grey; coordinates rounded to 1e-6.
std::string spectra_svg(const std::vector<PredictionRow>& predictions,
                        const std::vector<EstimateRow>& estimates);

int selftest(bool verbose);

}  // namespace aslab::cli
