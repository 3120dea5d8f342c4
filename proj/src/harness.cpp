#include "aslab/harness.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "aslab/estimators.hpp"
#include "aslab/generators.hpp"
#include "aslab/geometry.hpp"
#include "aslab/grid_index.hpp"
#include "aslab/measure_oracle.hpp"
#include "aslab/mobius.hpp"

namespace aslab::cli {

using nlohmann::json;

std::vector<double> default_theta_grid() {
  std::vector<double> g(33);
  for (int i = 0; i < 33; ++i) g[size_t(i)] = 0.03 + 0.03 * i;
  g.back() = 0.99;
  return g;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("config parse: ") + e.what());
  }
  RunConfig cfg;
  cfg.schema = j.value("schema", 0);
  if (cfg.schema != 1)
    throw std::invalid_argument("config: unsupported schema (want 1)");
  cfg.preset = j.value("preset", "");
  cfg.cloud_file = j.value("cloud_file", "");
  cfg.seed = j.value("seed", uint64_t(1));
  cfg.out = j.value("out", ".");
  cfg.tolerance = j.value("tolerance", 0.1);
  cfg.raw_ratios = j.value("raw_ratios", false);
  if (j.contains("theta_grid"))
    cfg.theta_grid = j["theta_grid"].get<std::vector<double>>();
  else
    cfg.theta_grid = default_theta_grid();
  for (double t : cfg.theta_grid)
    if (!(t > 0.0 && t < 1.0))
      throw std::invalid_argument("config: theta values must be in (0,1)");
  if (j.contains("model")) {
    const auto& m = j["model"];
    const std::string type = m.value("type", "");
    if (type == "kleinian") {
      formulas::KleinianParams p;
      p.delta = m.value("delta", 1.0);
      p.k_min = m.value("k_min", 1);
      p.k_max = m.value("k_max", 1);
      p.validate();
      cfg.kleinian = p;
    } else if (type == "julia") {
      formulas::JuliaParams p;
      p.h = m.value("h", 1.0);
      p.p_min = m.value("p_min", m.value("p_max", 1));
      p.p_max = m.value("p_max", 1);
      p.validate();
      cfg.julia = p;
    } else {
      throw std::invalid_argument("config: model.type must be kleinian|julia");
    }
  }
  return cfg;
}

PointCloud generate_preset(const std::string& preset, uint64_t seed) {
  if (preset == "apollonian") {
    gen::KleinianOrbitOptions opt;
    opt.seed = seed;
    return gen::kleinian_orbit(gen::apollonian_generators(), opt);
  }
  if (preset == "cauliflower") {
    gen::JuliaOptions opt;
    opt.seed = seed;
    return gen::cauliflower_julia(opt);
  }
  if (preset.rfind("petal", 0) == 0 && preset.size() == 6) {
    gen::JuliaOptions opt;
    opt.seed = seed;
    return gen::petal_julia(preset[5] - '0', opt);
  }
  if (preset == "zlattice1") return gen::inverted_lattice(1, 20000);
  if (preset == "zlattice2") return gen::inverted_lattice(2, 300);
  throw std::invalid_argument("unknown preset: " + preset);
}

std::vector<PredictionRow> predict_rows(const RunConfig& cfg) {
  using formulas::Mode;
  std::vector<PredictionRow> rows;
  if (!cfg.kleinian && !cfg.julia)
    throw std::invalid_argument("predict needs a model in the config");
  for (double t : cfg.theta_grid) {
    PredictionRow r{};
    r.theta = t;
    if (cfg.kleinian) {
      r.set_assouad = formulas::kleinian_set_spectrum(*cfg.kleinian, Mode::Assouad)(t);
      r.set_lower = formulas::kleinian_set_spectrum(*cfg.kleinian, Mode::Lower)(t);
      r.measure_assouad =
          formulas::kleinian_measure_spectrum(*cfg.kleinian, Mode::Assouad)(t);
      r.measure_lower =
          formulas::kleinian_measure_spectrum(*cfg.kleinian, Mode::Lower)(t);
    } else {
      r.set_assouad = formulas::julia_set_spectrum(*cfg.julia, Mode::Assouad)(t);
      r.set_lower = formulas::julia_set_spectrum(*cfg.julia, Mode::Lower)(t);
      r.measure_assouad =
          formulas::julia_measure_spectrum(*cfg.julia, Mode::Assouad)(t);
      r.measure_lower =
          formulas::julia_measure_spectrum(*cfg.julia, Mode::Lower)(t);
    }
    rows.push_back(r);
  }
  return rows;
}

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", v);
  return buf;
}

void write_file(const std::string& dir, const std::string& name,
                const std::string& contents) {
  std::filesystem::create_directories(dir);
  atomic_write((std::filesystem::path(dir) / name).string(), contents);
}

}  // namespace

std::string predictions_csv(const std::vector<PredictionRow>& rows) {
  std::ostringstream out;
  out << "theta,set_assouad,set_lower,measure_assouad,measure_lower\n";
  for (const auto& r : rows)
    out << fmt(r.theta) << ',' << fmt(r.set_assouad) << ',' << fmt(r.set_lower)
        << ',' << fmt(r.measure_assouad) << ',' << fmt(r.measure_lower) << '\n';
  return out.str();
}

std::string estimates_csv(const std::vector<EstimateRow>& rows) {
  std::ostringstream out;
  out << "theta,kind,value,half_width,witness\n";
  for (const auto& r : rows)
    out << fmt(r.theta) << ',' << r.kind << ',' << fmt(r.value) << ','
        << fmt(r.half_width) << ',' << fmt(r.witness) << '\n';
  return out.str();
}

std::string summary_json(const RunConfig& cfg) {
  using formulas::Mode;
  json j;
  j["schema"] = 1;
  if (cfg.kleinian) {
    const auto d = formulas::kleinian_dims(*cfg.kleinian);
    j["model"] = "kleinian";
    j["params"] = {{"delta", cfg.kleinian->delta},
                   {"k_min", cfg.kleinian->k_min},
                   {"k_max", cfg.kleinian->k_max}};
    j["dims"] = {{"set_assouad", d.set_assouad},
                 {"set_lower", d.set_lower},
                 {"measure_assouad", d.measure_assouad},
                 {"measure_lower", d.measure_lower},
                 {"hausdorff", d.hausdorff},
                 {"measure_box", formulas::kleinian_measure_box(*cfg.kleinian)}};
    for (auto [name, prof] :
         {std::pair{"set_assouad", formulas::kleinian_set_spectrum(
                                       *cfg.kleinian, Mode::Assouad)},
          std::pair{"set_lower",
                    formulas::kleinian_set_spectrum(*cfg.kleinian, Mode::Lower)},
          std::pair{"measure_assouad", formulas::kleinian_measure_spectrum(
                                           *cfg.kleinian, Mode::Assouad)},
          std::pair{"measure_lower", formulas::kleinian_measure_spectrum(
                                         *cfg.kleinian, Mode::Lower)}}) {
      j["endpoints"][name] = {prof.theta0_limit, prof.theta1_limit};
      if (prof.rho_pt) j["rho_pt"][name] = *prof.rho_pt;
    }
  } else if (cfg.julia) {
    const auto d = formulas::julia_dims(*cfg.julia);
    j["model"] = "julia";
    j["params"] = {{"h", cfg.julia->h},
                   {"p_min", cfg.julia->p_min},
                   {"p_max", cfg.julia->p_max}};
    j["dims"] = {{"set_assouad", d.set_assouad},
                 {"set_lower", d.set_lower},
                 {"measure_assouad", d.measure_assouad},
                 {"measure_lower", d.measure_lower},
                 {"measure_box", d.measure_box}};
    for (auto [name, prof] :
         {std::pair{"set_assouad",
                    formulas::julia_set_spectrum(*cfg.julia, Mode::Assouad)},
          std::pair{"set_lower",
                    formulas::julia_set_spectrum(*cfg.julia, Mode::Lower)},
          std::pair{"measure_assouad", formulas::julia_measure_spectrum(
                                           *cfg.julia, Mode::Assouad)},
          std::pair{"measure_lower", formulas::julia_measure_spectrum(
                                         *cfg.julia, Mode::Lower)}}) {
      j["endpoints"][name] = {prof.theta0_limit, prof.theta1_limit};
      if (prof.rho_pt) j["rho_pt"][name] = *prof.rho_pt;
    }
  } else {
    throw std::invalid_argument("summary needs a model in the config");
  }
  return j.dump(2) + "\n";
}

namespace {

std::vector<EstimateRow> estimate_rows(const RunConfig& cfg) {
  std::vector<EstimateRow> rows;

  if (!cfg.preset.empty() || !cfg.cloud_file.empty()) {
    PointCloud cloud = cfg.cloud_file.empty()
                           ? generate_preset(cfg.preset, cfg.seed)
                           : load_cloud_csv(cfg.cloud_file);
    GridIndex index(cloud, 24);
    const auto win = est::make_window(cloud, index);
    est::LocalOptions opt;
    opt.raw_ratios = cfg.raw_ratios;

    const auto box = est::box_dimension_estimate(index, win);
    rows.push_back({0.0, "box", box.value, box.half_width, box.witness_R});
    const auto ad = est::assouad_dimension_estimate(cloud, index, win, opt);
    rows.push_back({0.0, "assouad", ad.value, ad.half_width, ad.witness_R});
    const auto ld = est::lower_dimension_estimate(cloud, index, win, opt);
    rows.push_back({0.0, "lower", ld.value, ld.half_width, ld.witness_R});

    for (double t : cfg.theta_grid) {
      try {
        const auto as = est::assouad_spectrum_estimate(cloud, index, win, t, opt);
        rows.push_back({t, "assouad_theta", as.value, as.half_width, as.witness_R});
        const auto lo = est::lower_spectrum_estimate(cloud, index, win, t, opt);
        rows.push_back({t, "lower_theta", lo.value, lo.half_width, lo.witness_R});
      } catch (const std::runtime_error&) {
        std::cerr << "note: theta=" << t
                  << " outside the usable scale window, skipped\n";
      }
    }
  }

  if (cfg.kleinian || cfg.julia) {
    std::unique_ptr<est::MeasureOracle> oracle;
    if (cfg.kleinian)
      oracle = std::make_unique<est::SyntheticKleinianOracle>(*cfg.kleinian);
    else
      oracle = std::make_unique<est::SyntheticJuliaOracle>(*cfg.julia);
    rows.push_back({0.0, "measure_box", est::measure_box_estimate(*oracle), 0.0, 0.0});
    for (double t : cfg.theta_grid) {
      const auto ma =
          est::measure_spectrum_estimate(*oracle, t, formulas::Mode::Assouad);
      rows.push_back({t, "measure_assouad_theta", ma.value, 0.0, ma.witness_R});
      const auto ml =
          est::measure_spectrum_estimate(*oracle, t, formulas::Mode::Lower);
      rows.push_back({t, "measure_lower_theta", ml.value, 0.0, ml.witness_R});
    }
  }

  if (rows.empty())
    throw std::invalid_argument("estimate needs a preset, cloud_file, or model");
  return rows;
}

struct CompareResult {
  bool ok = true;
  json report;
};

CompareResult compare_rows(const RunConfig& cfg,
                           const std::vector<PredictionRow>& pred,
                           const std::vector<EstimateRow>& est) {
  CompareResult res;
  res.report["schema"] = 1;
  res.report["tolerance"] = cfg.tolerance;
  double worst = 0.0;
  json items = json::array();
  for (const auto& e : est) {
    double expect;
    if (e.kind == "measure_assouad_theta" || e.kind == "measure_lower_theta") {
      const PredictionRow* row = nullptr;
      for (const auto& p : pred)
        if (std::abs(p.theta - e.theta) < 1e-12) row = &p;
      if (!row) continue;
      expect = e.kind == "measure_assouad_theta" ? row->measure_assouad
                                                 : row->measure_lower;
    } else {
      continue;  // cloud estimates are reported, not gated
    }
    const double diff = std::abs(e.value - expect);
    worst = std::max(worst, diff);
    const bool ok = diff <= cfg.tolerance;
    res.ok = res.ok && ok;
    items.push_back({{"theta", e.theta},
                     {"kind", e.kind},
                     {"estimate", e.value},
                     {"expected", expect},
                     {"abs_diff", diff},
                     {"ok", ok}});
  }
  res.report["worst_abs_diff"] = worst;
  res.report["items"] = items;
  res.report["ok"] = res.ok;
  return res;
}

std::string svg_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

}  // namespace

std::string spectra_svg(const std::vector<PredictionRow>& predictions,
                        const std::vector<EstimateRow>& estimates) {
  const double W = 640, H = 480, ML = 60, MR = 20, MT = 20, MB = 40;
  double ymin = 1e300, ymax = -1e300;
  auto see = [&](double v) {
    ymin = std::min(ymin, v);
    ymax = std::max(ymax, v);
  };
  for (const auto& r : predictions) {
    see(r.set_assouad);
    see(r.set_lower);
    see(r.measure_assouad);
    see(r.measure_lower);
  }
  for (const auto& e : estimates)
    if (e.theta > 0.0) see(e.value);
  if (ymin > ymax) {
    ymin = 0.0;
    ymax = 1.0;
  }
  const double pad = std::max(0.05, (ymax - ymin) * 0.08);
  ymin -= pad;
  ymax += pad;
  auto X = [&](double t) { return ML + t * (W - ML - MR); };
  auto Y = [&](double v) {
    return H - MB - (v - ymin) / (ymax - ymin) * (H - MT - MB);
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W
      << "\" height=\"" << H << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<line x1=\"" << svg_coord(X(0)) << "\" y1=\"" << svg_coord(Y(ymin))
      << "\" x2=\"" << svg_coord(X(1)) << "\" y2=\"" << svg_coord(Y(ymin))
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << svg_coord(X(0)) << "\" y1=\"" << svg_coord(Y(ymin))
      << "\" x2=\"" << svg_coord(X(0)) << "\" y2=\"" << svg_coord(Y(ymax))
      << "\" stroke=\"black\"/>\n";

  struct Curve {
    const char* name;
    const char* color;
    const char* dash;
    double PredictionRow::* field;
  };
  const Curve curves[] = {
      {"set_assouad", "black", "", &PredictionRow::set_assouad},
      {"set_lower", "grey", "", &PredictionRow::set_lower},
      {"measure_assouad", "black", "6,4", &PredictionRow::measure_assouad},
      {"measure_lower", "grey", "6,4", &PredictionRow::measure_lower},
  };
  for (const auto& c : curves) {
    svg << "<polyline fill=\"none\" stroke=\"" << c.color << "\"";
    if (*c.dash) svg << " stroke-dasharray=\"" << c.dash << "\"";
    svg << " points=\"";
    for (const auto& r : predictions)
      svg << svg_coord(X(r.theta)) << ',' << svg_coord(Y(r.*(c.field))) << ' ';
    svg << "\"><title>" << c.name << "</title></polyline>\n";
  }
  for (const auto& e : estimates) {
    if (e.theta <= 0.0) continue;
    const bool measure = e.kind.rfind("measure_", 0) == 0;
    const bool assouad = e.kind.find("assouad") != std::string::npos;
    svg << "<circle cx=\"" << svg_coord(X(e.theta)) << "\" cy=\""
        << svg_coord(Y(e.value)) << "\" r=\"2.5\" fill=\""
        << (assouad ? "black" : "grey") << "\""
        << (measure ? " fill-opacity=\"0.45\"" : "") << "/>\n";
  }
  svg << "</svg>\n";
  return svg.str();
}

namespace {

int check(bool ok, const char* what, bool verbose, int& failures) {
  if (verbose || !ok)
    std::cout << (ok ? "ok   " : "FAIL ") << what << '\n';
  if (!ok) ++failures;
  return failures;
}

}  // namespace

int selftest(bool verbose) {
  int failures = 0;

  // spectra must coincide with the generic phase-transition form
  {
    formulas::KleinianParams kp{1.2, 1, 2};
    const auto prof = formulas::kleinian_set_spectrum(kp, formulas::Mode::Assouad);
    bool ok = true;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double want = formulas::phase_transition_form(
          kp.delta, std::max(kp.delta, double(kp.k_max)), 0.5, t);
      ok = ok && std::abs(prof(t) - want) < 1e-12;
    }
    check(ok, "kleinian set spectrum matches phase-transition form", verbose,
          failures);
  }
  {
    formulas::JuliaParams jp{0.8, 1, 3};
    const auto prof = formulas::julia_set_spectrum(jp, formulas::Mode::Assouad);
    bool ok = true;
    for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      const double want = formulas::phase_transition_form(
          jp.h, 1.0, 1.0 / (1.0 + jp.p_max), t);
      ok = ok && std::abs(prof(t) - want) < 1e-12;
    }
    check(ok, "julia set spectrum matches phase-transition form", verbose,
          failures);
  }

  // oracle sup/inf must reproduce the closed forms
  {
    formulas::KleinianParams kp{1.7, 1, 2};
    est::SyntheticKleinianOracle oracle(kp);
    bool ok = true;
    for (double t : {0.2, 0.5, 0.8}) {
      for (auto mode : {formulas::Mode::Assouad, formulas::Mode::Lower}) {
        const double got = est::measure_spectrum_estimate(oracle, t, mode).value;
        const double want = formulas::kleinian_measure_spectrum(kp, mode)(t);
        ok = ok && std::abs(got - want) < 0.01;
      }
    }
    check(ok, "synthetic orbital measure reproduces its spectra", verbose,
          failures);
  }
  {
    formulas::JuliaParams jp{0.7, 2, 2};
    est::SyntheticJuliaOracle oracle(jp);
    bool ok = true;
    for (double t : {0.2, 0.5, 0.8}) {
      for (auto mode : {formulas::Mode::Assouad, formulas::Mode::Lower}) {
        const double got = est::measure_spectrum_estimate(oracle, t, mode).value;
        const double want = formulas::julia_measure_spectrum(jp, mode)(t);
        ok = ok && std::abs(got - want) < 0.01;
      }
    }
    check(ok, "synthetic conformal measure reproduces its spectra", verbose,
          failures);
  }

  // geometry cross-checks
  {
    const auto p = geo::vec(0.3, -0.2, 0.1);
    const auto q = geo::vec(-0.5, 0.4, 0.0);
    const bool ok = std::abs(geo::hyperbolic_distance(p, q) -
                             geo::cross_ratio_distance(p, q)) < 1e-9;
    check(ok, "ball metric agrees with cross-ratio route", verbose, failures);
  }
  {
    const auto x = geo::vec(0.4, -1.2, 0.7);  // height 0.7 at index 2
    const auto b = geo::halfspace_to_ball(x, 2);
    const auto back = geo::ball_to_halfspace(b, 2);
    const bool ok = (back - x).norm() < 1e-10 && b.norm() < 1.0;
    check(ok, "Cayley transform round-trips the half-space", verbose, failures);
  }

  // horoball shrinkage under a parabolic map: 1/n and 1/n^2 laws
  {
    geo::MobiusMap f(1.0, 1.0, 0.0, 1.0);  // z + 1, fixes infinity
    const geo::MobiusMap s(0.0, -1.0, 1.0, 0.0);
    const auto g = s.compose(f).compose(s.inverse());  // parabolic fixing 0
    const auto seq = geo::horoball_radius_sequence(g, 2.0, 0.5, 400);
    const double c1 = seq[49].distance_to_fixed * 50.0;
    const double c2 = seq[399].distance_to_fixed * 400.0;
    const double d1 = seq[49].diameter * 50.0 * 50.0;
    const double d2 = seq[399].diameter * 400.0 * 400.0;
    const bool ok = std::abs(c1 / c2 - 1.0) < 0.1 && std::abs(d1 / d2 - 1.0) < 0.1;
    check(ok, "parabolic horoball orbit follows 1/n and 1/n^2", verbose,
          failures);
  }

  if (failures == 0 && verbose) std::cout << "selftest: all checks passed\n";
  return failures == 0 ? 0 : 1;
}

int run(const std::vector<std::string>& args) {
  CLI::App app{"Assouad-type dimension laboratory for limit sets and "
               "parabolic Julia sets"};
  app.require_subcommand(1);

  std::string config_path, preset_override, out_override;
  uint64_t seed_override = 0;
  double tol_override = -1.0;
  bool verbose = false;

  auto add_common = [&](CLI::App* sub, bool config_required) {
    sub->add_option("--config", config_path, "run configuration (JSON)")
        ->required(config_required);
    sub->add_option("--preset", preset_override, "override the config preset");
    sub->add_option("--out", out_override, "override the output directory");
    sub->add_option("--seed", seed_override, "override the RNG seed");
    sub->add_option("--tolerance", tol_override, "override compare tolerance");
  };
  auto* c_generate = app.add_subcommand("generate", "sample a point cloud");
  auto* c_estimate = app.add_subcommand("estimate", "dimension estimates");
  auto* c_predict = app.add_subcommand("predict", "closed-form spectra");
  auto* c_compare = app.add_subcommand("compare", "estimates vs predictions");
  auto* c_plot = app.add_subcommand("plot", "SVG of spectra");
  auto* c_selftest = app.add_subcommand("selftest", "internal consistency");
  for (auto* sub : {c_generate, c_estimate, c_predict, c_compare, c_plot})
    add_common(sub, true);
  c_selftest->add_flag("-v,--verbose", verbose, "print every check");

  std::vector<const char*> argv;
  argv.push_back("aslab");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(int(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "ERR: " << e.what() << '\n';
    return 2;
  }

  try {
    if (c_selftest->parsed()) return selftest(verbose);

    RunConfig cfg = RunConfig::from_json_file(config_path);
    if (!preset_override.empty()) cfg.preset = preset_override;
    if (!out_override.empty()) cfg.out = out_override;
    if (seed_override != 0) cfg.seed = seed_override;
    if (tol_override >= 0.0) cfg.tolerance = tol_override;

    if (c_generate->parsed()) {
      const auto cloud = generate_preset(cfg.preset, cfg.seed);
      std::filesystem::create_directories(cfg.out);
      save_cloud_csv(cloud,
                     (std::filesystem::path(cfg.out) / "cloud.csv").string());
      save_cloud_binary(cloud,
                        (std::filesystem::path(cfg.out) / "cloud.bin").string());
      std::cout << "wrote " << cloud.size() << " points ("
                << cloud.provenance << ")\n";
      return 0;
    }
    if (c_predict->parsed()) {
      const auto rows = predict_rows(cfg);
      write_file(cfg.out, "predictions.csv", predictions_csv(rows));
      write_file(cfg.out, "summary.json", summary_json(cfg));
      return 0;
    }
    if (c_estimate->parsed()) {
      const auto rows = estimate_rows(cfg);
      write_file(cfg.out, "estimates.csv", estimates_csv(rows));
      return 0;
    }
    if (c_compare->parsed()) {
      const auto pred = predict_rows(cfg);
      const auto est = estimate_rows(cfg);
      write_file(cfg.out, "predictions.csv", predictions_csv(pred));
      write_file(cfg.out, "estimates.csv", estimates_csv(est));
      const auto res = compare_rows(cfg, pred, est);
      write_file(cfg.out, "compare.json", res.report.dump(2) + "\n");
      if (!res.ok) {
        std::cerr << "ERR: comparison exceeded tolerance "
                  << cfg.tolerance << " (worst "
                  << res.report["worst_abs_diff"].get<double>() << ")\n";
        return 1;
      }
      return 0;
    }
    if (c_plot->parsed()) {
      const auto pred = predict_rows(cfg);
      std::vector<EstimateRow> est;
      if (cfg.kleinian || cfg.julia) est = estimate_rows(cfg);
      write_file(cfg.out, "spectra.svg", spectra_svg(pred, est));
      return 0;
    }
  } catch (const std::runtime_error& e) {
    if (std::string(e.what()).rfind("scale window", 0) == 0) {
      std::cerr << "ERR: " << e.what() << '\n';
      return 3;
    }
    std::cerr << "ERR: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "ERR: " << e.what() << '\n';
    return 2;
  }
  return 2;
}

}  // namespace aslab::cli
