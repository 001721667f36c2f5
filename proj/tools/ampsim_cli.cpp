// Command-line front end: reproduces the reference figure datasets and runs
// one-off amplification / projection / measurement calculations from a JSON
// config.  All outputs are deterministic (fixed %.17g formatting) so reruns
// are byte-identical.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ampsim/amplifier.hpp"
#include "ampsim/classical.hpp"
#include "ampsim/measures.hpp"
#include "ampsim/projection.hpp"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace ampsim;

namespace {

constexpr const char* kVersion = "1.0.0";
constexpr int kExitConfig = 2;
constexpr int kExitCompute = 3;

// Thrown for malformed configs; mapped to the config exit code.
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_csv(const fs::path& path, const std::string& header,
               const std::vector<std::vector<double>>& rows) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ConfigError("cannot open output file " + path.string());
  out << "# " << header << "\n";
  for (const std::vector<double>& row : rows) {
    for (size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << fmt(row[i]);
    out << "\n";
  }
}

void write_distribution(const fs::path& path, const char* coord, const Distribution1D& d) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(d.grid.n));
  for (int i = 0; i < d.grid.n; ++i)
    rows.push_back({d.grid.point(i), d.values[static_cast<size_t>(i)]});
  write_csv(path, std::string(coord) + ",density", rows);
}

void write_field(const fs::path& path, const WignerField& f) {
  std::vector<std::vector<double>> rows;
  rows.reserve(static_cast<size_t>(f.grid.x.n) * static_cast<size_t>(f.grid.p.n));
  for (int ix = 0; ix < f.grid.x.n; ++ix)
    for (int ip = 0; ip < f.grid.p.n; ++ip)
      rows.push_back({f.grid.x.point(ix), f.grid.p.point(ip), f.at(ix, ip)});
  write_csv(path, "re,im,wigner", rows);
}

void write_summary(const fs::path& dir, json summary) {
  summary["version"] = kVersion;
  std::ofstream out(dir / "summary.json", std::ios::binary);
  out << summary.dump(2) << "\n";
}

json grid_json(const Grid1D& g) {
  return json{{"lo", g.lo}, {"hi", g.hi}, {"n", g.n}};
}

// ---- config parsing ------------------------------------------------------

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
}

double get_number(const json& cfg, const std::string& key) {
  if (!cfg.contains(key) || !cfg[key].is_number())
    throw ConfigError("config requires numeric field '" + key + "'");
  return cfg[key].get<double>();
}

Complex get_amplitude(const json& cfg, const std::string& key) {
  if (!cfg.contains(key)) throw ConfigError("config requires field '" + key + "'");
  const json& v = cfg[key];
  if (v.is_number()) return Complex(v.get<double>(), 0.0);
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return Complex(v[0].get<double>(), v[1].get<double>());
  throw ConfigError("field '" + key + "' must be a number or [re, im]");
}

SmearingSpec get_spec(const json& cfg) {
  const double g = get_number(cfg, "g");
  if (!cfg.contains("lambdas") || !cfg["lambdas"].is_array())
    throw ConfigError("config requires array field 'lambdas'");
  std::vector<double> lams;
  for (const json& v : cfg["lambdas"]) {
    if (!v.is_number()) throw ConfigError("'lambdas' entries must be numeric");
    lams.push_back(v.get<double>());
  }
  try {
    return SmearingSpec(g, std::move(lams));
  } catch (const InvalidSpecError& e) {
    throw ConfigError(e.what());
  }
}

Grid1D get_grid(const json& cfg, const std::string& key, Grid1D fallback) {
  if (!cfg.contains(key)) return fallback;
  const json& v = cfg[key];
  if (!v.is_object()) throw ConfigError("'" + key + "' must be an object");
  try {
    if (v.contains("half") && v.contains("h"))
      return Grid1D::symmetric(v["half"].get<double>(), v["h"].get<double>());
    if (v.contains("lo") && v.contains("hi") && v.contains("n"))
      return Grid1D(v["lo"].get<double>(), v["hi"].get<double>(), v["n"].get<int>());
  } catch (const Error& e) {
    throw ConfigError(e.what());
  }
  throw ConfigError("'" + key + "' needs either {half, h} or {lo, hi, n}");
}

int get_order(const json& cfg) {
  if (!cfg.contains("order")) return 48;
  const int order = cfg["order"].get<int>();
  if (order < 2 || order > 256) throw ConfigError("'order' must lie in [2, 256]");
  return order;
}

// ---- figure-style datasets ----------------------------------------------

struct Preparation {
  std::string tag;
  std::vector<double> lambdas;
};

const std::vector<Preparation> kReference = {
    {"ideal", {1.0}},
    {"two_term", {0.3, 0.7}},
    {"three_term", {0.2, 0.3, 0.5}},
};

// Momentum grid fine enough for the interference fringes of the even state.
Grid1D fringe_grid(const AmplifiedCoherentState& st) {
  const double sigma = std::sqrt(0.5 + st.spec.s() * st.spec.noise_weight());
  const double half = std::max(8.0 * sigma, 4.0);
  // The envelope pulls the first minima inward at small displacement, so
  // sample well past the 20-per-period floor.
  return Grid1D::symmetric(half, fringe_period(st) / 40.0);
}

json projected_quadratures(const fs::path& dir, const std::string& tag,
                           const AmplifiedCoherentState& st, int order) {
  const ProjectedSuperposition ps = project(st, ParitySign::plus, order);
  const double sigma = std::sqrt(0.5 + st.spec.s() * st.spec.noise_weight());
  // Both parity branches contribute, so the x grid must span the +-blob pair.
  const Grid1D gx = Grid1D::symmetric(
      std::sqrt(2.0) * std::abs(st.mean()) + 8.0 * sigma, sigma / 16.0);
  const Distribution1D dx = pr_x(ps, gx, order);
  const Grid1D gp = fringe_grid(st);
  const Distribution1D dp = pr_p(ps, gp, order);
  write_distribution(dir / (tag + "_pr_x.csv"), "x", dx);
  write_distribution(dir / (tag + "_pr_p.csv"), "p", dp);
  return json{{"tag", tag},
              {"g", st.spec.g},
              {"lambdas", st.spec.lambdas},
              {"alpha", {st.alpha.real(), st.alpha.imag()}},
              {"p_plus", ps.p_sign},
              {"visibility", fringe_visibility(dp)},
              {"grid_x", grid_json(gx)},
              {"grid_p", grid_json(gp)}};
}

int run_reproduce(const std::string& figure, const fs::path& dir, int order) {
  fs::create_directories(dir);
  json summary;
  summary["dataset"] = figure;
  summary["order"] = order;
  json entries = json::array();

  if (figure == "orderings") {
    // Even-parity quadratures at g = 10, alpha = 10 for three lambda
    // orderings of the same support.
    const std::vector<Preparation> sets = {
        {"falling", {0.5, 0.3, 0.2}},
        {"flat", {1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0}},
        {"rising", {0.2, 0.3, 0.5}},
    };
    for (const Preparation& p : sets)
      entries.push_back(projected_quadratures(
          dir, p.tag, amplify(Complex(10.0, 0.0), SmearingSpec(10.0, p.lambdas)), order));
  } else if (figure == "preparations") {
    // Reference preparations plus the isomorphic thermal pointer state.
    for (const Preparation& p : kReference)
      entries.push_back(projected_quadratures(
          dir, p.tag, amplify(Complex(10.0, 0.0), SmearingSpec(10.0, p.lambdas)), order));
    const ThermalCoherentState th(100.0, Complex(100.0, 0.0));
    entries.push_back(projected_quadratures(dir, "thermal", thermal_as_amplified(th), order));
  } else if (figure == "macroscopicity") {
    // S of the even-parity state versus gain, one curve per preparation.
    // Gains start where the interference patch separates from the blobs;
    // below that the windowed evaluation would fall back to a single grid
    // too large to be practical.
    const std::vector<double> gains = {3.0, 4.0, 5.0, 7.0, 10.0};
    for (const Preparation& p : kReference) {
      std::vector<std::vector<double>> rows;
      for (double g : gains) {
        const AmplifiedCoherentState st = amplify(Complex(10.0, 0.0), SmearingSpec(g, p.lambdas));
        rows.push_back({g, macroscopicity(project(st, ParitySign::plus), 0.01, 16)});
      }
      write_csv(dir / (p.tag + "_s_vs_g.csv"), "g,s", rows);
      entries.push_back(json{{"tag", p.tag}, {"gains", gains}});
    }
  } else if (figure == "matched") {
    // Pr(p) with the pointer displacement held at g alpha = 100 while each
    // preparation runs at its purity-matched gain.
    for (const Preparation& p : kReference) {
      const double g = purity_matched_gain(p.lambdas, 0.01);
      const AmplifiedCoherentState st =
          amplify(Complex(100.0 / g, 0.0), SmearingSpec(g, p.lambdas));
      const ProjectedSuperposition ps = project(st, ParitySign::plus, order);
      const Grid1D gp = fringe_grid(st);
      const Distribution1D dp = pr_p(ps, gp, order);
      write_distribution(dir / (p.tag + "_pr_p.csv"), "p", dp);
      entries.push_back(json{{"tag", p.tag},
                             {"matched_gain", g},
                             {"visibility", fringe_visibility(dp)},
                             {"grid_p", grid_json(gp)}});
    }
  } else if (figure == "gains") {
    for (const Preparation& p : kReference)
      entries.push_back(json{{"tag", p.tag},
                             {"lambdas", p.lambdas},
                             {"matched_gain", purity_matched_gain(p.lambdas, 0.01)},
                             {"target_purity", 0.01}});
  } else {
    throw CLI::ValidationError("unknown dataset '" + figure + "'");
  }
  summary["entries"] = entries;
  write_summary(dir, std::move(summary));
  return 0;
}

// ---- one-off subcommands -------------------------------------------------

int run_amplify(const json& cfg, const fs::path& dir) {
  const SmearingSpec spec = get_spec(cfg);
  const Complex alpha = get_amplitude(cfg, "alpha");
  const int order = get_order(cfg);
  fs::create_directories(dir);
  const AmplifiedCoherentState st = amplify(alpha, spec);
  const Complex mean = mean_amplitude(st, order);
  json summary;
  summary["command"] = "amplify";
  summary["params"] = {{"alpha", {alpha.real(), alpha.imag()}},
                       {"g", spec.g},
                       {"lambdas", spec.lambdas},
                       {"order", order}};
  summary["mean_amplitude"] = {mean.real(), mean.imag()};
  summary["x_variance"] = output_x_variance(st, order);
  summary["x_variance_floor"] = caves_bound_x_variance(spec.g);
  summary["purity"] = purity(st, order / 2);
  write_summary(dir, std::move(summary));
  return 0;
}

int run_project(const json& cfg, const fs::path& dir, const std::string& sign_name) {
  const SmearingSpec spec = get_spec(cfg);
  const Complex alpha = get_amplitude(cfg, "alpha");
  const int order = get_order(cfg);
  const ParitySign sign = sign_name == "minus" ? ParitySign::minus : ParitySign::plus;
  fs::create_directories(dir);
  const AmplifiedCoherentState st = amplify(alpha, spec);
  const ProjectedSuperposition ps = project(st, sign, order);
  const double sigma = std::sqrt(0.5 + spec.s() * spec.noise_weight());
  const Grid1D gx = get_grid(
      cfg, "grid_x",
      Grid1D::symmetric(std::sqrt(2.0) * std::abs(st.mean()) + 8.0 * sigma, sigma / 16.0));
  const Grid1D gp = get_grid(cfg, "grid_p", fringe_grid(st));
  const Distribution1D dx = pr_x(ps, gx, order);
  const Distribution1D dp = pr_p(ps, gp, order);
  write_distribution(dir / "pr_x.csv", "x", dx);
  write_distribution(dir / "pr_p.csv", "p", dp);
  json summary;
  summary["command"] = "project";
  summary["params"] = {{"alpha", {alpha.real(), alpha.imag()}},
                       {"g", spec.g},
                       {"lambdas", spec.lambdas},
                       {"sign", sign_name},
                       {"order", order}};
  summary["p_sign"] = ps.p_sign;
  summary["parity_overlap"] = ps.parity_overlap;
  summary["parity_suppressed"] = ps.parity_suppressed;
  summary["visibility"] = fringe_visibility(dp);
  summary["grids"] = {{"x", grid_json(gx)}, {"p", grid_json(gp)}};
  write_summary(dir, std::move(summary));
  return 0;
}

int run_measure(const json& cfg, const fs::path& dir, bool with_wigner) {
  const int order = get_order(cfg);
  fs::create_directories(dir);
  json summary;
  summary["command"] = "measure";
  if (cfg.contains("thermal")) {
    const json& th_cfg = cfg["thermal"];
    ThermalCoherentState th(get_number(th_cfg, "v"), get_amplitude(th_cfg, "d"));
    summary["params"] = {{"thermal", {{"v", th.v}, {"d", {th.d.real(), th.d.imag()}}}},
                         {"order", order}};
    summary["purity"] = purity(th, order / 2);
    summary["equivalent_gain"] = th.equivalent_gain();
    if (with_wigner) {
      const Grid1D gx = get_grid(cfg, "grid_x", Grid1D::symmetric(6.0, 0.1));
      const Grid1D gp = get_grid(cfg, "grid_p", gx);
      write_field(dir / "wigner.csv", wigner(th, Grid2D(gx, gp), order));
    }
  } else {
    const SmearingSpec spec = get_spec(cfg);
    const Complex alpha = get_amplitude(cfg, "alpha");
    const AmplifiedCoherentState st = amplify(alpha, spec);
    const ProjectedSuperposition ps = project(st, ParitySign::plus, order);
    summary["params"] = {{"alpha", {alpha.real(), alpha.imag()}},
                         {"g", spec.g},
                         {"lambdas", spec.lambdas},
                         {"order", order}};
    summary["purity"] = purity(st, order / 2);
    summary["purity_projected"] = purity(ps, order / 2);
    summary["macroscopicity_projected"] = macroscopicity(ps, 0.01, std::min(order, 16));
    if (with_wigner) {
      const Grid1D gx = get_grid(cfg, "grid_x", Grid1D::symmetric(6.0, 0.1));
      const Grid1D gp = get_grid(cfg, "grid_p", gx);
      write_field(dir / "wigner.csv", wigner(ps, Grid2D(gx, gp), order));
    }
  }
  if (cfg.contains("target_purity")) {
    const SmearingSpec spec = get_spec(cfg);
    summary["matched_gain"] =
        purity_matched_gain(spec.lambdas, get_number(cfg, "target_purity"));
  }
  write_summary(dir, std::move(summary));
  return 0;
}

int run_classical(const json& cfg, const fs::path& dir) {
  if (!cfg.contains("slot") || !cfg["slot"].is_object())
    throw ConfigError("config requires object field 'slot'");
  const json& sc = cfg["slot"];
  const Complex center = get_amplitude(sc, "center");
  const double radius = get_number(sc, "radius");
  const int count = sc.contains("count") ? sc["count"].get<int>() : 64;
  fs::create_directories(dir);
  ClassicalMixture mix;
  try {
    mix = make_slot_mixture(center, radius, count);
  } catch (const InvalidSpecError& e) {
    throw ConfigError(e.what());
  }
  const Grid1D gx = get_grid(cfg, "grid_x",
                             Grid1D::centered(center.real(), radius, radius / 50.0));
  const Grid1D gp = get_grid(cfg, "grid_p",
                             Grid1D::centered(center.imag(), radius, radius / 50.0));
  const Grid2D window(gx, gp);
  const InterferenceReport rep = basis_interference(mix, window);
  write_field(dir / "slot_wigner.csv", wigner_classical(mix, window));
  json summary;
  summary["command"] = "classical";
  summary["params"] = {{"center", {center.real(), center.imag()}},
                       {"radius", radius},
                       {"count", count}};
  summary["interference_ratio"] = rep.ratio;
  summary["interference_log10_bound"] = rep.log10_bound;
  summary["interference_suppressed"] = rep.suppressed;
  summary["grids"] = {{"x", grid_json(gx)}, {"p", grid_json(gp)}};
  write_summary(dir, std::move(summary));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Phase-space toolkit for amplified coherent states"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string out_dir = "out";
  std::string config_path;
  std::string figure;
  std::string sign_name = "plus";
  int order = 48;
  bool with_wigner = false;

  CLI::App* rep = app.add_subcommand("reproduce", "Rebuild a reference dataset");
  rep->add_option("dataset", figure, "orderings | preparations | macroscopicity | matched | gains")
      ->required();
  rep->add_option("--out", out_dir, "Output directory");
  rep->add_option("--order", order, "Quadrature order");

  CLI::App* amp = app.add_subcommand("amplify", "Amplify a coherent state");
  amp->add_option("--config", config_path, "JSON config")->required();
  amp->add_option("--out", out_dir, "Output directory");

  CLI::App* prj = app.add_subcommand("project", "Parity-projected quadratures");
  prj->add_option("--config", config_path, "JSON config")->required();
  prj->add_option("--out", out_dir, "Output directory");
  prj->add_option("--sign", sign_name, "plus | minus")
      ->check(CLI::IsMember({"plus", "minus"}));

  CLI::App* mea = app.add_subcommand("measure", "Purity / macroscopicity / Wigner");
  mea->add_option("--config", config_path, "JSON config")->required();
  mea->add_option("--out", out_dir, "Output directory");
  mea->add_flag("--wigner", with_wigner, "Also write the Wigner field");

  CLI::App* cls = app.add_subcommand("classical", "Coarse-grained slot mixture");
  cls->add_option("--config", config_path, "JSON config")->required();
  cls->add_option("--out", out_dir, "Output directory");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfig;
  }

  try {
    if (rep->parsed()) return run_reproduce(figure, out_dir, order);
    const json cfg = load_config(config_path);
    if (amp->parsed()) return run_amplify(cfg, out_dir);
    if (prj->parsed()) return run_project(cfg, out_dir, sign_name);
    if (mea->parsed()) return run_measure(cfg, out_dir, with_wigner);
    if (cls->parsed()) return run_classical(cfg, out_dir);
  } catch (const ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfig;
  } catch (const CLI::ValidationError& e) {
    std::fprintf(stderr, "usage error: %s\n", e.what());
    return kExitConfig;
  } catch (const Error& e) {
    std::fprintf(stderr, "computation failed: %s\n", e.what());
    return kExitCompute;
  }
  return 0;
}
