// landau: command-line front end for the torus Landau-level library.
#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "landau/config.hpp"
#include "landau/io.hpp"
#include "landau/landau_inf.hpp"
#include "landau/maggroup.hpp"
#include "landau/spectral_oracle.hpp"
#include "landau/torus_gauge.hpp"
#include "landau/torus_states.hpp"

namespace fs = std::filesystem;
using namespace landau;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 success, 1 runtime or verification failure, 2 usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonFlags {
  std::map<std::string, std::string> flags;  // key -> raw text, only when given
  std::string config_file;
};

void add_common(CLI::App* cmd, CommonFlags& c) {
  for (const char* key : {"mass", "charge", "lx", "ly", "nphi", "theta-x", "theta-y", "grid",
                          "levels", "out-dir"}) {
    cmd->add_option_function<std::string>(
        std::string("--") + key,
        [&c, key](const std::string& v) {
          std::string k = key;
          std::replace(k.begin(), k.end(), '-', '_');
          c.flags[k] = v;
        },
        key);
  }
  cmd->add_option("--config", c.config_file, "key=value file; flags override it");
}

// Config file entries first, explicit flags on top.
KeyValues merged(const CommonFlags& c) {
  KeyValues kv;
  if (!c.config_file.empty()) {
    try {
      kv = read_key_value_file(c.config_file);
    } catch (const std::exception& e) {
      throw UsageError(e.what());
    }
  }
  for (const auto& [k, v] : c.flags) kv[k] = v;
  return kv;
}

TorusConfig torus_from(const KeyValues& kv) {
  try {
    return torus_config_from(kv);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("invalid configuration: ") + e.what());
  }
}

long integer_value(const KeyValues& kv, const std::string& key, long fallback) {
  const auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  try {
    std::size_t used = 0;
    const long v = std::stol(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return v;
  } catch (const std::exception&) {
    throw UsageError("--" + key + " expects an integer, got '" + it->second + "'");
  }
}

fs::path out_dir(const KeyValues& kv) {
  const auto it = kv.find("out_dir");
  const fs::path dir = it == kv.end() ? fs::path(".") : fs::path(it->second);
  fs::create_directories(dir);
  return dir;
}

json echo(const KeyValues& kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

struct Run {
  std::string command;
  json config;
  json seeds = json::array();
  std::vector<std::string> outputs;
  fs::path dir;
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  fs::path file(const std::string& name) {
    outputs.push_back(name);
    return dir / name;
  }

  void finish() {
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    json outs = json::array();
    for (const auto& o : outputs) outs.push_back(o);
    write_json(dir / "manifest.json", json{{"command", command},
                                           {"config", config},
                                           {"seeds", seeds},
                                           {"tool_version", kVersion},
                                           {"outputs", outs},
                                           {"wall_time_seconds", secs}});
  }
};

Run start_run(const std::string& command, const KeyValues& kv, const TorusConfig& cfg) {
  Run r;
  r.command = command;
  r.config = json{{"flags", echo(kv)}, {"torus", to_json(cfg)}};
  r.dir = out_dir(kv);
  return r;
}

json complex_matrix(const Eigen::MatrixXcd& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json element_json(const GroupElement& g) { return json::array({g.nx, g.ny, g.m}); }

// ---------------------------------------------------------------------------

int cmd_spectrum(const CommonFlags& c, unsigned seed) {
  const KeyValues kv = merged(c);
  const TorusConfig cfg = torus_from(kv);
  const long grid = integer_value(kv, "grid", 96);
  const long levels = integer_value(kv, "levels", 3);
  if (levels < 1) throw UsageError("--levels must be >= 1");
  Run run = start_run("spectrum", kv, cfg);
  run.seeds.push_back(seed);

  SolverOptions opts;
  opts.seed = seed;
  const DiscreteHamiltonian h = [&] {
    try {
      return build_hamiltonian(cfg, grid, grid);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const SpectrumReport rep = low_spectrum(h, int(levels) * cfg.nphi(), opts);
  json analytic = json::array();
  for (long n = 0; n < levels; ++n) analytic.push_back(cfg.omega() * (double(n) + 0.5));
  json doc{{"config", to_json(cfg)},
           {"grid", {grid, grid}},
           {"analytic_levels", analytic},
           {"oracle", to_json(rep)}};
  write_json(run.file("spectrum.json"), doc);
  run.finish();
  for (const auto& cl : rep.clusters) {
    std::printf("level %d  mean %.12g  multiplicity %d  deviation %.3e\n", cl.level, cl.mean,
                cl.multiplicity, cl.relative_deviation);
  }
  return 0;
}

struct DensityFlags {
  std::string state = "eigen";
  std::string basis = "ly";
  int n = 0;
  int l = 0;
  double lambda_re = 0, lambda_im = 0, lambda_prime_re = 0, lambda_prime_im = 0;
};

int cmd_density(const CommonFlags& c, const DensityFlags& d) {
  const KeyValues kv = merged(c);
  const TorusConfig cfg = torus_from(kv);
  const auto [dnx, dny] = torus_cells(cfg);
  const long grid = integer_value(kv, "grid", 0);
  const Eigen::Index nx = grid > 0 ? grid : dnx;
  const Eigen::Index ny = grid > 0 ? grid : dny;
  if (nx < 2) throw UsageError("--grid must be >= 2");
  Run run = start_run("density", kv, cfg);
  run.config["selector"] = json{{"state", d.state}, {"basis", d.basis}, {"n", d.n}, {"l", d.l},
                                {"lambda", {d.lambda_re, d.lambda_im}},
                                {"lambda_prime", {d.lambda_prime_re, d.lambda_prime_im}}};

  const SampledState s = [&] {
    if (d.state == "eigen") {
      if (d.basis != "ly" && d.basis != "lx") throw UsageError("unknown basis '" + d.basis + "'");
      if (d.n < 0) throw UsageError("--n must be >= 0");
      const auto basis = d.basis == "ly" ? DegeneracyBasis::Ly : DegeneracyBasis::Lx;
      return torus_eigenstate(cfg, {d.n, d.l, basis}, nx, ny);
    }
    if (d.state == "coherent") {
      const CoherentLabel label{{d.lambda_re, d.lambda_im}, {d.lambda_prime_re, d.lambda_prime_im}};
      return torus_coherent(cfg, label, nx, ny);
    }
    throw UsageError("unknown state selector '" + d.state + "'");
  }();
  const DensityMap map = density_map(s);
  write_density_csv(run.file("density.csv"), s, map);
  write_density_pgm(run.file("density.pgm"), map);
  const double integral = map.density.topLeftCorner(nx, ny).sum() * s.hx() * s.hy();
  write_json(run.file("density.json"),
             json{{"grid", {nx, ny}},
                  {"argmax", {{"i", map.argmax_i}, {"j", map.argmax_j},
                              {"x", map.argmax_x}, {"y", map.argmax_y}}},
                  {"local_maxima", map.local_maxima},
                  {"integral", integral},
                  {"boundary_residual", boundary_residual(s)}});
  run.finish();
  std::printf("argmax (%.6g, %.6g), %d local maxima\n", map.argmax_x, map.argmax_y,
              map.local_maxima);
  return 0;
}

int cmd_group(const CommonFlags& c) {
  const KeyValues kv = merged(c);
  const TorusConfig cfg = torus_from(kv);
  const int n = cfg.nphi();
  if (n > 12) throw UsageError("group tables are limited to nphi <= 12");
  Run run = start_run("group", kv, cfg);

  const auto elements = all_elements(n);
  json elems = json::array(), table = json::array(), inverses = json::array();
  for (const auto& a : elements) {
    elems.push_back(element_json(a));
    inverses.push_back(element_index(inverse(a)));
    json row = json::array();
    for (const auto& b : elements) row.push_back(element_index(multiply(a, b)));
    table.push_back(std::move(row));
  }
  json classes = json::array();
  for (const auto& cls : conjugacy_classes(n)) {
    json jc = json::array();
    for (const auto& g : cls) jc.push_back(element_json(g));
    classes.push_back(std::move(jc));
  }
  json cent = json::array();
  for (const auto& g : center(n)) cent.push_back(element_json(g));
  const auto rep = clock_shift_rep(n);
  const auto q = quotient_by_center(n);
  write_json(run.file("group.json"),
             json{{"nphi", n},
                  {"order", elements.size()},
                  {"elements", elems},
                  {"multiplication_table", table},
                  {"inverses", inverses},
                  {"conjugacy_classes", classes},
                  {"center", cent},
                  {"quotient", {{"coset_count", q.coset_count},
                                {"coset_size", q.coset_size},
                                {"isomorphic_to_zn_zn", q.isomorphic_to_zn_zn}}},
                  {"representation", {{"tx", complex_matrix(rep.tx)}, {"ty", complex_matrix(rep.ty)}}},
                  {"weyl_max_deviation", weyl_defect(rep)},
                  {"commutant_dimension", commutant_dimension(rep)}});
  run.finish();
  std::printf("order %zu, %zu conjugacy classes, Weyl deviation %.2e\n", elements.size(),
              classes.size(), weyl_defect(rep));
  return 0;
}

struct Check {
  std::string name;
  double residual;
  double tolerance;
  bool pass() const { return residual <= tolerance; }
};

int cmd_verify(const CommonFlags& c, std::optional<double> flux_override) {
  KeyValues kv = merged(c);
  if (!kv.count("nphi")) kv["nphi"] = "2";
  const TorusConfig cfg = torus_from(kv);
  Run run = start_run("verify", kv, cfg);
  const double flux = flux_override.value_or(double(cfg.nphi()));
  if (flux_override) run.config["flux_override"] = flux;
  std::vector<Check> checks;

  const double field = field_for_flux(cfg.charge(), cfg.lx(), cfg.ly(), flux);
  checks.push_back({"flux_consistency", corner_consistency_defect(cfg.charge(), field, cfg.lx(), cfg.ly()),
                    1e-12});
  checks.push_back({"cocycle",
                    std::abs(cocycle_defect(standard_transition_functions(cfg), cfg) -
                             kTwoPi * cfg.nphi() / cfg.charge()),
                    1e-12});

  const auto [nx, ny] = torus_cells(cfg);
  {
    auto s = torus_eigenstate(cfg, {0, 0, DegeneracyBasis::Ly}, nx, ny);
    close_with_flux(s, flux);
    checks.push_back({"boundary_closure", boundary_residual(s, flux), 1e-8});
  }
  double bc = 0, weyl_grid = 0, ladder = 0, basis = 0;
  for (int n = 0; n <= 2; ++n) {
    const auto ly = torus_level(cfg, n, DegeneracyBasis::Ly, nx, ny);
    const auto lx = torus_level(cfg, n, DegeneracyBasis::Lx, nx, ny);
    basis = std::max(basis, projector_distance(ly, lx));
    for (int l = 0; l < cfg.nphi(); ++l) {
      const auto& s = ly[std::size_t(l)];
      bc = std::max({bc, boundary_residual(s), boundary_residual(lx[std::size_t(l)])});
      const auto d = apply_ty(apply_tx(s)).values -
                     std::polar(1.0, kTwoPi / cfg.nphi()) * apply_tx(apply_ty(s)).values;
      weyl_grid = std::max(weyl_grid, d.cwiseAbs().maxCoeff() / s.values.cwiseAbs().maxCoeff());
      const cplx ov = inner_product(ly[std::size_t((l + 1) % cfg.nphi())], apply_tx(s));
      ladder = std::max(ladder, std::abs(std::abs(ov) - 1.0));
    }
  }
  checks.push_back({"eigenstate_boundary", bc, 1e-8});
  checks.push_back({"weyl_grid", weyl_grid, 1e-10});
  checks.push_back({"tx_ladder", ladder, 1e-8});
  checks.push_back({"basis_equivalence", basis, 1e-8});
  checks.push_back({"weyl_matrix", weyl_defect(clock_shift_rep(cfg.nphi())), 1e-14});

  double fock = 0.0;
  FockState f{{{0, 0}, 1.0}, {{2, 1}, cplx(0.5, -0.25)}, {{4, 3}, cplx(-0.3, 0.7)}};
  fock = std::max(fock, max_abs(subtract(commutator(Ladder::A, Ladder::ADag, f), f)));
  fock = std::max(fock, max_abs(subtract(commutator(Ladder::B, Ladder::BDag, f), f)));
  fock = std::max(fock, max_abs(commutator(Ladder::A, Ladder::B, f)));
  checks.push_back({"fock_commutators", fock, 1e-12});

  {
    const long g = integer_value(kv, "grid", 0);
    const Eigen::Index cells =
        g > 0 ? g : ((std::max<Eigen::Index>(48, 8 * cfg.nphi()) + cfg.nphi() - 1) / cfg.nphi()) * cfg.nphi();
    const auto rep = low_spectrum(build_hamiltonian(cfg, cells, cells), 2 * cfg.nphi());
    double dev = rep.clusters.size() == 2 ? 0.0 : 1.0;
    for (const auto& cl : rep.clusters) {
      dev = std::max(dev, std::abs(cl.relative_deviation));
      if (cl.multiplicity != cfg.nphi()) dev = std::max(dev, 1.0);
    }
    checks.push_back({"oracle_spectrum", dev, 0.05});
  }

  bool all = true;
  json results = json::array();
  for (const auto& ch : checks) {
    all = all && ch.pass();
    results.push_back(json{{"name", ch.name}, {"residual", ch.residual},
                           {"tolerance", ch.tolerance}, {"pass", ch.pass()}});
    std::printf("%s %-20s residual %.3e (tol %.0e)\n", ch.pass() ? "PASS" : "FAIL",
                ch.name.c_str(), ch.residual, ch.tolerance);
  }
  write_json(run.file("verify.json"), json{{"all_pass", all}, {"checks", results}});
  run.finish();
  return all ? 0 : 1;
}

struct OrbitFlags {
  double center_x = 0.5, center_y = 0.5, radius = 0.25, phase = 0.0, periods = 1.0;
  int samples = 256;
};

int cmd_orbit(const CommonFlags& c, const OrbitFlags& o) {
  const KeyValues kv = merged(c);
  const TorusConfig cfg = torus_from(kv);
  if (o.samples < 1 || !(o.periods > 0.0) || !(o.radius >= 0.0)) {
    throw UsageError("orbit needs samples >= 1, periods > 0, radius >= 0");
  }
  Run run = start_run("orbit", kv, cfg);
  run.config["orbit"] = json{{"center_x", o.center_x}, {"center_y", o.center_y}, {"radius", o.radius},
                             {"phase", o.phase}, {"periods", o.periods}, {"samples", o.samples}};
  const ClassicalOrbit orbit{{o.center_x, o.center_y}, o.radius, o.phase, cfg.omega()};
  const double period = kTwoPi / cfg.omega();
  const int total = int(std::lround(o.samples * o.periods));
  std::vector<double> times;
  for (int k = 0; k <= total; ++k) times.push_back(o.periods * period * k / total);
  const auto trace = classical_orbit_trace(orbit, times);
  const auto wrapped = wrap_to_torus(trace, cfg.lx(), cfg.ly());
  bool wraps = false;
  {
    std::ofstream out(run.file("orbit.csv"), std::ios::binary);
    out << "t,x,y,x_wrapped,y_wrapped\n";
    for (std::size_t k = 0; k < trace.size(); ++k) {
      wraps = wraps || (trace[k] - wrapped[k]).norm() > 0.0;
      out << format_double(times[k]) << ',' << format_double(trace[k].x()) << ','
          << format_double(trace[k].y()) << ',' << format_double(wrapped[k].x()) << ','
          << format_double(wrapped[k].y()) << '\n';
    }
  }
  const double one_period = (classical_orbit_trace(orbit, std::vector<double>{period})[0] -
                             classical_orbit_trace(orbit, std::vector<double>{0.0})[0]).norm();
  write_json(run.file("orbit.json"), json{{"period", period},
                                          {"wraps", wraps},
                                          {"closure_residual", one_period},
                                          {"closed", one_period < 1e-9},
                                          {"energy", orbit_energy(cfg.plane(), orbit)}});
  run.finish();
  std::printf("period %.12g, wraps %s, closure residual %.2e\n", period, wraps ? "yes" : "no",
              one_period);
  return 0;
}

struct CoherentFlags {
  double lambda_re = 0, lambda_im = 0, lambda_prime_re = 0, lambda_prime_im = 0;
  std::optional<double> t_max;
  int steps = 64;
};

int cmd_coherent(const CommonFlags& c, const CoherentFlags& f) {
  const KeyValues kv = merged(c);
  const TorusConfig cfg = torus_from(kv);
  if (f.steps < 1) throw UsageError("--steps must be >= 1");
  const InfiniteConfig plane = cfg.plane();
  const double t_max = f.t_max.value_or(kTwoPi / cfg.omega());
  Run run = start_run("coherent", kv, cfg);
  run.config["coherent"] = json{{"lambda", {f.lambda_re, f.lambda_im}},
                                {"lambda_prime", {f.lambda_prime_re, f.lambda_prime_im}},
                                {"t_max", t_max}, {"steps", f.steps}};
  const CoherentLabel label{{f.lambda_re, f.lambda_im}, {f.lambda_prime_re, f.lambda_prime_im}};
  std::ofstream out(run.file("coherent.csv"), std::ios::binary);
  out << "t,mean_x,mean_y,spread_x,spread_y,energy,energy_spread\n";
  for (int k = 0; k <= f.steps; ++k) {
    const double t = t_max * k / f.steps;
    const auto e = coherent_expectations(plane, evolve_coherent(plane, label, t));
    // x = R_x + (x − R_x) with commuting, uncorrelated parts
    const double sx = std::hypot(e.center_x_spread, e.relative_x_spread);
    const double sy = std::hypot(e.center_y_spread, e.relative_y_spread);
    out << format_double(t) << ',' << format_double(e.center_x + e.relative_x) << ','
        << format_double(e.center_y + e.relative_y) << ',' << format_double(sx) << ','
        << format_double(sy) << ',' << format_double(e.energy) << ','
        << format_double(e.energy_spread) << '\n';
  }
  out.close();
  run.finish();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Landau levels on the plane and on a twisted torus"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonFlags common;
  unsigned seed = 12345;
  auto* spectrum = app.add_subcommand("spectrum", "finite-difference spectrum with clustering");
  add_common(spectrum, common);
  spectrum->add_option("--seed", seed, "start-block seed for the iterative solver");

  DensityFlags dflags;
  auto* density = app.add_subcommand("density", "probability density of a torus state");
  add_common(density, common);
  density->add_option("--state", dflags.state, "eigen | coherent");
  density->add_option("--basis", dflags.basis, "ly | lx");
  density->add_option("--n", dflags.n, "Landau level");
  density->add_option("--l", dflags.l, "degeneracy index");
  density->add_option("--lambda-re", dflags.lambda_re);
  density->add_option("--lambda-im", dflags.lambda_im);
  density->add_option("--lambda-prime-re", dflags.lambda_prime_re);
  density->add_option("--lambda-prime-im", dflags.lambda_prime_im);

  auto* group = app.add_subcommand("group", "magnetic translation group tables");
  add_common(group, common);

  std::optional<double> flux_override;
  auto* verify = app.add_subcommand("verify", "run the invariant checks");
  add_common(verify, common);
  verify->add_option("--flux-override", flux_override,
                     "flux quanta used for the boundary-consistency checks");

  OrbitFlags oflags;
  auto* orbit = app.add_subcommand("orbit", "classical cyclotron orbit wrapped on the torus");
  add_common(orbit, common);
  orbit->add_option("--center-x", oflags.center_x);
  orbit->add_option("--center-y", oflags.center_y);
  orbit->add_option("--radius", oflags.radius);
  orbit->add_option("--phase", oflags.phase);
  orbit->add_option("--periods", oflags.periods);
  orbit->add_option("--samples", oflags.samples, "samples per period");

  CoherentFlags cflags;
  auto* coherent = app.add_subcommand("coherent", "expectation values along a coherent orbit");
  add_common(coherent, common);
  coherent->add_option("--lambda-re", cflags.lambda_re);
  coherent->add_option("--lambda-im", cflags.lambda_im);
  coherent->add_option("--lambda-prime-re", cflags.lambda_prime_re);
  coherent->add_option("--lambda-prime-im", cflags.lambda_prime_im);
  coherent->add_option("--t-max", cflags.t_max, "default: one cyclotron period");
  coherent->add_option("--steps", cflags.steps);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*spectrum) return cmd_spectrum(common, seed);
    if (*density) return cmd_density(common, dflags);
    if (*group) return cmd_group(common);
    if (*verify) return cmd_verify(common, flux_override);
    if (*orbit) return cmd_orbit(common, oflags);
    if (*coherent) return cmd_coherent(common, cflags);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n" << app.help() << std::flush;
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
