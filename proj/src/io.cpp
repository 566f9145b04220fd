#include "landau/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace landau {

namespace {

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json to_json(const TorusConfig& cfg) {
  return json{{"mass", cfg.mass()},       {"charge", cfg.charge()},   {"lx", cfg.lx()},
              {"ly", cfg.ly()},           {"nphi", cfg.nphi()},       {"theta_x", cfg.theta_x()},
              {"theta_y", cfg.theta_y()}, {"field", cfg.field()},     {"omega", cfg.omega()}};
}

json to_json(const SpectrumReport& report) {
  json clusters = json::array();
  for (const auto& c : report.clusters) {
    json jc{{"mean", c.mean}, {"spread", c.spread}, {"multiplicity", c.multiplicity}};
    if (c.level >= 0) {
      jc["level"] = c.level;
      jc["reference"] = c.reference;
      jc["relative_deviation"] = c.relative_deviation;
    }
    clusters.push_back(std::move(jc));
  }
  return json{{"eigenvalues", report.eigenvalues},
              {"clusters", std::move(clusters)},
              {"max_residual", report.max_residual},
              {"solver", report.dense ? "dense" : "shift-invert"},
              {"iterations", report.iterations}};
}

void write_json(const std::filesystem::path& path, const json& doc) {
  auto out = open_out(path);
  out << doc.dump(2) << '\n';
}

void write_state_csv(const std::filesystem::path& path, const SampledState& state) {
  auto out = open_out(path);
  out << "x,y,re,im\n";
  for (Eigen::Index j = 0; j < state.ny(); ++j) {
    for (Eigen::Index i = 0; i < state.nx(); ++i) {
      const cplx v = state.values(i, j);
      out << format_double(state.x(i)) << ',' << format_double(state.y(j)) << ','
          << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
    }
  }
}

void write_density_csv(const std::filesystem::path& path, const SampledState& state,
                       const DensityMap& map) {
  auto out = open_out(path);
  out << "x,y,density\n";
  for (Eigen::Index j = 0; j < state.ny(); ++j) {
    for (Eigen::Index i = 0; i < state.nx(); ++i) {
      out << format_double(state.x(i)) << ',' << format_double(state.y(j)) << ','
          << format_double(map.density(i, j)) << '\n';
    }
  }
}

void write_density_pgm(const std::filesystem::path& path, const DensityMap& map) {
  const Eigen::Index nx = map.density.rows() - 1;
  const Eigen::Index ny = map.density.cols() - 1;
  const double peak = map.density.topLeftCorner(nx, ny).maxCoeff();
  auto out = open_out(path);
  out << "P2\n" << nx << ' ' << ny << "\n255\n";
  for (Eigen::Index j = ny - 1; j >= 0; --j) {
    for (Eigen::Index i = 0; i < nx; ++i) {
      const long g = peak > 0.0 ? std::lround(255.0 * map.density(i, j) / peak) : 0;
      out << g << (i + 1 == nx ? '\n' : ' ');
    }
  }
}

}  // namespace landau
