#include "landau/spectral_oracle.hpp"

#include <Eigen/SparseCholesky>
#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>

namespace landau {

DiscreteHamiltonian build_hamiltonian(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny,
                                      bool with_flux) {
  const Eigen::Index min_cells = 8 * static_cast<Eigen::Index>(with_flux ? cfg.nphi() : 1);
  if (nx < min_cells || ny < min_cells) {
    throw std::invalid_argument("build_hamiltonian: grid " + std::to_string(nx) + "x" +
                                std::to_string(ny) + " too small, need at least " +
                                std::to_string(min_cells) + " cells per side");
  }
  DiscreteHamiltonian h{cfg, nx, ny, with_flux, {}};
  const double hx = cfg.lx() / double(nx);
  const double hy = cfg.ly() / double(ny);
  const double cx = 1.0 / (2.0 * cfg.mass() * hx * hx);
  const double cy = 1.0 / (2.0 * cfg.mass() * hy * hy);
  const double eb = with_flux ? cfg.charge() * cfg.field() : 0.0;
  const double nphi = with_flux ? double(cfg.nphi()) : 0.0;

  std::vector<Eigen::Triplet<cplx>> triplets;
  triplets.reserve(static_cast<std::size_t>(5 * nx * ny));
  for (Eigen::Index j = 0; j < ny; ++j) {
    const double y = double(j) * hy;
    // ψ(Nx, j) = e^{iθx − 2πi nΦ y/Ly} ψ(0, j)
    const cplx twist_x = std::polar(1.0, cfg.theta_x() - kTwoPi * nphi * y / cfg.ly());
    for (Eigen::Index i = 0; i < nx; ++i) {
      const double x = double(i) * hx;
      const Eigen::Index row = h.index(i, j);
      triplets.emplace_back(row, row, 2.0 * (cx + cy));

      // forward x-link; its Hermitian partner is the backward link of the neighbour
      const Eigen::Index ip = (i + 1) % nx;
      const cplx fx = (i + 1 == nx) ? twist_x : cplx{1.0};
      triplets.emplace_back(row, h.index(ip, j), -cx * fx);
      triplets.emplace_back(h.index(ip, j), row, -cx * std::conj(fx));

      // forward y-link with Peierls phase e^{ieBx hy}
      const Eigen::Index jp = (j + 1) % ny;
      cplx fy = std::polar(1.0, eb * x * hy);
      if (j + 1 == ny) fy *= std::polar(1.0, cfg.theta_y());
      triplets.emplace_back(row, h.index(i, jp), -cy * fy);
      triplets.emplace_back(h.index(i, jp), row, -cy * std::conj(fy));
    }
  }
  h.matrix.resize(nx * ny, nx * ny);
  h.matrix.setFromTriplets(triplets.begin(), triplets.end());
  return h;
}

double hermiticity_defect(const DiscreteHamiltonian& h) {
  const Eigen::SparseMatrix<cplx> adj = h.matrix.adjoint();
  const Eigen::SparseMatrix<cplx> diff = h.matrix - adj;
  double worst = 0.0;
  for (Eigen::Index c = 0; c < diff.outerSize(); ++c) {
    for (Eigen::SparseMatrix<cplx>::InnerIterator it(diff, c); it; ++it) {
      worst = std::max(worst, std::abs(it.value()));
    }
  }
  return worst;
}

double free_ground_energy(const TorusConfig& cfg, Eigen::Index nx, Eigen::Index ny) {
  auto branch = [](double theta) { return theta > kPi ? theta - kTwoPi : theta; };
  const double hx = cfg.lx() / double(nx);
  const double hy = cfg.ly() / double(ny);
  const double kx = branch(cfg.theta_x()) / cfg.lx();
  const double ky = branch(cfg.theta_y()) / cfg.ly();
  return (1.0 - std::cos(kx * hx)) / (cfg.mass() * hx * hx) +
         (1.0 - std::cos(ky * hy)) / (cfg.mass() * hy * hy);
}

std::vector<EnergyCluster> cluster_eigenvalues(const std::vector<double>& values, double ratio) {
  std::vector<EnergyCluster> out;
  const std::size_t n = values.size();
  if (n == 0) return out;
  double scale = 0.0;
  for (double v : values) scale = std::max(scale, std::abs(v));
  const double floor = 1e-12 * scale + 1e-300;

  auto split = [&](const std::vector<std::size_t>& cuts) {
    // cuts are gap indices g (between values[g] and values[g + 1]), ascending
    std::vector<EnergyCluster> cl;
    std::size_t start = 0;
    auto close = [&](std::size_t end) {
      EnergyCluster c;
      c.multiplicity = static_cast<int>(end - start);
      c.mean = std::accumulate(values.begin() + long(start), values.begin() + long(end), 0.0) /
               double(c.multiplicity);
      c.spread = values[end - 1] - values[start];
      cl.push_back(c);
      start = end;
    };
    for (std::size_t g : cuts) close(g + 1);
    close(n);
    return cl;
  };

  std::vector<std::size_t> order(n - 1);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return values[a + 1] - values[a] > values[b + 1] - values[b];
  });

  double best_ratio = 0.0;
  std::vector<std::size_t> best_cuts;
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<std::size_t> cuts(order.begin(), order.begin() + long(r));
    std::sort(cuts.begin(), cuts.end());
    const double min_gap = values[order[r - 1] + 1] - values[order[r - 1]];
    double max_spread = 0.0;
    for (const auto& c : split(cuts)) max_spread = std::max(max_spread, c.spread);
    const double q = min_gap / (max_spread + floor);
    if (q > best_ratio) {
      best_ratio = q;
      best_cuts = cuts;
    }
  }
  if (best_ratio <= ratio) best_cuts.clear();
  return split(best_cuts);
}

void assign_levels(std::vector<EnergyCluster>& clusters, double omega) {
  for (auto& c : clusters) {
    c.level = std::max(0, static_cast<int>(std::lround(c.mean / omega - 0.5)));
    c.reference = omega * (c.level + 0.5);
    c.relative_deviation = (c.mean - c.reference) / c.reference;
  }
}

namespace {

Eigen::MatrixXcd orthonormal_columns(const Eigen::MatrixXcd& m) {
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(m);
  return qr.householderQ() * Eigen::MatrixXcd::Identity(m.rows(), m.cols());
}

void dense_solve(const DiscreteHamiltonian& h, int k, SpectrumReport& rep) {
  const Eigen::MatrixXcd dense = Eigen::MatrixXcd(h.matrix);
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(dense);
  if (es.info() != Eigen::Success) throw std::runtime_error("dense eigensolver failed");
  rep.eigenvectors = es.eigenvectors().leftCols(k);
  rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
  rep.dense = true;
}

void shift_invert_solve(const DiscreteHamiltonian& h, int k, const SolverOptions& opts,
                        SpectrumReport& rep) {
  const Eigen::Index dim = h.dimension();
  const TorusConfig& cfg = h.config;
  // H is positive semidefinite, so any positive shift gives a definite system.
  const double shift = h.with_flux
                           ? 0.1 * cfg.omega()
                           : 0.1 * kTwoPi * kTwoPi /
                                 (2.0 * cfg.mass() * std::pow(std::max(cfg.lx(), cfg.ly()), 2));
  Eigen::SparseMatrix<cplx> shifted = h.matrix;
  for (Eigen::Index d = 0; d < dim; ++d) shifted.coeffRef(d, d) += shift;
  Eigen::SimplicialLLT<Eigen::SparseMatrix<cplx>> llt(shifted);
  if (llt.info() != Eigen::Success) throw std::runtime_error("shifted factorization failed");

  const Eigen::Index block = std::min<Eigen::Index>(dim, k + std::max(k, 8));
  std::mt19937 rng(opts.seed);
  std::normal_distribution<double> normal;
  Eigen::MatrixXcd x(dim, block);
  for (Eigen::Index c = 0; c < block; ++c) {
    for (Eigen::Index r = 0; r < dim; ++r) x(r, c) = cplx(normal(rng), normal(rng));
  }
  x = orthonormal_columns(x);

  for (int it = 1; it <= opts.max_iterations; ++it) {
    const Eigen::MatrixXcd q = orthonormal_columns(llt.solve(x));
    const Eigen::MatrixXcd hq = h.matrix * q;
    Eigen::MatrixXcd small = q.adjoint() * hq;
    small = 0.5 * (small + small.adjoint()).eval();
    const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(small);
    x = q * es.eigenvectors();
    const Eigen::MatrixXcd hx = hq * es.eigenvectors();

    double worst = 0.0;
    for (int c = 0; c < k; ++c) {
      worst = std::max(worst, (hx.col(c) - es.eigenvalues()(c) * x.col(c)).norm());
    }
    const double scale = std::max(std::abs(es.eigenvalues()(k - 1)), shift);
    if (worst <= opts.tolerance * scale) {
      rep.eigenvectors = x.leftCols(k);
      rep.eigenvalues.assign(es.eigenvalues().data(), es.eigenvalues().data() + k);
      rep.iterations = it;
      return;
    }
  }
  throw std::runtime_error("shift-invert iteration did not converge in " +
                           std::to_string(opts.max_iterations) + " steps");
}

}  // namespace

SpectrumReport low_spectrum(const DiscreteHamiltonian& h, int k, const SolverOptions& opts) {
  if (k < 1 || 4 * Eigen::Index(k) > h.dimension()) {
    throw std::invalid_argument("low_spectrum: need 1 <= k <= dimension/4");
  }
  SpectrumReport rep;
  if (h.dimension() <= opts.dense_limit) {
    dense_solve(h, k, rep);
  } else {
    shift_invert_solve(h, k, opts, rep);
  }
  for (int c = 0; c < k; ++c) {
    const double res =
        (h.matrix * rep.eigenvectors.col(c) - rep.eigenvalues[c] * rep.eigenvectors.col(c)).norm();
    rep.max_residual = std::max(rep.max_residual, res);
  }
  rep.clusters = cluster_eigenvalues(rep.eigenvalues, opts.cluster_ratio);
  if (h.with_flux) assign_levels(rep.clusters, h.config.omega());
  return rep;
}

SampledState eigenvector_state(const DiscreteHamiltonian& h, const SpectrumReport& report,
                               Eigen::Index column) {
  if (column < 0 || column >= report.eigenvectors.cols()) {
    throw std::out_of_range("eigenvector_state: column out of range");
  }
  SampledState s = zero_state(h.config, h.nx, h.ny);
  const double w = 1.0 / std::sqrt(s.hx() * s.hy());
  for (Eigen::Index j = 0; j < h.ny; ++j) {
    for (Eigen::Index i = 0; i < h.nx; ++i) {
      s.values(i, j) = w * report.eigenvectors(h.index(i, j), column);
    }
  }
  close_boundary(s);
  return s;
}

}  // namespace landau
