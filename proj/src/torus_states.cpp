#include "landau/torus_states.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "landau/oscillator.hpp"

namespace landau {

namespace {

const cplx kI{0.0, 1.0};

// Indices k for which offset + k·period lies in [lo, hi].
std::pair<long, long> index_range(double offset, double period, double lo, double hi) {
  return {static_cast<long>(std::ceil((lo - offset) / period)),
          static_cast<long>(std::floor((hi - offset) / period))};
}

std::pair<long, long> apply_policy(std::pair<long, long> needed, const LatticeSumPolicy& policy) {
  if (policy.cutoff <= 0) return needed;
  if (needed.first < -policy.cutoff || needed.second > policy.cutoff) {
    throw std::runtime_error("lattice sum cutoff " + std::to_string(policy.cutoff) +
                             " drops terms above tolerance (need [" +
                             std::to_string(needed.first) + ", " +
                             std::to_string(needed.second) + "])");
  }
  return {-policy.cutoff, policy.cutoff};
}

void check_policy(const LatticeSumPolicy& policy) {
  if (!(policy.tolerance > 0.0 && policy.tolerance < 1.0)) {
    throw std::invalid_argument("lattice sum tolerance must lie in (0, 1)");
  }
}

// Distance beyond which an oscillator eigenfunction of level n falls below tol.
double oscillator_reach(const TorusConfig& cfg, int n, double tol) {
  return (std::sqrt(2.0 * n + 1.0) + std::sqrt(2.0 * std::log(1.0 / tol))) /
         std::sqrt(cfg.mass_frequency());
}

// Same for a coherent packet, |ψ| ∝ exp(−Mω d²/4).
double coherent_reach(const TorusConfig& cfg, double tol) {
  return std::sqrt(4.0 * std::log(1.0 / tol) / cfg.mass_frequency());
}

void check_level(int n) {
  if (n < 0) throw std::invalid_argument("Landau level must be >= 0");
}

// Terms of the eigenstate sums, shared by point evaluation and sampling.
struct EigenSum {
  int n;
  DegeneracyBasis basis;
  long k_lo, k_hi;
  double offset;  // l + θ/2π
};

EigenSum eigen_sum(const TorusConfig& cfg, TorusLabel label, const LatticeSumPolicy& policy) {
  check_level(label.n);
  check_policy(policy);
  const double reach = oscillator_reach(cfg, label.n, policy.tolerance);
  EigenSum s{label.n, label.basis, 0, 0, 0.0};
  if (label.basis == DegeneracyBasis::Ly) {
    s.offset = label.l + cfg.theta_y() / kTwoPi;
    // centre of term k: −(nΦ k + offset) a_x = −offset a_x − k Lx
    const auto [lo, hi] = index_range(s.offset * cfg.step_x(), cfg.lx(), -cfg.lx() - reach, reach);
    std::tie(s.k_lo, s.k_hi) = apply_policy({lo, hi}, policy);
  } else {
    s.offset = label.l + cfg.theta_x() / kTwoPi;
    // centre of term k: (nΦ k + offset) a_y
    const auto [lo, hi] =
        index_range(s.offset * cfg.step_y(), cfg.ly(), -reach, cfg.ly() + reach);
    std::tie(s.k_lo, s.k_hi) = apply_policy({lo, hi}, policy);
  }
  return s;
}

struct CoherentSum {
  long x_lo, x_hi, y_lo, y_hi;
};

CoherentSum coherent_sum(const TorusConfig& cfg, const CoherentAmplitude& amp,
                         const LatticeSumPolicy& policy) {
  check_policy(policy);
  const double reach = coherent_reach(cfg, policy.tolerance);
  // copy (n_x, n_y) is centred at (x̄ − n_x Lx, ȳ − n_y Ly)
  const auto [xl, xh] = index_range(-amp.mean_x(), cfg.lx(), -cfg.lx() - reach, reach);
  const auto [yl, yh] = index_range(-amp.mean_y(), cfg.ly(), -cfg.ly() - reach, reach);
  const auto rx = apply_policy({xl, xh}, policy);
  const auto ry = apply_policy({yl, yh}, policy);
  return {rx.first, rx.second, ry.first, ry.second};
}

}  // namespace

std::pair<Eigen::Index, Eigen::Index> torus_cells(const TorusConfig& cfg,
                                                  double h2_mass_frequency,
                                                  Eigen::Index min_cells) {
  const double h = std::sqrt(h2_mass_frequency / cfg.mass_frequency());
  const Eigen::Index nphi = cfg.nphi();
  auto round_up = [nphi](Eigen::Index n) { return ((n + nphi - 1) / nphi) * nphi; };
  const auto nx = std::max(min_cells, static_cast<Eigen::Index>(std::ceil(cfg.lx() / h)));
  const auto ny = std::max(min_cells, static_cast<Eigen::Index>(std::ceil(cfg.ly() / h)));
  return {round_up(nx), round_up(ny)};
}

Wavefunction torus_eigenfunction(const TorusConfig& cfg, TorusLabel label,
                                 LatticeSumPolicy policy) {
  const EigenSum s = eigen_sum(cfg, label, policy);
  const OscillatorBasis basis(cfg.mass_frequency(), std::max(label.n, 1));
  const int nphi = cfg.nphi();
  if (s.basis == DegeneracyBasis::Ly) {
    return [=](double x, double y) {
      cplx sum{};
      for (long k = s.k_lo; k <= s.k_hi; ++k) {
        const double q = nphi * double(k) + s.offset;
        sum += basis(s.n, x + q * cfg.step_x()) *
               std::polar(1.0, kTwoPi * y * q / cfg.ly() - cfg.theta_x() * double(k));
      }
      return sum;
    };
  }
  return [=](double x, double y) {
    cplx sum{};
    for (long k = s.k_lo; k <= s.k_hi; ++k) {
      const double q = nphi * double(k) + s.offset;
      sum += basis(s.n, y - q * cfg.step_y()) *
             std::polar(1.0, kTwoPi * x * (q - nphi * y / cfg.ly()) / cfg.lx() +
                                 cfg.theta_y() * double(k));
    }
    return sum;
  };
}

SampledState torus_eigenstate(const TorusConfig& cfg, TorusLabel label, Eigen::Index nx,
                              Eigen::Index ny, LatticeSumPolicy policy) {
  const EigenSum s = eigen_sum(cfg, label, policy);
  const OscillatorBasis basis(cfg.mass_frequency(), std::max(label.n, 1));
  SampledState st = zero_state(cfg, nx, ny);
  const int nphi = cfg.nphi();
  const long terms = s.k_hi - s.k_lo + 1;
  Eigen::MatrixXcd u(nx + 1, terms);
  Eigen::MatrixXcd v(ny + 1, terms);
  for (long t = 0; t < terms; ++t) {
    const long k = s.k_lo + t;
    const double q = nphi * double(k) + s.offset;
    if (s.basis == DegeneracyBasis::Ly) {
      for (Eigen::Index i = 0; i <= nx; ++i) u(i, t) = basis(s.n, st.x(i) + q * cfg.step_x());
      for (Eigen::Index j = 0; j <= ny; ++j) {
        v(j, t) = std::polar(1.0, kTwoPi * st.y(j) * q / cfg.ly() - cfg.theta_x() * double(k));
      }
    } else {
      for (Eigen::Index i = 0; i <= nx; ++i) {
        u(i, t) = std::polar(1.0, kTwoPi * st.x(i) * q / cfg.lx() + cfg.theta_y() * double(k));
      }
      for (Eigen::Index j = 0; j <= ny; ++j) v(j, t) = basis(s.n, st.y(j) - q * cfg.step_y());
    }
  }
  st.values = u * v.transpose();
  if (s.basis == DegeneracyBasis::Lx) {
    // common factor e^{−2πi nΦ x y/(Lx Ly)}
    for (Eigen::Index j = 0; j <= ny; ++j) {
      for (Eigen::Index i = 0; i <= nx; ++i) {
        st.values(i, j) *=
            std::polar(1.0, -kTwoPi * nphi * st.x(i) * st.y(j) / (cfg.lx() * cfg.ly()));
      }
    }
  }
  return normalized(std::move(st));
}

std::vector<SampledState> torus_level(const TorusConfig& cfg, int n, DegeneracyBasis basis,
                                      Eigen::Index nx, Eigen::Index ny,
                                      LatticeSumPolicy policy) {
  std::vector<SampledState> out;
  out.reserve(static_cast<std::size_t>(cfg.nphi()));
  for (int l = 0; l < cfg.nphi(); ++l) {
    out.push_back(torus_eigenstate(cfg, {n, l, basis}, nx, ny, policy));
  }
  return out;
}

SampledState apply_tx(const SampledState& state) {
  const TorusConfig& cfg = state.config;
  if (state.nx() % cfg.nphi() != 0) {
    throw std::invalid_argument("apply_tx: nx must be a multiple of nphi");
  }
  const Eigen::Index shift = state.nx() / cfg.nphi();
  SampledState out = zero_state(cfg, state.nx(), state.ny());
  for (Eigen::Index j = 0; j <= state.ny(); ++j) {
    const cplx gauge =
        std::polar(1.0, kTwoPi * state.y(j) / cfg.ly() - cfg.theta_x() / cfg.nphi());
    for (Eigen::Index i = 0; i <= state.nx(); ++i) {
      out.values(i, j) = gauge * state.extended(i + shift, j);
    }
  }
  return out;
}

SampledState apply_ty(const SampledState& state) {
  const TorusConfig& cfg = state.config;
  if (state.ny() % cfg.nphi() != 0) {
    throw std::invalid_argument("apply_ty: ny must be a multiple of nphi");
  }
  const Eigen::Index shift = state.ny() / cfg.nphi();
  const cplx phase = std::polar(1.0, -cfg.theta_y() / cfg.nphi());
  SampledState out = zero_state(cfg, state.nx(), state.ny());
  for (Eigen::Index j = 0; j <= state.ny(); ++j) {
    for (Eigen::Index i = 0; i <= state.nx(); ++i) {
      out.values(i, j) = phase * state.extended(i, j + shift);
    }
  }
  return out;
}

cplx tx_ladder_phase(const TorusConfig& cfg, int l) {
  const int nphi = cfg.nphi();
  const int lr = ((l % nphi) + nphi) % nphi;
  cplx c = std::polar(1.0, -cfg.theta_x() / nphi);
  if (lr == nphi - 1) c *= std::polar(1.0, cfg.theta_x());
  return c;
}

cplx ty_ladder_phase(const TorusConfig& cfg, int l) {
  const int nphi = cfg.nphi();
  const int lr = ((l % nphi) + nphi) % nphi;
  cplx c = std::polar(1.0, -cfg.theta_y() / nphi);
  if (lr == 0) c *= std::polar(1.0, cfg.theta_y());
  return c;
}

Wavefunction torus_coherent_sum(const TorusConfig& cfg, CoherentLabel label,
                                LatticeSumPolicy policy) {
  const CoherentAmplitude amp(cfg.plane(), label);
  const CoherentSum s = coherent_sum(cfg, amp, policy);
  return [=](double x, double y) {
    cplx sum{};
    for (long a = s.x_lo; a <= s.x_hi; ++a) {
      for (long b = s.y_lo; b <= s.y_hi; ++b) {
        const double phase = kTwoPi * cfg.nphi() * double(a) * y / cfg.ly() -
                             cfg.theta_x() * double(a) - cfg.theta_y() * double(b);
        sum += std::exp(amp.log_value(x + double(a) * cfg.lx(), y + double(b) * cfg.ly()) +
                        kI * phase);
      }
    }
    return sum;
  };
}

SampledState torus_coherent(const TorusConfig& cfg, CoherentLabel label, Eigen::Index nx,
                            Eigen::Index ny, LatticeSumPolicy policy) {
  const CoherentAmplitude amp(cfg.plane(), label);
  const CoherentSum s = coherent_sum(cfg, amp, policy);
  SampledState st = zero_state(cfg, nx, ny);
  const double mw = cfg.mass_frequency();
  const double c = std::sqrt(mw / 2.0);
  const cplx sum_l = label.lambda + label.lambda_prime;
  const cplx diff_l = label.lambda - label.lambda_prime;

  // log ψ(x+X, y+Y) = G(x,y) + u(x) + v(y) + const with G = −(iMω/2) x y.
  auto fx = [&](double x) { return -(mw / 4.0) * x * x + c * x * sum_l.real(); };
  auto gy = [&](double y) { return -(mw / 4.0) * y * y - c * y * diff_l.imag(); };
  const double fpeak = fx(amp.mean_x());
  const double gpeak = gy(amp.mean_y());

  const long tx = s.x_hi - s.x_lo + 1;
  const long ty = s.y_hi - s.y_lo + 1;
  Eigen::MatrixXcd u(nx + 1, tx * ty);
  Eigen::MatrixXcd v(ny + 1, tx * ty);
  for (long a = 0; a < tx; ++a) {
    for (long b = 0; b < ty; ++b) {
      const long col = a * ty + b;
      const double na = double(s.x_lo + a);
      const double nb = double(s.y_lo + b);
      const double X = na * cfg.lx();
      const double Y = nb * cfg.ly();
      const cplx konst = -kI * (mw / 2.0) * X * Y + amp.log_norm() + fpeak + gpeak -
                         kI * (cfg.theta_x() * na + cfg.theta_y() * nb);
      for (Eigen::Index i = 0; i <= nx; ++i) {
        const double x = st.x(i);
        const double xs = x + X;
        const cplx e = -(mw / 4.0) * xs * xs - kI * (mw / 2.0) * x * Y + c * xs * sum_l - fpeak;
        u(i, col) = std::exp(e + konst);
      }
      for (Eigen::Index j = 0; j <= ny; ++j) {
        const double y = st.y(j);
        const double ys = y + Y;
        const cplx e = -(mw / 4.0) * ys * ys - kI * (mw / 2.0) * X * y + kI * c * ys * diff_l -
                       gpeak + kI * (kTwoPi * cfg.nphi() * na * y / cfg.ly());
        v(j, col) = std::exp(e);
      }
    }
  }
  st.values = u * v.transpose();
  for (Eigen::Index j = 0; j <= ny; ++j) {
    for (Eigen::Index i = 0; i <= nx; ++i) {
      st.values(i, j) *= std::polar(1.0, -(mw / 2.0) * st.x(i) * st.y(j));
    }
  }
  return normalized(std::move(st));
}

namespace {

struct CoherentPhases {
  double phi_x;  // 2π⟨R_y⟩/Ly − θx/nΦ
  double phi_y;  // 2π⟨R_x⟩/Lx + θy/nΦ
};

CoherentPhases coherent_phases(const TorusConfig& cfg, CoherentLabel label) {
  const auto e = coherent_expectations(cfg.plane(), label);
  return {kTwoPi * e.center_y / cfg.ly() - cfg.theta_x() / cfg.nphi(),
          kTwoPi * e.center_x / cfg.lx() + cfg.theta_y() / cfg.nphi()};
}

// Σ_{m_x, m_y} (−1)^{k_x m_y'} ... written for general shifts
//   k_x = nΦ m_x + lx,  k_y = nΦ m_y + ly,
// each term (−1)^{k_x k_y / nΦ}-type sign as e^{−iπ k_x k_y/nΦ}, Gaussian
// exp(−π²(k_x²/Ly² + k_y²/Lx²)/(Mω)), phase e^{i nΦ m_x φ_x − i nΦ m_y φ_y}.
cplx lattice_sum(const TorusConfig& cfg, const CoherentPhases& ph, int lx, int ly) {
  const int nphi = cfg.nphi();
  const double mw = cfg.mass_frequency();
  const double gx = kPi * kPi / (mw * cfg.ly() * cfg.ly());
  const double gy = kPi * kPi / (mw * cfg.lx() * cfg.lx());
  // exp(−g k²) < 1e−20 beyond |k| > √(46/g)
  const long mx_max = static_cast<long>(std::ceil((std::sqrt(46.0 / gx) + std::abs(lx)) / nphi)) + 1;
  const long my_max = static_cast<long>(std::ceil((std::sqrt(46.0 / gy) + std::abs(ly)) / nphi)) + 1;
  cplx sum{};
  for (long mx = -mx_max; mx <= mx_max; ++mx) {
    for (long my = -my_max; my <= my_max; ++my) {
      const long kx = nphi * mx + lx;
      const long ky = nphi * my + ly;
      // e^{−iπ kx ky/nΦ}; with one of lx, ly zero this is (−1)^{(...)·m}
      const long parity_exp = (lx != 0) ? kx * my : ((ly != 0) ? ky * mx : nphi * mx * my);
      const double sign = (std::abs(parity_exp) % 2 == 0) ? 1.0 : -1.0;
      const double gauss = std::exp(-gx * double(kx) * double(kx) - gy * double(ky) * double(ky));
      sum += sign * gauss *
             std::polar(1.0, nphi * double(mx) * ph.phi_x - nphi * double(my) * ph.phi_y);
    }
  }
  return sum;
}

}  // namespace

double coherent_normalization_sum(const TorusConfig& cfg, CoherentLabel label) {
  return lattice_sum(cfg, coherent_phases(cfg, label), 0, 0).real();
}

cplx translation_prefactor(const TorusConfig& cfg, CoherentLabel label, Direction dir, int l) {
  const CoherentPhases ph = coherent_phases(cfg, label);
  const double norm = lattice_sum(cfg, ph, 0, 0).real();
  const cplx raw = dir == Direction::X ? lattice_sum(cfg, ph, l, 0) : lattice_sum(cfg, ph, 0, l);
  return raw / norm;
}

cplx translation_phase(const TorusConfig& cfg, CoherentLabel label, Direction dir, int l) {
  const CoherentPhases ph = coherent_phases(cfg, label);
  return dir == Direction::X ? std::polar(1.0, l * ph.phi_x) : std::polar(1.0, -l * ph.phi_y);
}

cplx translation_expectation(const SampledState& state, Direction dir, int l) {
  if (l < 0) throw std::invalid_argument("translation_expectation: power must be >= 0");
  SampledState shifted = state;
  for (int k = 0; k < l; ++k) shifted = dir == Direction::X ? apply_tx(shifted) : apply_ty(shifted);
  return inner_product(state, shifted);
}

double projector_distance(std::span<const SampledState> a, std::span<const SampledState> b,
                          double orthonormality_tol) {
  if (a.empty() && b.empty()) return 0.0;
  const SampledState& ref = a.empty() ? b.front() : a.front();
  const Eigen::Index nx = ref.nx();
  const Eigen::Index ny = ref.ny();
  const double w = std::sqrt(ref.hx() * ref.hy());
  auto stack = [&](std::span<const SampledState> set) {
    Eigen::MatrixXcd m(nx * ny, static_cast<Eigen::Index>(set.size()));
    for (std::size_t k = 0; k < set.size(); ++k) {
      if (!same_grid(set[k], ref)) throw std::invalid_argument("projector_distance: grid mismatch");
      m.col(static_cast<Eigen::Index>(k)) =
          w * set[k].values.topLeftCorner(nx, ny).reshaped();
    }
    const Eigen::MatrixXcd gram = m.adjoint() * m;
    const double dev =
        (gram - Eigen::MatrixXcd::Identity(gram.rows(), gram.cols())).cwiseAbs().maxCoeff();
    if (gram.size() > 0 && dev > orthonormality_tol) {
      throw std::invalid_argument("projector_distance: set is not orthonormal (deviation " +
                                  std::to_string(dev) + ")");
    }
    return m;
  };
  const Eigen::MatrixXcd ma = stack(a);
  const Eigen::MatrixXcd mb = stack(b);
  Eigen::MatrixXcd joint(nx * ny, ma.cols() + mb.cols());
  joint << ma, mb;
  const Eigen::HouseholderQR<Eigen::MatrixXcd> qr(joint);
  const Eigen::MatrixXcd q =
      qr.householderQ() * Eigen::MatrixXcd::Identity(joint.rows(), joint.cols());
  const Eigen::MatrixXcd ca = q.adjoint() * ma;
  const Eigen::MatrixXcd cb = q.adjoint() * mb;
  const Eigen::MatrixXcd diff = ca * ca.adjoint() - cb * cb.adjoint();
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(diff, Eigen::EigenvaluesOnly);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

DensityMap density_map(const SampledState& state) {
  const Eigen::Index nx = state.nx();
  const Eigen::Index ny = state.ny();
  DensityMap d;
  d.lx = state.config.lx();
  d.ly = state.config.ly();
  const double nn = inner_product(state, state).real();
  if (!(nn > 0.0)) throw std::domain_error("density_map: null state");
  d.density = state.values.cwiseAbs2() / nn;
  const auto interior = d.density.topLeftCorner(nx, ny);
  interior.maxCoeff(&d.argmax_i, &d.argmax_j);
  d.argmax_x = state.x(d.argmax_i);
  d.argmax_y = state.y(d.argmax_j);
  for (Eigen::Index j = 0; j < ny; ++j) {
    for (Eigen::Index i = 0; i < nx; ++i) {
      const double v = interior(i, j);
      bool is_max = true;
      for (int di = -1; di <= 1 && is_max; ++di) {
        for (int dj = -1; dj <= 1 && is_max; ++dj) {
          if (di == 0 && dj == 0) continue;
          is_max = v > interior((i + di + nx) % nx, (j + dj + ny) % ny);
        }
      }
      d.local_maxima += is_max ? 1 : 0;
    }
  }
  return d;
}

}  // namespace landau
