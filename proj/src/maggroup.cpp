#include "landau/maggroup.hpp"

#include <algorithm>
#include <complex>
#include <numbers>
#include <set>
#include <stdexcept>

namespace landau {

namespace {

int reduce(long v, int n) {
  long r = v % n;
  if (r < 0) r += n;
  return static_cast<int>(r);
}

Eigen::MatrixXcd matrix_power(const Eigen::MatrixXcd& m, int k) {
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Identity(m.rows(), m.cols());
  for (int i = 0; i < k; ++i) out = out * m;
  return out;
}

void sort_unique(std::vector<GroupElement>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

GroupElement make_element(long nx, long ny, long m, int nphi) {
  if (nphi < 1) throw std::invalid_argument("nphi must be >= 1");
  return {reduce(nx, nphi), reduce(ny, nphi), reduce(m, nphi), nphi};
}

GroupElement identity_element(int nphi) { return make_element(0, 0, 0, nphi); }

GroupElement multiply(const GroupElement& a, const GroupElement& b) {
  if (a.nphi != b.nphi) throw std::invalid_argument("multiply: modulus mismatch");
  return make_element(long(a.nx) + b.nx, long(a.ny) + b.ny,
                      long(a.m) + b.m - long(a.nx) * b.ny, a.nphi);
}

GroupElement inverse(const GroupElement& g) {
  return make_element(-long(g.nx), -long(g.ny), -long(g.m) - long(g.nx) * g.ny, g.nphi);
}

std::vector<GroupElement> all_elements(int nphi) {
  if (nphi < 1) throw std::invalid_argument("nphi must be >= 1");
  std::vector<GroupElement> out;
  out.reserve(static_cast<std::size_t>(nphi) * nphi * nphi);
  for (int nx = 0; nx < nphi; ++nx)
    for (int ny = 0; ny < nphi; ++ny)
      for (int m = 0; m < nphi; ++m) out.push_back({nx, ny, m, nphi});
  return out;
}

int element_index(const GroupElement& g) { return (g.nx * g.nphi + g.ny) * g.nphi + g.m; }

std::vector<GroupElement> conjugacy_class(const GroupElement& g) {
  std::vector<GroupElement> out;
  for (int px = 0; px < g.nphi; ++px)
    for (int py = 0; py < g.nphi; ++py)
      out.push_back(make_element(g.nx, g.ny, long(g.m) + long(g.nx) * py - long(px) * g.ny, g.nphi));
  sort_unique(out);
  return out;
}

std::vector<GroupElement> conjugacy_class_brute_force(const GroupElement& g) {
  std::vector<GroupElement> out;
  for (const auto& h : all_elements(g.nphi)) out.push_back(multiply(multiply(h, g), inverse(h)));
  sort_unique(out);
  return out;
}

std::vector<std::vector<GroupElement>> conjugacy_classes(int nphi) {
  std::vector<std::vector<GroupElement>> classes;
  std::set<GroupElement> seen;
  for (const auto& g : all_elements(nphi)) {
    if (seen.contains(g)) continue;
    auto cls = conjugacy_class(g);
    seen.insert(cls.begin(), cls.end());
    classes.push_back(std::move(cls));
  }
  return classes;
}

std::vector<GroupElement> center(int nphi) {
  std::vector<GroupElement> out;
  for (int m = 0; m < nphi; ++m) out.push_back(make_element(0, 0, m, nphi));
  return out;
}

std::vector<GroupElement> center_brute_force(int nphi) {
  const auto elems = all_elements(nphi);
  std::vector<GroupElement> out;
  for (const auto& g : elems) {
    const bool central = std::all_of(elems.begin(), elems.end(), [&](const GroupElement& h) {
      return multiply(g, h) == multiply(h, g);
    });
    if (central) out.push_back(g);
  }
  return out;
}

QuotientReport quotient_by_center(int nphi) {
  const auto elems = all_elements(nphi);
  const auto z = center(nphi);
  QuotientReport r;

  // Coset of each element, as a sorted vector; identify cosets by their minimum.
  std::vector<int> coset_of(elems.size(), -1);
  std::vector<std::vector<GroupElement>> cosets;
  for (const auto& g : elems) {
    if (coset_of[element_index(g)] >= 0) continue;
    std::vector<GroupElement> c;
    for (const auto& zm : z) c.push_back(multiply(g, zm));
    sort_unique(c);
    for (const auto& h : c) coset_of[element_index(h)] = static_cast<int>(cosets.size());
    cosets.push_back(std::move(c));
  }
  r.coset_count = static_cast<int>(cosets.size());
  r.coset_size = cosets.empty() ? 0 : static_cast<int>(cosets.front().size());
  std::size_t covered = 0;
  for (const auto& c : cosets) covered += c.size();
  r.cosets_partition = covered == elems.size() &&
                       std::all_of(coset_of.begin(), coset_of.end(), [](int c) { return c >= 0; });

  // Coset product must not depend on the chosen representatives.
  const int k = r.coset_count;
  std::vector<int> table(static_cast<std::size_t>(k) * k, -1);
  bool well_defined = true;
  for (int a = 0; a < k; ++a) {
    for (int b = 0; b < k; ++b) {
      for (const auto& ga : cosets[a]) {
        for (const auto& gb : cosets[b]) {
          const int c = coset_of[element_index(multiply(ga, gb))];
          int& slot = table[static_cast<std::size_t>(a) * k + b];
          if (slot < 0) slot = c;
          well_defined = well_defined && slot == c;
        }
      }
    }
  }
  r.well_defined = well_defined;

  // Label each coset by (n_x, n_y) and compare with addition in Z(n) x Z(n).
  auto label = [&](int c) { return std::pair{cosets[c].front().nx, cosets[c].front().ny}; };
  bool iso = r.coset_count == nphi * nphi;
  std::set<std::pair<int, int>> labels;
  for (int c = 0; c < k; ++c) {
    iso = iso && std::all_of(cosets[c].begin(), cosets[c].end(), [&](const GroupElement& g) {
            return std::pair{g.nx, g.ny} == label(c);
          });
    labels.insert(label(c));
  }
  iso = iso && static_cast<int>(labels.size()) == k;
  for (int a = 0; a < k && iso; ++a) {
    for (int b = 0; b < k && iso; ++b) {
      const auto [ax, ay] = label(a);
      const auto [bx, by] = label(b);
      const auto expect = std::pair{(ax + bx) % nphi, (ay + by) % nphi};
      iso = label(table[static_cast<std::size_t>(a) * k + b]) == expect;
    }
  }
  r.isomorphic_to_zn_zn = iso;

  bool closed = true;
  for (int ax = 0; ax < nphi; ++ax)
    for (int ay = 0; ay < nphi; ++ay)
      for (int bx = 0; bx < nphi; ++bx)
        for (int by = 0; by < nphi; ++by)
          closed = closed && multiply(make_element(ax, ay, 0, nphi), make_element(bx, by, 0, nphi)).m == 0;
  r.section_is_subgroup = closed;
  return r;
}

UnitaryRep clock_shift_rep(int nphi) {
  if (nphi < 1) throw std::invalid_argument("nphi must be >= 1");
  UnitaryRep rep;
  rep.nphi = nphi;
  rep.tx = Eigen::MatrixXcd::Zero(nphi, nphi);
  rep.ty = Eigen::MatrixXcd::Zero(nphi, nphi);
  for (int l = 0; l < nphi; ++l) {
    rep.tx((l + 1) % nphi, l) = 1.0;
    // Quarter turns are set exactly so the nΦ = 4 generators are integral.
    static const std::complex<double> quarter[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    rep.ty(l, l) = (4 * l) % nphi == 0 ? quarter[((4 * l) / nphi) % 4]
                                       : std::polar(1.0, 2.0 * std::numbers::pi * l / nphi);
  }
  return rep;
}

Eigen::MatrixXcd represent(const UnitaryRep& rep, const GroupElement& g) {
  if (g.nphi != rep.nphi) throw std::invalid_argument("represent: modulus mismatch");
  const auto phase = std::polar(1.0, 2.0 * std::numbers::pi * g.m / g.nphi);
  return phase * matrix_power(rep.ty, g.ny) * matrix_power(rep.tx, g.nx);
}

double weyl_defect(const UnitaryRep& rep) {
  const auto q = std::polar(1.0, 2.0 * std::numbers::pi / rep.nphi);
  return (rep.ty * rep.tx - q * rep.tx * rep.ty).cwiseAbs().maxCoeff();
}

int commutant_dimension(const UnitaryRep& rep, double tol) {
  // vec(XT − TX) = (Tᵀ ⊗ I − I ⊗ T) vec(X) for T in {T_x, T_y}.
  const int n = rep.nphi;
  const int n2 = n * n;
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  auto kron = [&](const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
    Eigen::MatrixXcd out(n2, n2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) out.block(i * n, j * n, n, n) = a(i, j) * b;
    return out;
  };
  Eigen::MatrixXcd system(2 * n2, n2);
  system.topRows(n2) = kron(rep.tx.transpose(), id) - kron(id, rep.tx);
  system.bottomRows(n2) = kron(rep.ty.transpose(), id) - kron(id, rep.ty);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(system);
  const auto& s = svd.singularValues();
  int zero = 0;
  for (Eigen::Index i = 0; i < s.size(); ++i) zero += s(i) < tol ? 1 : 0;
  return zero;
}

}  // namespace landau
