#pragma once

#include <Eigen/Dense>
#include <compare>
#include <vector>

namespace landau {

/// g(n_x, n_y, m) = e^{2πim/nΦ} T_y^{n_y} T_x^{n_x}, components reduced into
/// [0, nΦ).
struct GroupElement {
  int nx = 0;
  int ny = 0;
  int m = 0;
  int nphi = 1;

  auto operator<=>(const GroupElement&) const = default;
};

/// Euclidean reduction of all components. Throws if nphi < 1.
GroupElement make_element(long nx, long ny, long m, int nphi);
GroupElement identity_element(int nphi);

/// g(n_x + n_x′, n_y + n_y′, m + m′ − n_x n_y′). Throws std::invalid_argument
/// on modulus mismatch.
GroupElement multiply(const GroupElement& a, const GroupElement& b);

/// g(−n_x, −n_y, −m − n_x n_y).
GroupElement inverse(const GroupElement& g);

/// All nΦ³ elements in lexicographic (n_x, n_y, m) order.
std::vector<GroupElement> all_elements(int nphi);

/// Position of g in all_elements(g.nphi).
int element_index(const GroupElement& g);

/// Closed form {g(n_x, n_y, m + n_x n_y′ − n_x′ n_y)}, sorted and deduplicated.
std::vector<GroupElement> conjugacy_class(const GroupElement& g);

/// {h g h⁻¹ : h ∈ G} by enumeration, sorted and deduplicated.
std::vector<GroupElement> conjugacy_class_brute_force(const GroupElement& g);

/// Partition of G into conjugacy classes, ordered by smallest member.
std::vector<std::vector<GroupElement>> conjugacy_classes(int nphi);

/// {g(0, 0, m)}.
std::vector<GroupElement> center(int nphi);

/// Elements commuting with every element, by enumeration.
std::vector<GroupElement> center_brute_force(int nphi);

/// Structural check of G / Z(nΦ) built by coset enumeration.
struct QuotientReport {
  int coset_count = 0;
  int coset_size = 0;
  bool cosets_partition = false;   // cosets are disjoint and cover G
  bool well_defined = false;       // coset product independent of representatives
  bool isomorphic_to_zn_zn = false;  // (n_x, n_y) labelling is an isomorphism
  bool section_is_subgroup = false;  // {g(n_x, n_y, 0)} closed under multiplication
};
QuotientReport quotient_by_center(int nphi);

/// nΦ-dimensional clock-and-shift representation: T_x e_l = e_{l+1},
/// T_y e_l = e^{2πil/nΦ} e_l.
struct UnitaryRep {
  int nphi = 1;
  Eigen::MatrixXcd tx;
  Eigen::MatrixXcd ty;
};
UnitaryRep clock_shift_rep(int nphi);

/// e^{2πim/nΦ} T_y^{n_y} T_x^{n_x}.
Eigen::MatrixXcd represent(const UnitaryRep& rep, const GroupElement& g);

/// max |T_y T_x − e^{2πi/nΦ} T_x T_y|.
double weyl_defect(const UnitaryRep& rep);

/// Dimension of {X : X T_x = T_x X, X T_y = T_y X}; 1 for an irreducible rep.
int commutant_dimension(const UnitaryRep& rep, double tol = 1e-10);

}  // namespace landau
