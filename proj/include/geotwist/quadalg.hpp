// Quadratic algebras T(V)/(R) with dim V = 3: the relation-pencil point
// variety, the (G1)/(G2) checks, relation-space twisting, graded
// truncations, and the twisting-system axiom checker.
//
// Conventions.  A relation g = sum c_ij x_i (x) x_j is stored as the matrix
// (c_ij); it evaluates at a point pair as g(p,q) = p^T C q.  For fixed p the
// admissible q span the kernel of the pencil matrix M(p) whose k-th row is
// p^T C_k, so the point variety is V(det M) and sigma(p) is read off the
// adjugate of M(p).

#pragma once

#include <variant>

#include "geotwist/curve.hpp"

namespace geotwist {

class RelationSpace {
 public:
  RelationSpace() = default;
  // Exactly three linearly independent coefficient matrices.
  RelationSpace(std::vector<Matrix3> basis, TowerPtr tower);

  const std::vector<Matrix3>& basis() const { return basis_; }
  const TowerPtr& tower() const { return tower_; }

  // The relations as a 3x9 row-major coefficient matrix.
  MatrixX flat() const;
  // Canonical reduced row echelon form of flat(); basis-independent.
  MatrixX canonical() const;
  bool same_subspace(const RelationSpace& o) const;

 private:
  std::vector<Matrix3> basis_;
  TowerPtr tower_;
};

enum class ComponentKind { WholePlane, Line, Conic, Cubic };

// sigma on a component: either a polynomial triple in the ambient
// coordinates (with the index of the component it maps onto), or a
// translation-type automorphism of a smooth Hesse cubic.
struct PolySigma {
  std::array<Poly3, 3> map;
  int target = 0;
};
struct CurveSigma {
  EllipticAut aut;
};
using SigmaMap = std::variant<PolySigma, CurveSigma>;

struct Component {
  ComponentKind kind = ComponentKind::WholePlane;
  Poly3 form;  // zero for the whole plane
  // Rational parametrization in (s,t) (and u for the whole plane); absent
  // for smooth cubics, which are sampled through their curve handle.
  std::optional<std::array<Poly3, 3>> param;
  CurvePtr curve;  // set for ComponentKind::Cubic backed by a HesseCurve
  SigmaMap sigma;
};

struct GeometricPair {
  std::vector<Component> components;
  TowerPtr tower;

  // Evaluates sigma at a point of component ci.
  ProjPoint sigma_at(int ci, const ProjPoint& p) const;
  int sigma_target(int ci) const;
  // Deterministic sample points on component ci (primarily for cubics).
  std::vector<ProjPoint> component_samples(int ci, int count) const;
};

struct Certificate {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  bool ok = true;
  std::vector<Certificate> certificates;
  void add(const std::string& name, bool pass, const std::string& detail = "");
};

// The 3x3 pencil matrix with linear-form entries, and its determinant.
std::array<std::array<Poly3, 3>, 3> pencil_matrix(const RelationSpace& r);
Poly3 pencil_determinant(const RelationSpace& r);

struct SigmaUndetermined : std::domain_error {
  explicit SigmaUndetermined(const std::string& p)
      : std::domain_error("sigma undetermined at " + p + " (rank <= 1)") {}
};
struct PointOffVariety : std::domain_error {
  explicit PointOffVariety(const std::string& p)
      : std::domain_error("point not on the point variety: " + p) {}
};

// sigma(p) from the adjugate of M(p); requires rank M(p) = 2.
ProjPoint sigma_from_pencil(const RelationSpace& r, const ProjPoint& p);

// (G1): the pencil determinant factors as the component forms and sigma
// agrees with the pair on every component (symbolically where parametrized,
// on chord samples for smooth cubics).
CheckReport verify_G1(const RelationSpace& r, const GeometricPair& pair);

struct G2Error : std::domain_error {
  explicit G2Error(int dim)
      : std::domain_error("relation kernel has dimension " + std::to_string(dim) +
                          ", expected 3"),
        dimension(dim) {}
  int dimension;
};

// (G2): the forms vanishing on the graph of sigma, as an exact kernel.
RelationSpace reconstruct_G2(const GeometricPair& pair);

// R^phi = (1 (x) phi^{-1})(R); phi must be invertible.
RelationSpace twist_relations(const RelationSpace& r, const Matrix3& phi);

// The pair (E, tau|_E sigma) for a linear tau preserving E.
GeometricPair pair_after_linear(const GeometricPair& pair, const ProjMap& tau);

// Do the algebraic and geometric twist routes agree exactly?
bool geometric_twist_check(const RelationSpace& r, const Matrix3& phi,
                           const GeometricPair& pair);

// (dim A_0, ..., dim A_d) by exact span computation; d <= 6.
std::vector<long> truncation_dims(const RelationSpace& r, int d);

// Graded truncation with normal forms and exact multiplication.
class GradedTruncation {
 public:
  GradedTruncation(const RelationSpace& r, int d);

  int degree_bound() const { return d_; }
  long dim(int n) const { return long(basis_words_[size_t(n)].size()); }
  const std::vector<long>& basis_words(int n) const {
    return basis_words_[size_t(n)];
  }

  // Coordinates of a full 3^n tensor vector in the A_n basis.
  VectorX normal_form(int n, const VectorX& v) const;
  // Product of basis elements a (degree m, index ai) and b (degree l, bi),
  // as coordinates in A_{m+l}.
  VectorX multiply_basis(int m, long ai, int l, long bi) const;
  // Matrix of the degree-n component of the linear extension of a map on V
  // (phi(x_a) = sum_b P(b,a) x_b) acting on A_n.
  MatrixX degree_matrix(const Matrix3& p, int n) const;

 private:
  int d_;
  // per degree: rref of the relation span, its pivots, and basis word ids
  std::vector<MatrixX> rel_rref_;
  std::vector<std::vector<int>> rel_pivots_;
  std::vector<std::vector<long>> basis_words_;
};

struct TwistingWitness {
  int n = 0, m = 0, l = 0;
  long a_index = 0, b_index = 0;
};

// Checks theta_n(a * theta_m(b)) = theta_n(a) * theta_{n+m}(b) on all basis
// pairs with deg a + deg b <= d and all applicable window indices; theta[n]
// holds per-degree matrices for degrees 1..d.  Returns the first failure.
std::optional<TwistingWitness> verify_twisting_system(
    const GradedTruncation& t,
    const std::vector<std::vector<MatrixX>>& theta, int d,
    bool require_theta0_identity, bool* theta0_is_identity = nullptr);

// theta_n = phi^n for a linear map phi on V, realized degree-wise.
std::vector<std::vector<MatrixX>> algebraic_twisting_system(
    const GradedTruncation& t, const Matrix3& phi, int window, int d);

}  // namespace geotwist
