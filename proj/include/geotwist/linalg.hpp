// Projective linear algebra over a field tower: Eigen dense types with the
// exact scalar, plus the free functions the rest of the library builds on.
// Pivoting is on "nonzero", never on magnitude.

#pragma once

#include <Eigen/Core>

#include <optional>
#include <vector>

#include "geotwist/field.hpp"

namespace Eigen {
template <>
struct NumTraits<geotwist::FieldElement> {
  using Self = geotwist::FieldElement;
  using Real = Self;
  using NonInteger = Self;
  using Nested = Self;
  using Literal = int;
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 120
  };
  static Self epsilon() { return Self(0); }
  static Self dummy_precision() { return Self(0); }
  static int digits10() { return 0; }
};
}  // namespace Eigen

namespace geotwist {

using Matrix3 = Eigen::Matrix<FieldElement, 3, 3>;
using Vector3 = Eigen::Matrix<FieldElement, 3, 1>;
using MatrixX = Eigen::Matrix<FieldElement, Eigen::Dynamic, Eigen::Dynamic>;
using VectorX = Eigen::Matrix<FieldElement, Eigen::Dynamic, 1>;

template <typename Derived>
bool mat_is_zero(const Eigen::MatrixBase<Derived>& m) {
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero()) return false;
  return true;
}

template <typename A, typename B>
bool mat_equal(const Eigen::MatrixBase<A>& a, const Eigen::MatrixBase<B>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != b(i, j)) return false;
  return true;
}

FieldElement det3(const Matrix3& m);

// Classical adjugate; m * adjugate(m) = det3(m) * I exactly.  For rank-2
// matrices every nonzero column of the adjugate spans the kernel.
Matrix3 mat_adjugate(const Matrix3& m);

// A point of P^2, normalized so the first nonzero coordinate is 1.
class ProjPoint {
 public:
  ProjPoint() = default;
  explicit ProjPoint(Vector3 v);
  ProjPoint(FieldElement a, FieldElement b, FieldElement c);

  const Vector3& coords() const { return v_; }
  const FieldElement& operator[](int i) const { return v_(i); }
  bool operator==(const ProjPoint& o) const { return mat_equal(v_, o.v_); }
  bool operator!=(const ProjPoint& o) const { return !(*this == o); }
  std::string str() const;

 private:
  Vector3 v_;
};

// An element of PGL_3: invertible matrix normalized so the first nonzero
// entry in row-major order is 1.
class ProjMap {
 public:
  ProjMap();  // identity
  explicit ProjMap(Matrix3 m);

  const Matrix3& matrix() const { return m_; }
  ProjPoint apply(const ProjPoint& p) const;
  ProjMap compose(const ProjMap& o) const;  // this after o
  ProjMap inverse() const;
  ProjMap power(long n) const;

  bool operator==(const ProjMap& o) const { return mat_equal(m_, o.m_); }
  bool operator!=(const ProjMap& o) const { return !(*this == o); }
  bool is_identity() const;
  std::string str() const;

 private:
  Matrix3 m_;
};

// The unique projective map sending four general-position source points to
// the four targets; nullopt when the targets are degenerate.  Throws when
// the sources are not in general position.
std::optional<ProjMap> fit_proj_map(const std::array<ProjPoint, 4>& src,
                                    const std::array<ProjPoint, 4>& dst);

bool general_position(const std::array<ProjPoint, 4>& pts);

// Least n <= bound with m^n projectively the identity.
std::optional<long> proj_order(const ProjMap& m, long bound);

// Reduced row echelon form in place (pivots normalized to 1, eliminated
// above and below); returns pivot columns in order.
std::vector<int> rref_in_place(MatrixX& m);

int rank_of(MatrixX m);

// Kernel basis (columns are basis vectors) of an m x n matrix.
MatrixX kernel_basis(const MatrixX& m);

// Row-space membership: does v lie in the span of the rows of rr (an rref
// matrix with the given pivot columns)?
bool in_row_space(const MatrixX& rr, const std::vector<int>& pivots,
                  const VectorX& v);

}  // namespace geotwist
