#include "geotwist/linalg.hpp"

#include <sstream>

namespace geotwist {

FieldElement det3(const Matrix3& m) {
  return m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1)) -
         m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0)) +
         m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0));
}

Matrix3 mat_adjugate(const Matrix3& m) {
  Matrix3 a;
  a(0, 0) = m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1);
  a(0, 1) = m(0, 2) * m(2, 1) - m(0, 1) * m(2, 2);
  a(0, 2) = m(0, 1) * m(1, 2) - m(0, 2) * m(1, 1);
  a(1, 0) = m(1, 2) * m(2, 0) - m(1, 0) * m(2, 2);
  a(1, 1) = m(0, 0) * m(2, 2) - m(0, 2) * m(2, 0);
  a(1, 2) = m(0, 2) * m(1, 0) - m(0, 0) * m(1, 2);
  a(2, 0) = m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0);
  a(2, 1) = m(0, 1) * m(2, 0) - m(0, 0) * m(2, 1);
  a(2, 2) = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  return a;
}

namespace {
Vector3 normalize_point(Vector3 v) {
  for (int i = 0; i < 3; ++i) {
    if (!v(i).is_zero()) {
      FieldElement inv = v(i).inverse();
      for (int j = 0; j < 3; ++j) v(j) = v(j) * inv;
      return v;
    }
  }
  throw std::invalid_argument("projective point cannot be zero");
}
}  // namespace

ProjPoint::ProjPoint(Vector3 v) : v_(normalize_point(std::move(v))) {}

ProjPoint::ProjPoint(FieldElement a, FieldElement b, FieldElement c) {
  Vector3 v;
  v << std::move(a), std::move(b), std::move(c);
  v_ = normalize_point(std::move(v));
}

std::string ProjPoint::str() const {
  std::ostringstream os;
  os << "(" << v_(0) << ":" << v_(1) << ":" << v_(2) << ")";
  return os.str();
}

namespace {
Matrix3 normalize_map(Matrix3 m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (!m(i, j).is_zero()) {
        FieldElement inv = m(i, j).inverse();
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) m(a, b) = m(a, b) * inv;
        return m;
      }
  throw std::invalid_argument("projective map cannot be zero");
}
}  // namespace

ProjMap::ProjMap() {
  m_.setZero();
  m_(0, 0) = m_(1, 1) = m_(2, 2) = FieldElement(1);
}

ProjMap::ProjMap(Matrix3 m) : m_(normalize_map(std::move(m))) {
  if (det3(m_).is_zero())
    throw std::invalid_argument("projective map must be invertible");
}

ProjPoint ProjMap::apply(const ProjPoint& p) const {
  return ProjPoint(Vector3(m_ * p.coords()));
}

ProjMap ProjMap::compose(const ProjMap& o) const {
  return ProjMap(Matrix3(m_ * o.m_));
}

ProjMap ProjMap::inverse() const { return ProjMap(mat_adjugate(m_)); }

ProjMap ProjMap::power(long n) const {
  if (n < 0) return inverse().power(-n);
  ProjMap r, base = *this;
  while (n > 0) {
    if (n & 1) r = r.compose(base);
    base = base.compose(base);
    n >>= 1;
  }
  return r;
}

bool ProjMap::is_identity() const {
  ProjMap id;
  return *this == id;
}

std::string ProjMap::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < 3; ++j) {
      if (j) os << ",";
      os << m_(i, j);
    }
  }
  os << "]";
  return os.str();
}

bool general_position(const std::array<ProjPoint, 4>& pts) {
  for (int drop = 0; drop < 4; ++drop) {
    Matrix3 m;
    int c = 0;
    for (int i = 0; i < 4; ++i) {
      if (i == drop) continue;
      for (int r = 0; r < 3; ++r) m(r, c) = pts[size_t(i)][r];
      ++c;
    }
    if (det3(m).is_zero()) return false;
  }
  return true;
}

namespace {
// Scales the first three points so their sum is the fourth; the scaled
// columns form the frame matrix sending e1,e2,e3,(1,1,1) to the points.
std::optional<Matrix3> frame_matrix(const std::array<ProjPoint, 4>& pts) {
  Matrix3 base;
  for (int i = 0; i < 3; ++i)
    for (int r = 0; r < 3; ++r) base(r, i) = pts[size_t(i)][r];
  FieldElement d = det3(base);
  if (d.is_zero()) return std::nullopt;
  // solve base * s = p4 by Cramer via the adjugate
  Vector3 s = mat_adjugate(base) * pts[3].coords();
  for (int i = 0; i < 3; ++i) {
    if (s(i).is_zero()) return std::nullopt;  // three of the four collinear
    for (int r = 0; r < 3; ++r) base(r, i) = base(r, i) * s(i);
  }
  return base;
}
}  // namespace

std::optional<ProjMap> fit_proj_map(const std::array<ProjPoint, 4>& src,
                                    const std::array<ProjPoint, 4>& dst) {
  auto s = frame_matrix(src);
  if (!s) throw std::invalid_argument("source points not in general position");
  auto d = frame_matrix(dst);
  if (!d) return std::nullopt;
  return ProjMap(Matrix3(*d * mat_adjugate(*s)));
}

std::optional<long> proj_order(const ProjMap& m, long bound) {
  ProjMap p = m;
  ProjMap id;
  for (long n = 1; n <= bound; ++n) {
    if (p == id) return n;
    p = p.compose(m);
  }
  return std::nullopt;
}

std::vector<int> rref_in_place(MatrixX& m) {
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < m.cols() && row < m.rows(); ++col) {
    int pr = -1;
    for (int r = row; r < m.rows(); ++r)
      if (!m(r, col).is_zero()) {
        pr = r;
        break;
      }
    if (pr < 0) continue;
    if (pr != row) m.row(pr).swap(m.row(row));
    FieldElement inv = m(row, col).inverse();
    for (int c = col; c < m.cols(); ++c) m(row, c) = m(row, c) * inv;
    for (int r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      FieldElement f = m(r, col);
      for (int c = col; c < m.cols(); ++c)
        m(r, c) = m(r, c) - f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank_of(MatrixX m) { return int(rref_in_place(m).size()); }

MatrixX kernel_basis(const MatrixX& m) {
  MatrixX r = m;
  std::vector<int> pivots = rref_in_place(r);
  int n = int(m.cols());
  std::vector<bool> is_pivot(size_t(n), false);
  for (int p : pivots) is_pivot[size_t(p)] = true;
  int free_count = n - int(pivots.size());
  MatrixX kb(n, free_count);
  kb.setZero();
  int k = 0;
  for (int j = 0; j < n; ++j) {
    if (is_pivot[size_t(j)]) continue;
    kb(j, k) = FieldElement(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi)
      kb(pivots[pi], k) = -r(int(pi), j);
    ++k;
  }
  return kb;
}

bool in_row_space(const MatrixX& rr, const std::vector<int>& pivots,
                  const VectorX& v) {
  VectorX w = v;
  for (size_t pi = 0; pi < pivots.size(); ++pi) {
    const FieldElement& c = w(pivots[pi]);
    if (c.is_zero()) continue;
    FieldElement f = c;
    for (int j = 0; j < w.size(); ++j) w(j) = w(j) - f * rr(int(pi), j);
  }
  for (int j = 0; j < w.size(); ++j)
    if (!w(j).is_zero()) return false;
  return true;
}

}  // namespace geotwist
