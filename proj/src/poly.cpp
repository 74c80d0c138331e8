#include "geotwist/poly.hpp"

#include <sstream>

namespace geotwist {

Poly3 Poly3::variable(int i, FieldElement coeff) {
  Exp e{0, 0, 0};
  e[size_t(i)] = 1;
  return monomial(e, std::move(coeff));
}

Poly3 Poly3::monomial(Exp e, FieldElement coeff) {
  Poly3 p;
  p.add_term(e, std::move(coeff));
  return p;
}

void Poly3::add_term(Exp e, FieldElement c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, std::move(c));
  } else {
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int Poly3::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2]);
  return d;
}

Poly3 Poly3::operator-() const {
  Poly3 r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly3 operator+(const Poly3& a, const Poly3& b) {
  Poly3 r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

Poly3 operator-(const Poly3& a, const Poly3& b) {
  Poly3 r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
  return r;
}

Poly3 operator*(const Poly3& a, const Poly3& b) {
  Poly3 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_)
      r.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
  return r;
}

Poly3 Poly3::operator*(const FieldElement& c) const {
  Poly3 r;
  if (c.is_zero()) return r;
  for (const auto& [e, cc] : terms_) r.add_term(e, cc * c);
  return r;
}

FieldElement Poly3::eval(const FieldElement& x, const FieldElement& y,
                         const FieldElement& z) const {
  FieldElement r(0);
  for (const auto& [e, c] : terms_) {
    FieldElement t = c;
    for (int i = 0; i < e[0]; ++i) t = t * x;
    for (int i = 0; i < e[1]; ++i) t = t * y;
    for (int i = 0; i < e[2]; ++i) t = t * z;
    r = r + t;
  }
  return r;
}

Poly3 Poly3::substitute(const std::array<Poly3, 3>& sub) const {
  Poly3 r;
  for (const auto& [e, c] : terms_) {
    Poly3 t(c);
    for (int v = 0; v < 3; ++v)
      for (int i = 0; i < e[size_t(v)]; ++i) t = t * sub[size_t(v)];
    r = r + t;
  }
  return r;
}

Poly3 Poly3::derivative(int i) const {
  Poly3 r;
  for (const auto& [e, c] : terms_) {
    if (e[size_t(i)] == 0) continue;
    Exp d = e;
    --d[size_t(i)];
    r.add_term(d, c * FieldElement(e[size_t(i)]));
  }
  return r;
}

FieldElement Poly3::leading_coeff() const {
  if (terms_.empty()) return FieldElement(0);
  return terms_.begin()->second;
}

std::string Poly3::str(const std::array<std::string, 3>& vars) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c << ")";
    for (int v = 0; v < 3; ++v) {
      if (e[size_t(v)] == 0) continue;
      os << "*" << vars[size_t(v)];
      if (e[size_t(v)] > 1) os << "^" << e[size_t(v)];
    }
  }
  return os.str();
}

bool proportional(const Poly3& p, const Poly3& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p * q.leading_coeff() == q * p.leading_coeff();
}

bool triples_proportional(const std::array<Poly3, 3>& a,
                          const std::array<Poly3, 3>& b) {
  bool a_zero = a[0].is_zero() && a[1].is_zero() && a[2].is_zero();
  bool b_zero = b[0].is_zero() && b[1].is_zero() && b[2].is_zero();
  if (a_zero || b_zero) return false;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[size_t(i)] * b[size_t(j)] == a[size_t(j)] * b[size_t(i)]))
        return false;
  return true;
}

std::array<Poly3, 3> apply_matrix(const Matrix3& m,
                                  const std::array<Poly3, 3>& v) {
  std::array<Poly3, 3> r;
  for (int i = 0; i < 3; ++i) {
    Poly3 acc;
    for (int j = 0; j < 3; ++j) acc = acc + v[size_t(j)] * m(i, j);
    r[size_t(i)] = acc;
  }
  return r;
}

std::array<Poly3, 3> compose_triple(const std::array<Poly3, 3>& f,
                                    const std::array<Poly3, 3>& g) {
  return {f[0].substitute(g), f[1].substitute(g), f[2].substitute(g)};
}

ProjPoint eval_triple(const std::array<Poly3, 3>& f, const ProjPoint& p) {
  Vector3 v;
  v << f[0].eval(p.coords()), f[1].eval(p.coords()), f[2].eval(p.coords());
  return ProjPoint(std::move(v));
}

}  // namespace geotwist
