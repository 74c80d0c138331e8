// Sparse polynomials in three variables over a field tower.  The variable
// names are contextual: ambient coordinates (x,y,z) or parameters (s,t,u).

#pragma once

#include <array>
#include <map>
#include <string>

#include "geotwist/linalg.hpp"

namespace geotwist {

class Poly3 {
 public:
  using Exp = std::array<int, 3>;

  Poly3() = default;
  explicit Poly3(FieldElement c) { add_term({0, 0, 0}, std::move(c)); }

  static Poly3 variable(int i, FieldElement coeff = FieldElement(1));
  static Poly3 monomial(Exp e, FieldElement coeff);

  void add_term(Exp e, FieldElement c);
  bool is_zero() const { return terms_.empty(); }
  int total_degree() const;  // -1 for zero
  const std::map<Exp, FieldElement>& terms() const { return terms_; }

  Poly3 operator-() const;
  friend Poly3 operator+(const Poly3& a, const Poly3& b);
  friend Poly3 operator-(const Poly3& a, const Poly3& b);
  friend Poly3 operator*(const Poly3& a, const Poly3& b);
  Poly3 operator*(const FieldElement& c) const;
  bool operator==(const Poly3& o) const { return terms_ == o.terms_; }
  bool operator!=(const Poly3& o) const { return !(*this == o); }

  FieldElement eval(const FieldElement& x, const FieldElement& y,
                    const FieldElement& z) const;
  FieldElement eval(const Vector3& v) const { return eval(v(0), v(1), v(2)); }

  // Substitutes polynomials for the three variables.
  Poly3 substitute(const std::array<Poly3, 3>& sub) const;

  // Partial derivative in variable i.
  Poly3 derivative(int i) const;

  // First nonzero coefficient in the fixed monomial order.
  FieldElement leading_coeff() const;

  std::string str(const std::array<std::string, 3>& vars = {"x", "y",
                                                            "z"}) const;

 private:
  // Graded-lex-ish deterministic order via std::array's lexicographic <.
  std::map<Exp, FieldElement> terms_;
};

inline Poly3 operator*(const FieldElement& c, const Poly3& p) { return p * c; }

// Are p and q projectively proportional as polynomials (p*lc(q) == q*lc(p))?
bool proportional(const Poly3& p, const Poly3& q);

// Are two polynomial triples projectively equal as maps, i.e. all cross
// products a_i b_j - a_j b_i identically zero (and neither triple zero)?
bool triples_proportional(const std::array<Poly3, 3>& a,
                          const std::array<Poly3, 3>& b);

// Applies a linear map to a polynomial triple (matrix times vector of polys).
std::array<Poly3, 3> apply_matrix(const Matrix3& m,
                                  const std::array<Poly3, 3>& v);

// Composes triple f after triple g: f(g0,g1,g2).
std::array<Poly3, 3> compose_triple(const std::array<Poly3, 3>& f,
                                    const std::array<Poly3, 3>& g);

// Evaluates a polynomial triple at a point; throws if the result is zero
// (the map is undetermined there).
ProjPoint eval_triple(const std::array<Poly3, 3>& f, const ProjPoint& p);

}  // namespace geotwist
