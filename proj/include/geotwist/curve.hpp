// Hesse-form plane cubics x^3 + y^3 + z^3 - 3*lambda*xyz with the exact
// chord-tangent group law based at the flex o = (1,-1,0).

#pragma once

#include <optional>
#include <vector>

#include "geotwist/poly.hpp"

namespace geotwist {

struct SingularCurve : std::domain_error {
  SingularCurve() : std::domain_error("lambda^3 = 1: the Hesse cubic is singular") {}
};
struct PointNotOnCurve : std::domain_error {
  explicit PointNotOnCurve(const std::string& p)
      : std::domain_error("point not on the curve: " + p) {}
};
struct CurveMismatch : std::domain_error {
  CurveMismatch() : std::domain_error("points belong to different curves") {}
};
// The declared tower is missing coordinates needed for a torsion set.
struct TowerTooSmall : std::domain_error {
  explicit TowerTooSmall(const std::string& missing)
      : std::domain_error("tower too small; missing roots of: " + missing),
        missing_poly(missing) {}
  std::string missing_poly;
};

class HesseCurve;
using CurvePtr = std::shared_ptr<const HesseCurve>;

class CurvePoint {
 public:
  CurvePoint() = default;
  CurvePoint(CurvePtr curve, ProjPoint p);

  const ProjPoint& point() const { return p_; }
  const CurvePtr& curve() const { return curve_; }
  const FieldElement& operator[](int i) const { return p_[i]; }
  bool operator==(const CurvePoint& o) const { return p_ == o.p_; }
  bool operator!=(const CurvePoint& o) const { return p_ != o.p_; }
  std::string str() const { return p_.str(); }

 private:
  CurvePtr curve_;
  ProjPoint p_;
};

class HesseCurve : public std::enable_shared_from_this<HesseCurve> {
 public:
  // Throws SingularCurve when lambda^3 = 1.
  static CurvePtr make(FieldElement lambda, TowerPtr tower);

  const FieldElement& lambda() const { return lambda_; }
  const TowerPtr& tower() const { return tower_; }
  // x^3 + y^3 + z^3 - 3*lambda*x*y*z
  const Poly3& form() const { return form_; }

  bool contains(const ProjPoint& p) const;
  CurvePoint point(ProjPoint p) const;  // validates membership
  CurvePoint zero() const;              // o = (1,-1,0)

  bool same(const HesseCurve& o) const;

 private:
  FieldElement lambda_;
  TowerPtr tower_;
  Poly3 form_;
};

// j = 27 lambda^3 (lambda^3+8)^3 / (lambda^3-1)^3, exact.
FieldElement j_invariant(const HesseCurve& curve);

// Chord-tangent group law with identity o = (1,-1,0).
CurvePoint group_add(const CurvePoint& p, const CurvePoint& q);
CurvePoint negate(const CurvePoint& p);
CurvePoint scalar_mul(long n, const CurvePoint& p);
// Third intersection of the line through p and q (tangent when p = q).
CurvePoint third_intersection(const CurvePoint& p, const CurvePoint& q);

struct TorsionSet {
  long n = 1;
  std::vector<CurvePoint> points;
};

// Complete n-torsion over the curve's tower for n in {1,2,3,6}; throws
// TowerTooSmall (naming the missing polynomial) when coordinates are absent.
TorsionSet torsion_points(const CurvePtr& curve, long n);

// The canonical generator of Aut(E, o) per j-class; for j in {0, 1728} the
// curve must be in the fixed form (lambda = 0 resp. lambda = 1 + sqrt(3)).
ProjMap tau_generator(const CurvePtr& curve);
long tau_order(const CurvePtr& curve);  // 2, 6 or 4

// sigma_p composed with tau^i: every automorphism of E has this shape.
struct EllipticAut {
  CurvePoint translate;  // the point p of sigma_p
  long power = 0;        // exponent of tau, reduced mod tau_order

  CurvePoint apply(const CurvePoint& q) const;
  EllipticAut after(const EllipticAut& o) const;  // this ∘ o
};

// True iff a^9 = b^9 = c^9 and p is not 6-torsion; only defined on lambda=0.
bool in_exceptional(const CurvePoint& p);

// Deterministic chord-closure sampler: seeds default to the flexes and any
// 2-torsion available in the tower; extra seeds extend the reach.
std::vector<CurvePoint> sample_points(const CurvePtr& curve, int count,
                                      const std::vector<CurvePoint>& extra_seeds = {});

// The nine inflection points (base points of the Hesse pencil); requires a
// primitive cube root of unity in the tower.
std::vector<CurvePoint> flex_points(const CurvePtr& curve);

// Translation by a 3-torsion point is linear; returns its matrix.
ProjMap translation_matrix(const CurvePoint& q);

// Writes a linear automorphism of E as sigma_q tau^i (q = m(o) must be
// 3-torsion); nullopt when m does not normalize to that shape.
std::optional<EllipticAut> linear_to_aut(const ProjMap& m, const CurvePtr& curve);

// The matrix of an elliptic automorphism when it is linear, i.e. when the
// translation point is 3-torsion.
std::optional<ProjMap> aut_to_linear(const EllipticAut& a);

}  // namespace geotwist
