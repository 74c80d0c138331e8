#include "geotwist/curve.hpp"

#include <algorithm>

namespace geotwist {

CurvePoint::CurvePoint(CurvePtr curve, ProjPoint p)
    : curve_(std::move(curve)), p_(std::move(p)) {
  if (!curve_->contains(p_)) throw PointNotOnCurve(p_.str());
}

CurvePtr HesseCurve::make(FieldElement lambda, TowerPtr tower) {
  auto c = std::make_shared<HesseCurve>();
  c->lambda_ = lambda.promoted_to(tower ? tower : c->lambda_.tower());
  c->tower_ = tower;
  FieldElement l3 = lambda.pow(3);
  if (l3.is_one()) throw SingularCurve();
  Poly3 f = Poly3::monomial({3, 0, 0}, FieldElement(1)) +
            Poly3::monomial({0, 3, 0}, FieldElement(1)) +
            Poly3::monomial({0, 0, 3}, FieldElement(1)) +
            Poly3::monomial({1, 1, 1}, FieldElement(-3) * lambda);
  c->form_ = std::move(f);
  return c;
}

bool HesseCurve::contains(const ProjPoint& p) const {
  return form_.eval(p.coords()).is_zero();
}

CurvePoint HesseCurve::point(ProjPoint p) const {
  return CurvePoint(shared_from_this(), std::move(p));
}

CurvePoint HesseCurve::zero() const {
  return point(ProjPoint(FieldElement(1), FieldElement(-1), FieldElement(0)));
}

bool HesseCurve::same(const HesseCurve& o) const {
  if (this == &o) return true;
  return lambda_ == o.lambda_;
}

FieldElement j_invariant(const HesseCurve& curve) {
  FieldElement l3 = curve.lambda().pow(3);
  if (l3.is_one()) throw SingularCurve();
  FieldElement num = FieldElement(27) * l3 * (l3 + FieldElement(8)).pow(3);
  return num / (l3 - FieldElement(1)).pow(3);
}

namespace {

void require_same_curve(const CurvePoint& p, const CurvePoint& q) {
  if (!p.curve()->same(*q.curve())) throw CurveMismatch();
}

// Coefficients of F(s*p + t*q) as a binary cubic c3 s^3 + c2 s^2 t + c1 s t^2 + c0 t^3.
std::array<FieldElement, 4> line_restriction(const Poly3& form,
                                             const Vector3& p,
                                             const Vector3& q) {
  // Substitute x_i = s*p_i + t*q_i symbolically with s,t as variables 0,1.
  std::array<Poly3, 3> sub;
  for (int i = 0; i < 3; ++i) {
    sub[size_t(i)] = Poly3::variable(0, p(i)) + Poly3::variable(1, q(i));
  }
  Poly3 r = form.substitute(sub);
  std::array<FieldElement, 4> c{FieldElement(0), FieldElement(0),
                                FieldElement(0), FieldElement(0)};
  for (const auto& [e, coeff] : r.terms()) c[size_t(e[0])] = coeff;  // s-degree
  return c;
}

Vector3 combine(const Vector3& p, const Vector3& q, const FieldElement& s,
                const FieldElement& t) {
  Vector3 r;
  for (int i = 0; i < 3; ++i) r(i) = s * p(i) + t * q(i);
  return r;
}

}  // namespace

CurvePoint third_intersection(const CurvePoint& p, const CurvePoint& q) {
  require_same_curve(p, q);
  const auto& curve = *p.curve();
  const Vector3& pv = p.point().coords();

  if (p == q) {
    // Tangent line: gradient at p, with a second point u on it.
    Vector3 grad;
    for (int i = 0; i < 3; ++i) grad(i) = curve.form().derivative(i).eval(pv);
    // pick u independent of p with grad . u = 0
    Vector3 u;
    u.setZero();
    bool found = false;
    for (int i = 0; i < 3 && !found; ++i)
      for (int j = i + 1; j < 3 && !found; ++j) {
        Vector3 cand;
        cand.setZero();
        cand(i) = grad(j);
        cand(j) = -grad(i);
        if (cand(i).is_zero() && cand(j).is_zero()) continue;
        // independence from p: some 2x2 minor of [p cand] nonzero
        bool indep = false;
        for (int a = 0; a < 3 && !indep; ++a)
          for (int b = a + 1; b < 3 && !indep; ++b)
            if (!(pv(a) * cand(b) - pv(b) * cand(a)).is_zero()) indep = true;
        if (indep) {
          u = cand;
          found = true;
        }
      }
    if (!found) throw std::logic_error("degenerate tangent line");
    auto c = line_restriction(curve.form(), pv, u);
    // p on the curve and the line tangent there: c3 = c2 = 0.
    if (!c[3].is_zero() || !c[2].is_zero())
      throw std::logic_error("tangent restriction not doubly vanishing");
    if (c[1].is_zero()) return p;  // flex: triple contact
    return p.curve()->point(ProjPoint(combine(pv, u, -c[0], c[1])));
  }

  const Vector3& qv = q.point().coords();
  auto c = line_restriction(curve.form(), pv, qv);
  if (!c[3].is_zero() || !c[0].is_zero())
    throw std::logic_error("chord restriction must vanish at both endpoints");
  // F = s*t*(c2*s + c1*t); third root at (s:t) = (-c1 : c2).
  if (c[1].is_zero() && c[2].is_zero())
    throw std::logic_error("line contained in a smooth cubic");
  if (c[2].is_zero()) return p;  // tangent at p
  if (c[1].is_zero()) return q;  // tangent at q
  return p.curve()->point(ProjPoint(combine(pv, qv, -c[1], c[2])));
}

CurvePoint group_add(const CurvePoint& p, const CurvePoint& q) {
  require_same_curve(p, q);
  CurvePoint r = third_intersection(p, q);
  return third_intersection(p.curve()->zero(), r);
}

CurvePoint negate(const CurvePoint& p) {
  // o is a flex, so -p is the third intersection of the chord through o.
  return third_intersection(p, p.curve()->zero());
}

CurvePoint scalar_mul(long n, const CurvePoint& p) {
  if (n < 0) return negate(scalar_mul(-n, p));
  CurvePoint acc = p.curve()->zero();
  CurvePoint base = p;
  while (n > 0) {
    if (n & 1) acc = group_add(acc, base);
    if (n >>= 1) base = group_add(base, base);
  }
  return acc;
}

// ---- torsion ---------------------------------------------------------------

namespace {

// A primitive cube root of unity in the tower, via the pattern root search.
std::optional<FieldElement> find_omega(const TowerPtr& tower) {
  UPoly f{FieldElement(1), FieldElement(1), FieldElement(1)};  // 1 + x + x^2
  auto rr = roots_in_tower(f, tower);
  if (rr.roots.empty()) return std::nullopt;
  return rr.roots.front();
}

}  // namespace

std::vector<CurvePoint> flex_points(const CurvePtr& curve) {
  auto omega = find_omega(curve->tower());
  if (!omega) throw TowerTooSmall("x^2 + x + 1");
  std::vector<CurvePoint> out;
  FieldElement w = *omega;
  for (int k = 0; k < 3; ++k) {
    FieldElement wk = w.pow(k);
    out.push_back(curve->point(ProjPoint(FieldElement(0), FieldElement(1), -wk)));
    out.push_back(curve->point(ProjPoint(FieldElement(1), FieldElement(0), -wk)));
    out.push_back(curve->point(ProjPoint(FieldElement(1), -wk, FieldElement(0))));
  }
  return out;
}

TorsionSet torsion_points(const CurvePtr& curve, long n) {
  TorsionSet ts;
  ts.n = n;
  if (n == 1) {
    ts.points.push_back(curve->zero());
    return ts;
  }
  if (n == 2) {
    // p = -p forces (a,b,c) = (1,1,c) with c^3 - 3*lambda*c + 2 = 0, plus o.
    ts.points.push_back(curve->zero());
    UPoly f{FieldElement(2), FieldElement(-3) * curve->lambda(),
            FieldElement(0), FieldElement(1)};
    auto rr = roots_in_tower(f, curve->tower());
    if (!rr.complete()) {
      std::string desc;
      for (int i = upoly_deg(rr.residual); i >= 0; --i) {
        desc += "(" + rr.residual[size_t(i)].str() + ")*c^" + std::to_string(i);
        if (i) desc += " + ";
      }
      throw TowerTooSmall(desc);
    }
    for (const auto& c : rr.roots)
      ts.points.push_back(
          curve->point(ProjPoint(FieldElement(1), FieldElement(1), c)));
    if (ts.points.size() != 4) throw std::logic_error("E[2] must have 4 points");
  } else if (n == 3) {
    ts.points = flex_points(curve);
    if (ts.points.size() != 9) throw std::logic_error("E[3] must have 9 points");
  } else if (n == 6) {
    TorsionSet t2 = torsion_points(curve, 2);
    TorsionSet t3 = torsion_points(curve, 3);
    for (const auto& a : t2.points)
      for (const auto& b : t3.points) ts.points.push_back(group_add(a, b));
  } else {
    throw std::invalid_argument("torsion supported for n in {1,2,3,6}");
  }
  for (const auto& p : ts.points)
    if (scalar_mul(n, p) != curve->zero())
      throw std::logic_error("torsion certification failed");
  return ts;
}

// ---- Aut(E, o) generator ---------------------------------------------------

namespace {
Matrix3 from_rows(std::initializer_list<FieldElement> v) {
  Matrix3 m;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  return m;
}

// Checks that the matrix preserves the curve (the form pulls back to a
// scalar multiple of itself) and fixes o.
void check_curve_aut(const ProjMap& m, const HesseCurve& curve) {
  std::array<Poly3, 3> lin;
  for (int i = 0; i < 3; ++i) {
    lin[size_t(i)] = Poly3::variable(0, m.matrix()(i, 0)) +
                     Poly3::variable(1, m.matrix()(i, 1)) +
                     Poly3::variable(2, m.matrix()(i, 2));
  }
  Poly3 pulled = curve.form().substitute(lin);
  if (!proportional(pulled, curve.form()))
    throw std::logic_error("map does not preserve the curve");
  ProjPoint o(FieldElement(1), FieldElement(-1), FieldElement(0));
  if (!(m.apply(o) == o)) throw std::logic_error("map does not fix o");
}
}  // namespace

ProjMap tau_generator(const CurvePtr& curve) {
  FieldElement j = j_invariant(*curve);
  const FieldElement zero(0), one(1);
  ProjMap tau;
  if (j.is_zero()) {
    if (!curve->lambda().is_zero())
      throw std::domain_error(
          "j = 0 requires the fixed form lambda = 0 for the canonical generator");
    auto omega = find_omega(curve->tower());
    if (!omega) throw TowerTooSmall("x^2 + x + 1");
    tau = ProjMap(from_rows({zero, one, zero, one, zero, zero, zero, zero, *omega}));
  } else if (j == FieldElement(1728)) {
    FieldElement lm1 = curve->lambda() - one;
    if (!(lm1 * lm1 == FieldElement(3)))
      throw std::domain_error(
          "j = 1728 requires the fixed form lambda = 1 + sqrt(3)");
    auto omega = find_omega(curve->tower());
    if (!omega) throw TowerTooSmall("x^2 + x + 1");
    FieldElement w = *omega, w2 = w * w;
    tau = ProjMap(from_rows({w2, w, one, w, w2, one, one, one, one}));
  } else {
    tau = ProjMap(from_rows({zero, one, zero, one, zero, zero, zero, zero, one}));
  }
  check_curve_aut(tau, *curve);
  return tau;
}

long tau_order(const CurvePtr& curve) {
  FieldElement j = j_invariant(*curve);
  if (j.is_zero()) return 6;
  if (j == FieldElement(1728)) return 4;
  return 2;
}

CurvePoint EllipticAut::apply(const CurvePoint& q) const {
  require_same_curve(translate, q);
  CurvePoint r = q;
  if (power != 0) {
    ProjMap tau = tau_generator(q.curve()).power(power);
    r = q.curve()->point(tau.apply(q.point()));
  }
  return group_add(translate, r);
}

EllipticAut EllipticAut::after(const EllipticAut& o) const {
  // (sigma_p tau^i) (sigma_q tau^j) = sigma_{p + tau^i(q)} tau^{i+j}
  const CurvePtr& curve = translate.curve();
  long ord = tau_order(curve);
  CurvePoint tq = o.translate;
  if (power != 0) {
    ProjMap tau = tau_generator(curve).power(power);
    tq = curve->point(tau.apply(tq.point()));
  }
  return EllipticAut{group_add(translate, tq), ((power + o.power) % ord + ord) % ord};
}

bool in_exceptional(const CurvePoint& p) {
  if (!p.curve()->lambda().is_zero())
    throw std::domain_error("the exceptional set is defined on lambda = 0 only");
  FieldElement a9 = p[0].pow(9), b9 = p[1].pow(9), c9 = p[2].pow(9);
  if (!(a9 == b9 && b9 == c9)) return false;
  return scalar_mul(6, p) != p.curve()->zero();
}

std::vector<CurvePoint> sample_points(const CurvePtr& curve, int count,
                                      const std::vector<CurvePoint>& extra_seeds) {
  std::vector<CurvePoint> pts;
  auto push_unique = [&](const CurvePoint& p) {
    for (const auto& q : pts)
      if (q == p) return;
    pts.push_back(p);
  };
  push_unique(curve->zero());
  try {
    for (const auto& f : flex_points(curve)) push_unique(f);
  } catch (const TowerTooSmall&) {
    // rational flexes only
    push_unique(curve->point(ProjPoint(FieldElement(1), FieldElement(-1), FieldElement(0))));
    push_unique(curve->point(ProjPoint(FieldElement(1), FieldElement(0), FieldElement(-1))));
    push_unique(curve->point(ProjPoint(FieldElement(0), FieldElement(1), FieldElement(-1))));
  }
  {
    // whatever 2-torsion the tower can express; completeness not needed here
    UPoly f{FieldElement(2), FieldElement(-3) * curve->lambda(),
            FieldElement(0), FieldElement(1)};
    for (const auto& c : roots_in_tower(f, curve->tower()).roots)
      push_unique(curve->point(ProjPoint(FieldElement(1), FieldElement(1), c)));
  }
  for (const auto& s : extra_seeds) push_unique(s);

  // chord closure, breadth-first over pairs
  for (size_t i = 0; i < pts.size() && int(pts.size()) < count; ++i) {
    for (size_t j = i; j < pts.size() && int(pts.size()) < count; ++j) {
      push_unique(group_add(pts[i], pts[j]));
    }
  }
  if (int(pts.size()) > count) pts.resize(size_t(count));
  return pts;
}

// ---- translations by 3-torsion ----------------------------------------------

namespace {
// The nine matrices cyc^a diag(1,w,w^2)^b act as the translations T[3] on
// every member of the Hesse pencil.
std::vector<ProjMap> heisenberg(const FieldElement& w) {
  const FieldElement zero(0), one(1);
  Matrix3 cyc = from_rows({zero, one, zero, zero, zero, one, one, zero, zero});
  Matrix3 dia = from_rows({one, zero, zero, zero, w, zero, zero, zero, w * w});
  std::vector<ProjMap> out;
  ProjMap ca;
  for (int a = 0; a < 3; ++a) {
    ProjMap m = ca;
    for (int b = 0; b < 3; ++b) {
      out.push_back(m);
      m = m.compose(ProjMap(dia));
    }
    ca = ca.compose(ProjMap(cyc));
  }
  return out;
}
}  // namespace

ProjMap translation_matrix(const CurvePoint& q) {
  const CurvePtr& curve = q.curve();
  if (scalar_mul(3, q) != curve->zero())
    throw std::domain_error("translation_matrix needs a 3-torsion point");
  auto omega = find_omega(curve->tower());
  if (!omega) throw TowerTooSmall("x^2 + x + 1");
  for (const auto& m : heisenberg(*omega)) {
    if (m.apply(curve->zero().point()) == q.point()) {
      // certify on a couple of independent points
      ProjPoint p1(FieldElement(1), FieldElement(0), FieldElement(-1));
      if (curve->point(m.apply(p1)) ==
          group_add(q, curve->point(p1)))
        return m;
    }
  }
  throw std::logic_error("no Heisenberg matrix realizes the translation");
}

std::optional<EllipticAut> linear_to_aut(const ProjMap& m, const CurvePtr& curve) {
  ProjPoint oim = m.apply(curve->zero().point());
  if (!curve->contains(oim)) return std::nullopt;
  CurvePoint q = curve->point(oim);
  if (scalar_mul(3, q) != curve->zero()) return std::nullopt;
  ProjMap rest = translation_matrix(q).inverse().compose(m);  // fixes o
  ProjMap tau = tau_generator(curve);
  long ord = tau_order(curve);
  ProjMap acc;
  for (long i = 0; i < ord; ++i) {
    if (rest == acc) return EllipticAut{q, i};
    acc = acc.compose(tau);
  }
  return std::nullopt;
}

std::optional<ProjMap> aut_to_linear(const EllipticAut& a) {
  const CurvePtr& curve = a.translate.curve();
  if (scalar_mul(3, a.translate) != curve->zero()) return std::nullopt;
  ProjMap t = translation_matrix(a.translate);
  if (a.power == 0) return t;
  return t.compose(tau_generator(curve).power(a.power));
}

}  // namespace geotwist
