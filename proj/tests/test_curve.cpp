#include <doctest.h>

#include "geotwist/suites.hpp"

using namespace geotwist;

namespace {
ProjPoint pp(int a, int b, int c) {
  return ProjPoint(FieldElement(a), FieldElement(b), FieldElement(c));
}
}  // namespace

TEST_CASE("curve membership") {
  auto e0 = HesseCurve::make(FieldElement(0), nullptr);
  CHECK(e0->contains(pp(1, -1, 0)));
  CHECK(!e0->contains(pp(1, 1, 1)));

  auto e53 = HesseCurve::make(FieldElement(Rational(5, 3)), nullptr);
  CHECK(e53->contains(pp(1, 1, 2)));
  CHECK_THROWS_AS(e53->point(pp(1, 1, 1)), PointNotOnCurve);
}

TEST_CASE("j-invariant anchors and singularity") {
  CHECK(j_invariant(*HesseCurve::make(FieldElement(0), nullptr)).is_zero());
  TowerPtr t = tower_sqrt3();
  FieldElement r3 = FieldElement::generator(t, 0);
  CHECK(j_invariant(*HesseCurve::make(FieldElement(1) + r3, t)) ==
        FieldElement(1728));
  CHECK_THROWS_AS(HesseCurve::make(FieldElement(1), nullptr), SingularCurve);
  // lambda = -2 also has j = 0 but is not the fixed form
  auto lm2 = HesseCurve::make(FieldElement(-2), tower_omega());
  CHECK(j_invariant(*lm2).is_zero());
  CHECK_THROWS(tau_generator(lm2));
}

TEST_CASE("chord-tangent group law") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  CurvePoint o = e0->zero();

  // identity law
  CurvePoint p = e0->point(pp(1, 0, -1));
  CHECK(group_add(p, o) == p);

  // (1,0,-1) + (0,1,-1) = o, computed by hand via the chord construction
  CurvePoint q = e0->point(pp(0, 1, -1));
  CHECK(group_add(p, q) == o);

  // negation formula (a,b,c) -> (b,a,c), validated against the group law
  CHECK(negate(o) == o);
  CHECK(negate(p) == q);
  for (const auto& s : sample_points(e0, 12)) {
    CurvePoint neg = e0->point(ProjPoint(s[1], s[0], s[2]));
    CHECK(group_add(s, neg) == o);
    CHECK(negate(s) == neg);
  }

  // 2-torsion doubles to o on lambda = 5/3
  auto e53 = HesseCurve::make(FieldElement(Rational(5, 3)), tower_omega());
  CurvePoint two = e53->point(pp(1, 1, 2));
  CHECK(group_add(two, two) == e53->zero());
}

TEST_CASE("scalar multiplication") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  FieldElement w = FieldElement::generator(tower_omega_cbrt2(), 0);
  CurvePoint flex = e0->point(ProjPoint(FieldElement(1), -w, FieldElement(0)));
  CHECK(scalar_mul(0, flex) == e0->zero());
  CHECK(scalar_mul(3, flex) == e0->zero());
  CHECK(scalar_mul(1, flex) == flex);
  CHECK(scalar_mul(-1, flex) == negate(flex));

  auto e53 = HesseCurve::make(FieldElement(Rational(5, 3)), tower_omega());
  FieldElement w2 = FieldElement::generator(tower_omega(), 0);
  CurvePoint p = group_add(e53->point(pp(1, 1, 2)),
                           e53->point(ProjPoint(FieldElement(1), -w2, FieldElement(0))));
  CHECK(scalar_mul(6, p) == e53->zero());
  CHECK(scalar_mul(2, p) != e53->zero());
  CHECK(scalar_mul(3, p) != e53->zero());
}

TEST_CASE("torsion sets") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());

  auto t1 = torsion_points(e0, 1);
  CHECK(t1.points.size() == 1);
  CHECK(t1.points[0] == e0->zero());

  // E[3]: nine flexes; oracle: each lies on the curve and on its Hessian
  auto t3 = torsion_points(e0, 3);
  CHECK(t3.points.size() == 9);
  {
    // Hessian of x^3+y^3+z^3 is proportional to xyz
    for (const auto& p : t3.points) {
      CHECK((p[0] * p[1] * p[2]).is_zero());
      CHECK(scalar_mul(3, p) == e0->zero());
    }
    // pairwise distinct
    for (size_t i = 0; i < 9; ++i)
      for (size_t j = i + 1; j < 9; ++j) CHECK(t3.points[i] != t3.points[j]);
  }

  // E[2] = {o} u {(1,1,c) : c^3 = -2}; compare against the direct roots
  auto t2 = torsion_points(e0, 2);
  CHECK(t2.points.size() == 4);
  FieldElement w = FieldElement::generator(tower_omega_cbrt2(), 0);
  FieldElement c2 = FieldElement::generator(tower_omega_cbrt2(), 1);
  for (int k = 0; k < 3; ++k) {
    CurvePoint want =
        e0->point(ProjPoint(FieldElement(1), FieldElement(1), -c2 * w.pow(k)));
    bool found = false;
    for (const auto& p : t2.points) found = found || p == want;
    CHECK(found);
  }

  // E[6] assembled from E[2] + E[3]
  auto t6 = torsion_points(e0, 6);
  CHECK(t6.points.size() == 36);

  // torsion containment: E[n] subset E[m] when n | m
  for (const auto& p : t2.points) {
    bool found = false;
    for (const auto& q : t6.points) found = found || p == q;
    CHECK(found);
  }

  // over Q(w) alone the 2-torsion coordinates are missing
  auto small = HesseCurve::make(FieldElement(0), tower_omega());
  CHECK_THROWS_AS(torsion_points(small, 2), TowerTooSmall);
}

TEST_CASE("tau generator per j-class") {
  // generic j: the swap, order 2
  auto e53 = HesseCurve::make(FieldElement(Rational(5, 3)), tower_omega());
  ProjMap tau = tau_generator(e53);
  CHECK(proj_order(tau, 12) == 2);
  CHECK(tau.apply(e53->zero().point()) == e53->zero().point());

  // j = 0: order 6
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  ProjMap tau0 = tau_generator(e0);
  CHECK(proj_order(tau0, 12) == 6);
  CHECK(tau_order(e0) == 6);

  // j = 1728: order 4, with tau^2 acting as negation
  TowerPtr t = tower_sqrt3_omega();
  FieldElement r3 = FieldElement::generator(t, 0);
  auto e12 = HesseCurve::make(FieldElement(1) + r3, t);
  ProjMap tau12 = tau_generator(e12);
  CHECK(proj_order(tau12, 12) == 4);
  for (const auto& p : sample_points(e12, 6)) {
    CHECK(e12->point(tau12.power(2).apply(p.point())) == negate(p));
    for (const auto& q : sample_points(e12, 6)) {
      CurvePoint tp = e12->point(tau12.apply(p.point()));
      CurvePoint tq = e12->point(tau12.apply(q.point()));
      CHECK(e12->point(tau12.apply(group_add(p, q).point())) ==
            group_add(tp, tq));
    }
  }

  // tau is a group automorphism on samples
  for (const auto& p : sample_points(e0, 8)) {
    for (const auto& q : sample_points(e0, 8)) {
      CurvePoint tp = e0->point(tau0.apply(p.point()));
      CurvePoint tq = e0->point(tau0.apply(q.point()));
      CHECK(e0->point(tau0.apply(group_add(p, q).point())) == group_add(tp, tq));
    }
  }

  // negation is tau^3 on lambda = 0 and tau on generic curves
  ProjMap tau3 = tau0.power(3);
  for (const auto& p : sample_points(e0, 10))
    CHECK(e0->point(tau3.apply(p.point())) == negate(p));
  for (const auto& p : sample_points(e53, 8))
    CHECK(e53->point(tau.apply(p.point())) == negate(p));
}

TEST_CASE("elliptic automorphisms") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  CurvePoint o = e0->zero();
  CurvePoint p = e0->point(pp(1, 0, -1));

  EllipticAut idaut{o, 0};
  CHECK(idaut.apply(p) == p);
  EllipticAut trans{p, 0};
  CHECK(trans.apply(o) == p);

  // power 3 acts as (a,b,c) -> (b,a,c) on lambda = 0
  EllipticAut even{o, 3};
  for (const auto& s : sample_points(e0, 8))
    CHECK(even.apply(s) == e0->point(ProjPoint(s[1], s[0], s[2])));

  // composition law
  EllipticAut a{p, 1}, b{e0->point(pp(0, 1, -1)), 2};
  EllipticAut ab = a.after(b);
  for (const auto& s : sample_points(e0, 6))
    CHECK(ab.apply(s) == a.apply(b.apply(s)));
}

TEST_CASE("translation matrices realize 3-torsion translations") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  for (const auto& q : torsion_points(e0, 3).points) {
    ProjMap m = translation_matrix(q);
    for (const auto& s : sample_points(e0, 6))
      CHECK(e0->point(m.apply(s.point())) == group_add(q, s));
  }
  // works on every member of the pencil
  auto e53 = HesseCurve::make(FieldElement(Rational(5, 3)), tower_omega());
  for (const auto& q : torsion_points(e53, 3).points) {
    ProjMap m = translation_matrix(q);
    for (const auto& s : sample_points(e53, 6))
      CHECK(e53->point(m.apply(s.point())) == group_add(q, s));
  }
}

TEST_CASE("linear_to_aut decomposition") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  ProjMap tau = tau_generator(e0);
  auto flexes = torsion_points(e0, 3).points;
  ProjMap m = translation_matrix(flexes[3]).compose(tau.power(2));
  auto dec = linear_to_aut(m, e0);
  REQUIRE(dec);
  CHECK(dec->power == 2);
  CHECK(dec->translate == flexes[3]);
  // a non-preserving map fails
  Matrix3 bad;
  bad.setZero();
  bad(0, 0) = FieldElement(1);
  bad(0, 1) = FieldElement(1);
  bad(1, 1) = FieldElement(1);
  bad(2, 2) = FieldElement(1);
  CHECK(!linear_to_aut(ProjMap(bad), e0).has_value());
}

TEST_CASE("exceptional set") {
  auto e0 = HesseCurve::make(FieldElement(0), tower_omega_cbrt2());
  FieldElement w = FieldElement::generator(tower_omega_cbrt2(), 0);
  FieldElement c2 = FieldElement::generator(tower_omega_cbrt2(), 1);
  CHECK(!in_exceptional(e0->zero()));
  CHECK(!in_exceptional(e0->point(ProjPoint(FieldElement(1), -w, FieldElement(0)))));
  CHECK(!in_exceptional(
      e0->point(ProjPoint(FieldElement(1), FieldElement(1), -c2))));
  auto e53 = HesseCurve::make(FieldElement(Rational(5, 3)), nullptr);
  CHECK_THROWS(in_exceptional(e53->point(pp(1, 1, 2))));
}

TEST_CASE("group axioms on chord-generated samples") {
  for (auto lambda : {FieldElement(0), FieldElement(Rational(5, 3))}) {
    TowerPtr t = lambda.is_zero() ? tower_omega_cbrt2() : tower_omega_sqrt2();
    auto curve = HesseCurve::make(lambda, t);
    auto pts = sample_points(curve, 20);
    REQUIRE(pts.size() >= 20);
    CurvePoint o = curve->zero();
    for (size_t i = 0; i < 8; ++i)
      for (size_t j = i; j < 8; ++j) {
        CurvePoint s = group_add(pts[i], pts[j]);
        CHECK(curve->contains(s.point()));
        CHECK(s == group_add(pts[j], pts[i]));
      }
    for (size_t i = 0; i < 6; ++i)
      for (size_t j = 2; j < 8; j += 2)
        CHECK(group_add(group_add(pts[i], pts[j]), pts[j + 1]) ==
              group_add(pts[i], group_add(pts[j], pts[j + 1])));
    for (const auto& p : pts) {
      CHECK(group_add(p, o) == p);
      CHECK(group_add(p, negate(p)) == o);
    }
  }
}
