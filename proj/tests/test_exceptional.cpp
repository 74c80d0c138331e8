#include <doctest.h>

#include "geotwist/suites.hpp"

using namespace geotwist;

namespace {
TowerPtr tower_zeta9() {
  static TowerPtr t = FieldTower::make(
      {{"z9",
        {FVal(Rational(1)), FVal(Rational(0)), FVal(Rational(0)),
         FVal(Rational(1)), FVal(Rational(0)), FVal(Rational(0)),
         FVal(Rational(1))}}});
  return t;
}
}  // namespace

TEST_CASE("an exceptional point over Q(zeta9)") {
  TowerPtr t = tower_zeta9();
  FieldElement z9 = FieldElement::generator(t, 0);
  auto curve = HesseCurve::make(FieldElement(0), t);

  // (1, z9, z9^2): coordinates are ninth roots of unity and the cube sums
  // vanish, so the point lies on x^3+y^3+z^3 with a^9 = b^9 = c^9 = 1
  ProjPoint p(FieldElement(1).promoted_to(t), z9, z9 * z9);
  REQUIRE(curve->contains(p));
  CurvePoint cp = curve->point(p);

  CHECK(scalar_mul(9, cp) == curve->zero());
  CHECK(scalar_mul(6, cp) != curve->zero());
  CHECK(scalar_mul(2, cp) != curve->zero());
  CHECK(in_exceptional(cp));

  auto ec = AlgebraType::EC(p, t);
  TwistReport rep = classify(ec);
  CHECK(rep.exceptional);
  CHECK(!rep.twist_alg_equals_twist.has_value());
  CHECK(!rep.z_equals_m);

  // Z = T[3] and M = T[3] x| <tau^2>: here algebraic twists miss some twists
  FieldElement w = z9.pow(3);
  GroupDesc t3(GroupDesc::Family::Trivial,
               {cyclic_shift_map(), diag_map(FieldElement(1), w, w * w)},
               "T[3]");
  GroupDesc want_m(GroupDesc::Family::Trivial,
                   {cyclic_shift_map(), diag_map(FieldElement(1), w, w * w),
                    tau_generator(curve).power(2)},
                   "T[3] x| <tau^2>");
  CHECK(rep.z_group == t3);
  CHECK(rep.m_group == want_m);
  CHECK(rep.m_group.finite_elements().size() == 27);

  // the oracle still agrees on every candidate for this sigma_p
  auto rows = brute_force_MN_oracle(ec);
  CHECK(rows.size() == 54);
  for (const auto& r : rows) CHECK(r.agree());

  // both twist routes agree here too, sampling through the 9-torsion orbit
  {
    auto [rel, pr] = standard_algebra(ec);
    CHECK(reconstruct_G2(pr).same_subspace(rel));
    Matrix3 phi = cyclic_shift_map().matrix().transpose();
    CHECK(geometric_twist_check(rel, phi, pr));
  }

  // tau^2 is in N but not in Z for this p; tau^3 is in neither
  auto [rel, pair] = standard_algebra(ec);
  (void)rel;
  ProjMap tau = tau_generator(curve);
  CHECK(in_N(tau.power(2), pair));
  CHECK(!in_Z(tau.power(2), pair));
  CHECK(!in_N(tau.power(3), pair));
}

TEST_CASE("classification on the j = 1728 curve") {
  TowerPtr t = tower_sqrt3_omega();
  FieldElement r3 = FieldElement::generator(t, 0);
  FieldElement w = FieldElement::generator(t, 1);
  auto curve = HesseCurve::make(FieldElement(1) + r3, t);
  REQUIRE(j_invariant(*curve) == FieldElement(1728));
  ProjMap tau = tau_generator(curve);
  REQUIRE(proj_order(tau, 8) == 4);

  GroupDesc t3(GroupDesc::Family::Trivial,
               {cyclic_shift_map(), diag_map(FieldElement(1), w, w * w)},
               "T[3]");
  GroupDesc full(GroupDesc::Family::Trivial,
                 {cyclic_shift_map(), diag_map(FieldElement(1), w, w * w), tau},
                 "T[3] x| <tau>");

  // p = (1,1,lambda): the distinguished 2-torsion point; Z = M = everything
  CurvePoint special = curve->point(
      ProjPoint(FieldElement(1).promoted_to(t), FieldElement(1).promoted_to(t),
                curve->lambda()));
  REQUIRE(scalar_mul(2, special) == curve->zero());
  {
    auto ec = AlgebraType::EC(special.point(), t);
    TwistReport rep = classify(ec);
    CHECK(rep.sigma_order == 2);
    CHECK(rep.z_group == full);
    CHECK(rep.m_group == full);
    CHECK(rep.m_group.finite_elements().size() == 36);
    CHECK(rep.twist_alg_equals_twist == true);
  }

  // p = (1,1,lambda) + flex: order six, inside <(1,1,lambda)> + E[3],
  // so M is everything while Z is only the translations
  {
    CurvePoint flex = curve->point(
        ProjPoint(FieldElement(1).promoted_to(t), -w, FieldElement(0).promoted_to(t)));
    CurvePoint p = group_add(special, flex);
    REQUIRE(scalar_mul(6, p) == curve->zero());
    REQUIRE(scalar_mul(2, p) != curve->zero());
    auto ec = AlgebraType::EC(p.point(), t);
    TwistReport rep = classify(ec);
    CHECK(rep.sigma_order == 6);
    CHECK(rep.z_group == t3);
    CHECK(rep.m_group == full);
    CHECK(!rep.z_equals_m);
    CHECK(rep.twist_alg_equals_twist == false);
  }
}

TEST_CASE("non-exceptional nine-torsion-free points keep the flag off") {
  TowerPtr t = tower_omega_cbrt2();
  FieldElement c2 = FieldElement::generator(t, 1);
  auto ec = AlgebraType::EC(ProjPoint(FieldElement(1).promoted_to(t),
                                      FieldElement(1).promoted_to(t), -c2),
                            t);
  TwistReport rep = classify(ec);
  CHECK(!rep.exceptional);
  CHECK(rep.twist_alg_equals_twist == true);
}
