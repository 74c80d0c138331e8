#include <doctest.h>

#include "geotwist/suites.hpp"

using namespace geotwist;

namespace {
// Small deterministic generator for property-style checks.
struct Rng {
  unsigned long state = 0x243f6a8885a308d3ul;
  long next(long lo, long hi) {
    state = state * 6364136223846793005ul + 1442695040888963407ul;
    return lo + long((state >> 19) % (unsigned long)(hi - lo + 1));
  }
  FieldElement rational() {
    long num = next(-8, 8);
    long den = next(1, 6);
    return FieldElement(Rational(num, den));
  }
  FieldElement element(const TowerPtr& t) {
    FieldElement e = rational();
    for (int lv = 0; lv < t->depth(); ++lv) {
      FieldElement g = FieldElement::generator(t, lv);
      FieldElement p(1);
      for (int k = 0; k < t->levels()[size_t(lv)].degree(); ++k) {
        e = e + rational() * p;
        p = p * g;
      }
    }
    return e;
  }
};
}  // namespace

TEST_CASE("rational arithmetic") {
  FieldElement half(Rational(1, 2)), third(Rational(1, 3));
  CHECK((half + third) == FieldElement(Rational(5, 6)));
  CHECK((half * third) == FieldElement(Rational(1, 6)));
  CHECK((half / third) == FieldElement(Rational(3, 2)));
  CHECK_THROWS_AS(half / FieldElement(0), DivisionByZero);
}

TEST_CASE("reduction by minimal polynomials") {
  TowerPtr qw = tower_omega();
  FieldElement w = FieldElement::generator(qw, 0);
  CHECK(w * w == -w - FieldElement(1));
  CHECK((w * w * w).is_one());

  TowerPtr t = tower_omega_cbrt2();
  FieldElement c = FieldElement::generator(t, 1);
  CHECK(c * c * c == FieldElement(2).promoted_to(t));
  CHECK((c.pow(3) - FieldElement(2)).is_zero());
}

TEST_CASE("tower mismatch is detected") {
  FieldElement w = FieldElement::generator(tower_omega(), 0);
  FieldElement r = FieldElement::generator(tower_sqrt3(), 0);
  CHECK_THROWS_AS(w + r, TowerMismatch);
}

TEST_CASE("tower construction validates the declaration") {
  // degree-1 level
  CHECK_THROWS(FieldTower::make({{"a", {FVal(Rational(2)), FVal(Rational(1))}}}));
  // non-monic
  CHECK_THROWS(FieldTower::make(
      {{"a", {FVal(Rational(1)), FVal(Rational(0)), FVal(Rational(2))}}}));
}

TEST_CASE("field axioms on random elements") {
  Rng rng;
  for (TowerPtr t : {tower_omega_cbrt2(), tower_sqrt3_omega()}) {
    for (int i = 0; i < 20; ++i) {
      FieldElement a = rng.element(t), b = rng.element(t), c = rng.element(t);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!a.is_zero()) {
        CHECK((a * a.inverse()).is_one());
        CHECK(a / a == FieldElement(1).promoted_to(t));
      }
    }
  }
}

TEST_CASE("root_of_unity_order") {
  CHECK(root_of_unity_order(FieldElement(1), 12) == 1);
  CHECK(!root_of_unity_order(FieldElement(2), 12).has_value());
  CHECK_THROWS(root_of_unity_order(FieldElement(0), 12));

  // zeta6 has order 6: verified against a repeated-multiplication oracle
  TowerPtr t = tower_zeta6();
  FieldElement z = FieldElement::generator(t, 0);
  long oracle = 0;
  FieldElement p = z;
  for (long n = 1; n <= 12; ++n) {
    if (p.is_one()) {
      oracle = n;
      break;
    }
    p = p * z;
  }
  CHECK(oracle == 6);
  CHECK(root_of_unity_order(z, 12) == oracle);

  TowerPtr qw = tower_omega();
  CHECK(root_of_unity_order(FieldElement::generator(qw, 0), 12) == 3);
  CHECK(root_of_unity_order(FieldElement(-1), 12) == 2);
}

TEST_CASE("roots_in_tower finds catalog roots") {
  // x^2 + x + 1 in Q(w)
  {
    TowerPtr t = tower_omega();
    UPoly f{FieldElement(1), FieldElement(1), FieldElement(1)};
    auto rr = roots_in_tower(f, t);
    CHECK(rr.complete());
    CHECK(rr.roots.size() == 2);
  }
  // same roots expressed through zeta6: w = z6 - 1
  {
    TowerPtr t = tower_zeta6();
    UPoly f{FieldElement(1), FieldElement(1), FieldElement(1)};
    auto rr = roots_in_tower(f, t);
    CHECK(rr.complete());
    REQUIRE(rr.roots.size() == 2);
    for (const auto& r : rr.roots) CHECK((r * r + r + FieldElement(1)).is_zero());
  }
  // c^3 + 2 over Q(w, c2): roots -c2 w^k
  {
    TowerPtr t = tower_omega_cbrt2();
    UPoly f{FieldElement(2), FieldElement(0), FieldElement(0), FieldElement(1)};
    auto rr = roots_in_tower(f, t);
    CHECK(rr.complete());
    CHECK(rr.roots.size() == 3);
  }
  // c^3 - 5c + 2 over Q(w, r2): roots 2, -1 +- r2
  {
    TowerPtr t = tower_omega_sqrt2();
    UPoly f{FieldElement(2), FieldElement(-5), FieldElement(0), FieldElement(1)};
    auto rr = roots_in_tower(f, t);
    CHECK(rr.complete());
    CHECK(rr.roots.size() == 3);
  }
  // c^3 - 5c + 2 over Q(w) only: the quadratic factor has no roots there
  {
    TowerPtr t = tower_omega();
    UPoly f{FieldElement(2), FieldElement(-5), FieldElement(0), FieldElement(1)};
    auto rr = roots_in_tower(f, t);
    CHECK(!rr.complete());
    CHECK(rr.roots.size() == 1);
    CHECK(upoly_deg(rr.residual) == 2);
  }
}

TEST_CASE("str() output parses back to the same element") {
  Rng rng;
  for (TowerPtr t : {tower_omega_cbrt2(), tower_sqrt3_omega()}) {
    for (int i = 0; i < 15; ++i) {
      FieldElement e = rng.element(t);
      CHECK(parse_element(e.str(), t) == e);
    }
  }
  FieldElement c2 = FieldElement::generator(tower_omega_cbrt2(), 1);
  CHECK((-c2).str() == "-c2");
}

TEST_CASE("element parser") {
  TowerPtr t = tower_sqrt3();
  FieldElement r3 = FieldElement::generator(t, 0);
  CHECK(parse_element("1+r3", t) == FieldElement(1) + r3);
  CHECK(parse_element("5/3", nullptr) == FieldElement(Rational(5, 3)));
  CHECK(parse_element("-r3^2", t) == FieldElement(-3).promoted_to(t));
  CHECK(parse_element("(1+r3)*(1-r3)", t) == FieldElement(-2).promoted_to(t));
  CHECK_THROWS(parse_element("nope", t));
}
