#include <doctest.h>

#include "geotwist/serialize.hpp"
#include "geotwist/suites.hpp"

using namespace geotwist;

TEST_CASE("tower and element round-trip bit-exactly") {
  TowerPtr t = tower_omega_cbrt2();
  Json jt = to_json(*t);
  TowerPtr t2 = tower_from_json(jt);
  CHECK(t->same(*t2));
  CHECK(Json::parse(jt.dump()) == to_json(*t2));

  unsigned long state = 5;
  auto next = [&](long lo, long hi) {
    state = state * 6364136223846793005ul + 1;
    return lo + long((state >> 21) % (unsigned long)(hi - lo + 1));
  };
  for (int trial = 0; trial < 10; ++trial) {
    FieldElement e(Rational(next(-20, 20), next(1, 9)));
    for (int lv = 0; lv < t->depth(); ++lv) {
      FieldElement g = FieldElement::generator(t, lv);
      FieldElement p(1);
      for (int k = 0; k < t->levels()[size_t(lv)].degree(); ++k) {
        e = e + FieldElement(Rational(next(-9, 9), next(1, 5))) * p;
        p = p * g;
      }
    }
    Json je = element_with_tower_json(e);
    FieldElement back = element_with_tower_from_json(Json::parse(je.dump()));
    CHECK(back == e);
    CHECK(element_with_tower_json(back).dump() == je.dump());
  }
}

TEST_CASE("big rationals survive the {num,den} encoding") {
  Rational big("123456789012345678901234567890/9876543210987654321");
  big.canonicalize();
  FieldElement e{big};
  Json j = element_with_tower_json(e);
  CHECK(element_with_tower_from_json(j) == e);
}

TEST_CASE("relations round-trip") {
  for (const auto& t : acceptance_catalog()) {
    auto [rel, pair] = standard_algebra(t);
    Json j = to_json(rel);
    RelationSpace back = relations_from_json(Json::parse(j.dump()));
    CHECK(back.same_subspace(rel));
    CHECK(mat_equal(back.flat(), rel.flat()));
  }
}

TEST_CASE("pairs round-trip and still verify") {
  for (const auto& t : acceptance_catalog()) {
    auto [rel, pair] = standard_algebra(t);
    INFO(t.tag_name());
    GeometricPair back = pair_from_json(Json::parse(to_json(pair).dump()));
    CHECK(back.components.size() == pair.components.size());
    CHECK(verify_G1(rel, back).ok);
  }
}

TEST_CASE("curve and point round-trip") {
  TowerPtr t = tower_omega_cbrt2();
  auto curve = HesseCurve::make(FieldElement(0), t);
  CurvePtr back = curve_from_json(Json::parse(to_json(*curve).dump()));
  CHECK(back->lambda() == curve->lambda());

  FieldElement c2 = FieldElement::generator(t, 1);
  ProjPoint p(FieldElement(1).promoted_to(t), FieldElement(1).promoted_to(t), -c2);
  ProjPoint pb = point_from_json(Json::parse(to_json(p).dump()), t);
  CHECK(pb == p);
}

TEST_CASE("report serializes") {
  TwistReport r = classify(AlgebraType::CC());
  Json j = to_json(r);
  CHECK(j.at("type") == "CC");
  CHECK(j.at("flags").at("z_equals_m") == true);
  CHECK(j.at("schema") == "geotwist/report-v1");
}
