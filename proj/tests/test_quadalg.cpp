#include <doctest.h>

#include "geotwist/suites.hpp"

using namespace geotwist;

namespace {
ProjPoint pp(int a, int b, int c) {
  return ProjPoint(FieldElement(a), FieldElement(b), FieldElement(c));
}

Matrix3 m3(std::initializer_list<int> v) {
  Matrix3 m;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = FieldElement(*it++);
  return m;
}
}  // namespace

TEST_CASE("pencil determinants of catalog relations") {
  {
    auto [rel, pair] = standard_algebra(AlgebraType::P());
    CHECK(pencil_determinant(rel).is_zero());
  }
  {
    auto [rel, pair] = standard_algebra(AlgebraType::S(FieldElement(2)));
    Poly3 want = Poly3::monomial({1, 1, 1}, FieldElement(-7));
    CHECK(pencil_determinant(rel) == want);
  }
  {
    // T': the certified point variety is V(y) u V(x^2 - yz)
    auto [rel, pair] = standard_algebra(AlgebraType::Tprime());
    Poly3 y = Poly3::variable(1);
    Poly3 conic = Poly3::variable(0) * Poly3::variable(0) -
                  Poly3::variable(1) * Poly3::variable(2);
    CHECK(proportional(pencil_determinant(rel), y * conic));
  }
}

TEST_CASE("sigma from the pencil") {
  {
    auto [rel, pair] = standard_algebra(AlgebraType::P());
    CHECK(sigma_from_pencil(rel, pp(2, 5, 7)) == pp(2, 5, 7));
  }
  {
    auto [rel, pair] = standard_algebra(AlgebraType::S(FieldElement(2)));
    CHECK(sigma_from_pencil(rel, pp(0, 1, 1)) == pp(0, 1, 2));
    CHECK(sigma_from_pencil(rel, pp(1, 1, 0)) == pp(1, 2, 0));
    CHECK_THROWS_AS(sigma_from_pencil(rel, pp(1, 1, 1)), PointOffVariety);
  }
}

TEST_CASE("sigma_from_pencil is scale-invariant and column-independent") {
  auto [rel, pair] = standard_algebra(AlgebraType::S(FieldElement(2)));
  ProjPoint p(FieldElement(0), FieldElement(3), FieldElement(7));
  ProjPoint p_scaled(FieldElement(0), FieldElement(6), FieldElement(14));
  CHECK(sigma_from_pencil(rel, p) == sigma_from_pencil(rel, p_scaled));

  // all nonzero adjugate columns give the same projective point
  Matrix3 m;
  for (int k = 0; k < 3; ++k) {
    const Matrix3& c = rel.basis()[size_t(k)];
    for (int j = 0; j < 3; ++j) {
      FieldElement e(0);
      for (int i = 0; i < 3; ++i) e = e + p[i] * c(i, j);
      m(k, j) = e;
    }
  }
  Matrix3 adj = mat_adjugate(m);
  ProjPoint want = sigma_from_pencil(rel, p);
  int nonzero_cols = 0;
  for (int j = 0; j < 3; ++j) {
    Vector3 col = adj.col(j);
    if (col(0).is_zero() && col(1).is_zero() && col(2).is_zero()) continue;
    ++nonzero_cols;
    CHECK(ProjPoint(col) == want);
  }
  CHECK(nonzero_cols >= 1);
}

TEST_CASE("verify_G1 certifies the catalog and refutes mismatches") {
  for (const auto& t : acceptance_catalog()) {
    auto [rel, pair] = standard_algebra(t);
    CheckReport rep = verify_G1(rel, pair);
    INFO(t.tag_name());
    for (const auto& c : rep.certificates) {
      INFO(c.name, " ", c.detail);
      CHECK(c.pass);
    }
    CHECK(rep.ok);
  }
  // wrong sigma: S relations against the identity map on V(xyz)
  {
    auto [rel, pair] = standard_algebra(AlgebraType::S(FieldElement(2)));
    GeometricPair wrong = pair;
    for (auto& c : wrong.components) {
      auto par = *c.param;
      c.sigma = PolySigma{{Poly3::variable(0), Poly3::variable(1),
                           Poly3::variable(2)},
                          std::get<PolySigma>(c.sigma).target};
    }
    CHECK(!verify_G1(rel, wrong).ok);
  }
  // wrong variety: P relations against V(x)
  {
    auto [rel, pair] = standard_algebra(AlgebraType::P());
    auto [rel_s, pair_s] = standard_algebra(AlgebraType::S(FieldElement(2)));
    CHECK(!verify_G1(rel, pair_s).ok);
  }
}

TEST_CASE("reconstruct_G2 recovers the catalog relations") {
  for (const auto& t : acceptance_catalog()) {
    auto [rel, pair] = standard_algebra(t);
    INFO(t.tag_name());
    RelationSpace got = reconstruct_G2(pair);
    CHECK(got.same_subspace(rel));
  }
}

TEST_CASE("reconstruct_G2 reports a bad kernel dimension") {
  // a line with a sigma that is not the restriction of any quadratic-regular
  // pair: sigma maps V(x) onto V(x) by squaring the parameter ratio; the
  // vanishing forms then have dimension > 3
  GeometricPair pair;
  Component c;
  c.kind = ComponentKind::Line;
  c.form = Poly3::variable(0);
  c.param = {{Poly3(), Poly3::variable(0), Poly3::variable(1)}};
  c.sigma = PolySigma{{Poly3(),
                       Poly3::variable(1) * Poly3::variable(1),
                       Poly3::variable(2) * Poly3::variable(2)},
                      0};
  pair.components.push_back(c);
  CHECK_THROWS_AS(reconstruct_G2(pair), G2Error);
}

TEST_CASE("twist_relations") {
  auto [rel, pair] = standard_algebra(AlgebraType::P());
  Matrix3 id = m3({1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(twist_relations(rel, id).same_subspace(rel));
  CHECK_THROWS(twist_relations(rel, m3({1, 0, 0, 0, 1, 0, 0, 0, 0})));

  // functoriality on commuting diagonals
  Matrix3 d1 = m3({1, 0, 0, 0, 2, 0, 0, 0, 3});
  Matrix3 d2 = m3({1, 0, 0, 0, 5, 0, 0, 0, 7});
  RelationSpace two_step = twist_relations(twist_relations(rel, d1), d2);
  RelationSpace one_step = twist_relations(rel, Matrix3(d1 * d2));
  CHECK(two_step.same_subspace(one_step));
}

TEST_CASE("geometric twist check on examples") {
  {
    auto [rel, pair] = standard_algebra(AlgebraType::P());
    CHECK(geometric_twist_check(rel, m3({1, 0, 0, 0, 1, 0, 0, 0, 1}), pair));
    CHECK(geometric_twist_check(rel, m3({1, 0, 0, 0, 1, 0, 0, 0, 2}), pair));
  }
  {
    auto [rel, pair] = standard_algebra(AlgebraType::S(FieldElement(2)));
    CHECK(geometric_twist_check(rel, m3({1, 0, 0, 0, 2, 0, 0, 0, 3}), pair));
    // the cyclic permutation from the Z(E) family
    CHECK(geometric_twist_check(
        rel, Matrix3(cyclic_shift_map().matrix().transpose()), pair));
  }
}

TEST_CASE("truncation dimensions") {
  std::vector<long> regular{1, 3, 6, 10, 15};
  {
    auto [rel, pair] = standard_algebra(AlgebraType::P());
    CHECK(truncation_dims(rel, 4) == regular);
  }
  {
    TowerPtr t = tower_omega_cbrt2();
    FieldElement c2 = FieldElement::generator(t, 1);
    auto ec = AlgebraType::EC(ProjPoint(FieldElement(1).promoted_to(t),
                                        FieldElement(1).promoted_to(t), -c2),
                              t);
    auto [rel, pair] = standard_algebra(ec);
    CHECK(truncation_dims(rel, 4) == regular);
  }
  {
    // degenerate monomial relations xx, xy, yx: word counts differ from the
    // regular pattern (frozen combinatorial oracle: 27 - 13 = 14 in degree 3)
    Matrix3 xx, xy, yx;
    xx.setZero();
    xy.setZero();
    yx.setZero();
    xx(0, 0) = FieldElement(1);
    xy(0, 1) = FieldElement(1);
    yx(1, 0) = FieldElement(1);
    RelationSpace degenerate({xx, xy, yx}, nullptr);
    auto dims = truncation_dims(degenerate, 3);
    CHECK(dims == std::vector<long>{1, 3, 6, 14});
    CHECK(dims != std::vector<long>{1, 3, 6, 10});
  }
}

TEST_CASE("truncation degree is capped") {
  auto [rel, pair] = standard_algebra(AlgebraType::P());
  CHECK_THROWS(truncation_dims(rel, 7));
}

TEST_CASE("hilbert dims are twist invariant") {
  auto [rel, pair] = standard_algebra(AlgebraType::S(FieldElement(2)));
  Matrix3 phi = m3({1, 0, 0, 0, 3, 0, 0, 0, 5});
  CHECK(truncation_dims(rel, 4) == truncation_dims(twist_relations(rel, phi), 4));
}

TEST_CASE("twisting system checker") {
  auto [rel, pair] = standard_algebra(AlgebraType::P());
  GradedTruncation trunc(rel, 4);
  CHECK(trunc.dim(1) == 3);
  CHECK(trunc.dim(2) == 6);
  CHECK(trunc.dim(3) == 10);
  CHECK(trunc.dim(4) == 15);

  // theta_n = id is a twisting system
  std::vector<std::vector<MatrixX>> id_theta;
  for (int n = 0; n < 4; ++n) {
    std::vector<MatrixX> per;
    for (int d = 1; d <= 4; ++d) {
      MatrixX m(trunc.dim(d), trunc.dim(d));
      m.setZero();
      for (long i = 0; i < trunc.dim(d); ++i) m(i, i) = FieldElement(1);
      per.push_back(std::move(m));
    }
    id_theta.push_back(std::move(per));
  }
  CHECK(!verify_twisting_system(trunc, id_theta, 4, true).has_value());

  // theta_n = phi^n for a diagonal automorphism
  Matrix3 phi = m3({1, 0, 0, 0, 2, 0, 0, 0, 3});
  auto theta = algebraic_twisting_system(trunc, phi, 5, 4);
  CHECK(!verify_twisting_system(trunc, theta, 4, true).has_value());

  // a non-multiplicative theta_1 fails with a witness
  auto bad = theta;
  MatrixX id2(trunc.dim(2), trunc.dim(2));
  id2.setZero();
  for (long i = 0; i < trunc.dim(2); ++i) id2(i, i) = FieldElement(1);
  bad[1][1] = id2;
  auto w = verify_twisting_system(trunc, bad, 4, true);
  REQUIRE(w.has_value());
  CHECK(w->n >= 0);

  // theta_0 != id is reported for the normalized check
  auto shifted = theta;
  shifted[0] = theta[1];
  bool theta0_id = true;
  auto w2 = verify_twisting_system(trunc, shifted, 4, true, &theta0_id);
  CHECK(!theta0_id);
  CHECK(w2.has_value());
}
