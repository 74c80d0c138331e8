#include <doctest.h>

#include "geotwist/suites.hpp"

using namespace geotwist;

namespace {
Matrix3 m3(std::initializer_list<int> v) {
  Matrix3 m;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = FieldElement(*it++);
  return m;
}

ProjPoint pp(int a, int b, int c) {
  return ProjPoint(FieldElement(a), FieldElement(b), FieldElement(c));
}
}  // namespace

TEST_CASE("adjugate identities") {
  Matrix3 id = m3({1, 0, 0, 0, 1, 0, 0, 0, 1});
  CHECK(mat_equal(mat_adjugate(id), id));

  Matrix3 d = m3({2, 0, 0, 0, 3, 0, 0, 0, 5});
  Matrix3 want = m3({15, 0, 0, 0, 10, 0, 0, 0, 6});
  CHECK(mat_equal(mat_adjugate(d), want));

  // rank-2: the nonzero adjugate column spans the kernel
  Matrix3 r2 = m3({1, 0, 0, 0, 1, 0, 0, 0, 0});
  Matrix3 adj = mat_adjugate(r2);
  CHECK(mat_equal(adj, m3({0, 0, 0, 0, 0, 0, 0, 0, 1})));
  Vector3 k = adj.col(2);
  Vector3 rk = r2 * k;
  CHECK(mat_is_zero(rk));
}

TEST_CASE("M * adj(M) = det(M) I on random matrices") {
  unsigned long state = 99;
  auto next = [&]() {
    state = state * 6364136223846793005ul + 1;
    return int((state >> 33) % 7) - 3;
  };
  for (int trial = 0; trial < 20; ++trial) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = FieldElement(next());
    Matrix3 prod = m * mat_adjugate(m);
    FieldElement d = det3(m);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        CHECK(prod(i, j) == (i == j ? d : FieldElement(0)));
  }
}

TEST_CASE("proj points and maps normalize") {
  CHECK(pp(2, 4, 6) == pp(1, 2, 3));
  CHECK(pp(0, 5, 10) == pp(0, 1, 2));
  CHECK_THROWS(ProjPoint(FieldElement(0), FieldElement(0), FieldElement(0)));

  ProjMap m(m3({0, 2, 0, 2, 0, 0, 0, 0, 2}));
  CHECK(m == ProjMap(m3({0, 1, 0, 1, 0, 0, 0, 0, 1})));
  CHECK(m.compose(m).is_identity());
  CHECK_THROWS(ProjMap(m3({1, 1, 0, 1, 1, 0, 0, 0, 1})));
}

TEST_CASE("fit_proj_map") {
  std::array<ProjPoint, 4> frame{pp(1, 0, 0), pp(0, 1, 0), pp(0, 0, 1),
                                 pp(1, 1, 1)};
  auto id = fit_proj_map(frame, frame);
  REQUIRE(id);
  CHECK(id->is_identity());

  std::array<ProjPoint, 4> swapped{pp(0, 1, 0), pp(1, 0, 0), pp(0, 0, 1),
                                   pp(1, 1, 1)};
  auto sw = fit_proj_map(frame, swapped);
  REQUIRE(sw);
  CHECK(*sw == ProjMap(m3({0, 1, 0, 1, 0, 0, 0, 0, 1})));

  std::array<ProjPoint, 4> scaled{pp(1, 0, 0), pp(0, 1, 0), pp(0, 0, 1),
                                  pp(1, 2, 3)};
  auto sc = fit_proj_map(frame, scaled);
  REQUIRE(sc);
  CHECK(*sc == ProjMap(m3({1, 0, 0, 0, 2, 0, 0, 0, 3})));

  // degenerate targets give nullopt; degenerate sources throw
  std::array<ProjPoint, 4> collinear{pp(1, 0, 0), pp(0, 1, 0), pp(1, 1, 0),
                                     pp(0, 0, 1)};
  CHECK(!fit_proj_map(frame, collinear).has_value());
  CHECK_THROWS_AS(fit_proj_map(collinear, frame), std::invalid_argument);

  // round-trip property: a fitted map reproduces all four targets
  unsigned long state = 7;
  auto next = [&]() {
    state = state * 6364136223846793005ul + 1;
    return int((state >> 33) % 9) - 4;
  };
  int done = 0;
  while (done < 10) {
    Matrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = FieldElement(next());
    if (det3(m).is_zero()) continue;
    ProjMap pm(m);
    std::array<ProjPoint, 4> img{pm.apply(frame[0]), pm.apply(frame[1]),
                                 pm.apply(frame[2]), pm.apply(frame[3])};
    if (!general_position(img)) continue;
    auto fit = fit_proj_map(frame, img);
    REQUIRE(fit);
    CHECK(*fit == pm);
    for (int k = 0; k < 4; ++k)
      CHECK(fit->apply(frame[size_t(k)]) == img[size_t(k)]);
    ++done;
  }
}

TEST_CASE("proj_order") {
  CHECK(proj_order(ProjMap(), 5) == 1);
  CHECK(proj_order(ProjMap(m3({0, 1, 0, 1, 0, 0, 0, 0, 1})), 5) == 2);

  // (a,b,c) -> (b,a,eps c) has order 6
  TowerPtr t = tower_omega();
  FieldElement w = FieldElement::generator(t, 0);
  Matrix3 m;
  m.setZero();
  m(0, 1) = FieldElement(1);
  m(1, 0) = FieldElement(1);
  m(2, 2) = w;
  CHECK(proj_order(ProjMap(m), 12) == 6);

  // scalar invariance: M and cM are projectively equal
  Matrix3 a = m3({1, 2, 0, 0, 1, 1, 3, 0, 1});
  Matrix3 ca = a * FieldElement(7);
  CHECK(ProjMap(a) == ProjMap(ca));
  CHECK(!proj_order(ProjMap(m3({1, 0, 0, 0, 2, 0, 0, 0, 4})), 20).has_value());
}

TEST_CASE("rref and kernels") {
  MatrixX m(2, 3);
  m(0, 0) = FieldElement(1);
  m(0, 1) = FieldElement(2);
  m(0, 2) = FieldElement(3);
  m(1, 0) = FieldElement(2);
  m(1, 1) = FieldElement(4);
  m(1, 2) = FieldElement(6);
  CHECK(rank_of(m) == 1);
  MatrixX kb = kernel_basis(m);
  CHECK(kb.cols() == 2);
  for (int k = 0; k < kb.cols(); ++k) {
    FieldElement dot(0);
    for (int j = 0; j < 3; ++j) dot = dot + m(0, j) * kb(j, k);
    CHECK(dot.is_zero());
  }
}
