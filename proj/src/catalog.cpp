#include "geotwist/catalog.hpp"

#include <algorithm>
#include <set>

namespace geotwist {

namespace {
Matrix3 rows(std::initializer_list<int> v) {
  Matrix3 m;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = FieldElement(*it++);
  return m;
}

Matrix3 rows_fe(std::initializer_list<FieldElement> v) {
  Matrix3 m;
  auto it = v.begin();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = *it++;
  return m;
}
}  // namespace

ProjMap cyclic_shift_map() { return ProjMap(rows({0, 1, 0, 0, 0, 1, 1, 0, 0})); }
ProjMap swap_xy_map() { return ProjMap(rows({0, 1, 0, 1, 0, 0, 0, 0, 1})); }
ProjMap swap_yz_map() { return ProjMap(rows({1, 0, 0, 0, 0, 1, 0, 1, 0})); }
ProjMap swap_xy_negz_map() {
  return ProjMap(rows({0, 1, 0, 1, 0, 0, 0, 0, -1}));
}
ProjMap diag_map(const FieldElement& a, const FieldElement& b,
                 const FieldElement& c) {
  const FieldElement zero(0);
  return ProjMap(rows_fe({a, zero, zero, zero, b, zero, zero, zero, c}));
}

FieldElement omega_in(const TowerPtr& tower) {
  UPoly f{FieldElement(1), FieldElement(1), FieldElement(1)};
  auto rr = roots_in_tower(f, tower);
  if (rr.roots.empty()) throw TowerTooSmall("x^2 + x + 1");
  return rr.roots.front();
}

// ---- GroupDesc ---------------------------------------------------------------

GroupDesc::GroupDesc(Family f, std::vector<ProjMap> finite_gens,
                     std::string label)
    : family_(f), gens_(std::move(finite_gens)), label_(std::move(label)) {
  // enumerate the closure of the finite part
  std::vector<ProjMap> els{ProjMap()};
  bool grew = true;
  while (grew) {
    grew = false;
    for (const auto& g : gens_) {
      for (size_t i = 0; i < els.size(); ++i) {
        ProjMap cand = els[i].compose(g);
        bool known = false;
        for (const auto& e : els)
          if (e == cand) {
            known = true;
            break;
          }
        if (!known) {
          els.push_back(cand);
          grew = true;
          if (els.size() > 256)
            throw std::invalid_argument("finite part closure too large");
        }
      }
    }
  }
  elements_ = std::move(els);
}

bool GroupDesc::family_member(Family f, const ProjMap& pm) {
  const Matrix3& m = pm.matrix();
  auto diag = [&] {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j && !m(i, j).is_zero()) return false;
    return true;
  };
  switch (f) {
    case Family::Trivial:
      return pm.is_identity();
    case Family::FullPGL3:
      return true;
    case Family::DiagTorus2:
      return diag();
    case Family::DiagTorus1:
      return diag() && m(0, 0) == m(1, 1) * m(2, 2);
    case Family::DiagSquare:
      return diag() && m(2, 2) * m(0, 0) == m(1, 1) * m(1, 1);
    case Family::DiagInvSquare:
      return diag() && m(1, 1) * m(1, 1) * m(2, 2) ==
                           m(0, 0) * m(0, 0) * m(0, 0);
    case Family::DiagUnit3:
      return diag() && m(0, 0) == m(1, 1);
    case Family::TypeTZ: {
      if (!m(0, 1).is_zero() || !m(0, 2).is_zero() || !m(1, 0).is_zero() ||
          !m(1, 2).is_zero())
        return false;
      if (m(0, 0).is_zero() || m(1, 1).is_zero()) return false;
      FieldElement e = m(1, 1) / m(0, 0);
      if (!(e * e * e).is_one()) return false;
      return m(2, 2) == m(0, 0) * e * e;
    }
    case Family::UnipShear: {
      if (m(0, 0).is_zero()) return false;
      if (!m(0, 2).is_zero() || !m(1, 0).is_zero() || !m(1, 2).is_zero())
        return false;
      if (!(m(1, 1) == m(0, 0)) || !(m(2, 2) == m(0, 0))) return false;
      FieldElement d = m(0, 1) / m(0, 0);
      return m(2, 0) == m(0, 0) * FieldElement(2) * d &&
             m(2, 1) == m(0, 0) * d * d;
    }
  }
  return false;
}

bool GroupDesc::contains(const ProjMap& m) const {
  for (const auto& f : elements_) {
    if (family_member(family_, m.compose(f.inverse()))) return true;
  }
  return false;
}

bool GroupDesc::operator==(const GroupDesc& o) const {
  if (family_ != o.family_) return false;
  if (elements_.size() != o.elements_.size()) return false;
  std::set<std::string> a, b;
  for (const auto& e : elements_) a.insert(e.str());
  for (const auto& e : o.elements_) b.insert(e.str());
  return a == b;
}

std::vector<ProjMap> GroupDesc::family_samples(const TowerPtr& tower,
                                               int count) const {
  std::vector<ProjMap> out;
  auto fe = [](int k) { return FieldElement(k); };
  switch (family_) {
    case Family::Trivial:
      out.push_back(ProjMap());
      break;
    case Family::FullPGL3:
      for (int k = 2; int(out.size()) < count; ++k) {
        Matrix3 m = rows({1, 1, 0, 0, 1, 1, 1, 0, 0});
        m(0, 0) = fe(k);
        if (!det3(m).is_zero()) out.push_back(ProjMap(m));
      }
      break;
    case Family::DiagTorus2:
      for (int k = 2; int(out.size()) < count; ++k)
        out.push_back(diag_map(fe(1), fe(k), fe(k + 1)));
      break;
    case Family::DiagTorus1:
      for (int k = 2; int(out.size()) < count; ++k)
        out.push_back(diag_map(fe(1), fe(k), FieldElement(1) / fe(k)));
      break;
    case Family::DiagSquare:
      for (int k = 2; int(out.size()) < count; ++k)
        out.push_back(diag_map(fe(1), fe(k), fe(k) * fe(k)));
      break;
    case Family::DiagInvSquare:
      for (int k = 2; int(out.size()) < count; ++k)
        out.push_back(
            diag_map(fe(1), fe(k), FieldElement(1) / (fe(k) * fe(k))));
      break;
    case Family::DiagUnit3:
      for (int k = 2; int(out.size()) < count; ++k)
        out.push_back(diag_map(fe(1), fe(1), fe(k)));
      break;
    case Family::TypeTZ: {
      FieldElement w = omega_in(tower);
      out.push_back(ProjMap(rows_fe({fe(1), fe(0), fe(0), fe(0), w, fe(0),
                                     fe(0), fe(0), w * w})));
      for (int k = 1; int(out.size()) < count; ++k) {
        Matrix3 m = rows({1, 0, 0, 0, 1, 0, 0, 0, 1});
        m(2, 0) = fe(k);
        m(2, 1) = fe(k + 1);
        out.push_back(ProjMap(m));
      }
      break;
    }
    case Family::UnipShear:
      for (int k = 1; int(out.size()) < count; ++k) {
        Matrix3 m = rows({1, 0, 0, 0, 1, 0, 0, 0, 1});
        m(0, 1) = fe(k);
        m(2, 0) = fe(2 * k);
        m(2, 1) = fe(k) * fe(k);
        out.push_back(ProjMap(m));
      }
      break;
  }
  if (int(out.size()) > count) out.resize(size_t(count));
  return out;
}

// ---- AlgebraType ---------------------------------------------------------------

std::string AlgebraType::tag_name() const {
  switch (tag) {
    case Tag::P: return "P";
    case Tag::S: return "S";
    case Tag::Sp: return "S'";
    case Tag::T: return "T";
    case Tag::Tp: return "T'";
    case Tag::NC: return "NC";
    case Tag::CC: return "CC";
    case Tag::EC: return "EC";
  }
  return "?";
}

std::string AlgebraType::params_str() const {
  switch (tag) {
    case Tag::S:
    case Tag::Sp:
    case Tag::NC:
      return "alpha=" + alpha.str();
    case Tag::EC:
      return "lambda=" + curve->lambda().str() + ", p=" + point.str();
    default:
      return "";
  }
}

namespace {
void check_alpha(const FieldElement& a) {
  FieldElement a3 = a.pow(3);
  if (a3.is_zero() || a3.is_one())
    throw std::invalid_argument("alpha^3 must avoid 0 and 1");
}
}  // namespace

AlgebraType AlgebraType::P() {
  AlgebraType t;
  t.tag = Tag::P;
  return t;
}

AlgebraType AlgebraType::S(FieldElement a, TowerPtr tower) {
  check_alpha(a);
  AlgebraType t;
  t.tag = Tag::S;
  t.alpha = std::move(a);
  t.tower = tower ? tower : t.alpha.tower();
  return t;
}

AlgebraType AlgebraType::Sprime(FieldElement a, TowerPtr tower) {
  check_alpha(a);
  AlgebraType t;
  t.tag = Tag::Sp;
  t.alpha = std::move(a);
  t.tower = tower ? tower : t.alpha.tower();
  return t;
}

AlgebraType AlgebraType::T(TowerPtr tower_with_omega) {
  omega_in(tower_with_omega);  // throws when absent
  AlgebraType t;
  t.tag = Tag::T;
  t.tower = std::move(tower_with_omega);
  return t;
}

AlgebraType AlgebraType::Tprime() {
  AlgebraType t;
  t.tag = Tag::Tp;
  return t;
}

AlgebraType AlgebraType::NC(FieldElement a, TowerPtr tower_with_omega) {
  check_alpha(a);
  omega_in(tower_with_omega);
  AlgebraType t;
  t.tag = Tag::NC;
  t.alpha = std::move(a);
  t.tower = std::move(tower_with_omega);
  return t;
}

AlgebraType AlgebraType::CC() {
  AlgebraType t;
  t.tag = Tag::CC;
  return t;
}

AlgebraType AlgebraType::EC(ProjPoint p, TowerPtr tower) {
  const FieldElement &a = p[0], &b = p[1], &c = p[2];
  if (a.is_zero() || b.is_zero() || c.is_zero())
    throw std::invalid_argument("EC requires alpha*beta*gamma != 0");
  FieldElement s3 = a.pow(3) + b.pow(3) + c.pow(3);
  FieldElement prod3 = FieldElement(3) * a * b * c;
  if (s3.pow(3) == prod3.pow(3))
    throw std::invalid_argument("(a^3+b^3+c^3)^3 = (3abc)^3: singular cubic");
  AlgebraType t;
  t.tag = Tag::EC;
  t.tower = tower;
  // Hesse parameter: x^3+y^3+z^3 - 3 l xyz with 3 l = (a^3+b^3+c^3)/(abc).
  FieldElement lambda = s3 / prod3;
  t.curve = HesseCurve::make(lambda, tower);
  if (!t.curve->contains(p))
    throw std::invalid_argument("p does not lie on its own cubic");
  t.point = std::move(p);
  return t;
}

// ---- standard_algebra ---------------------------------------------------------

namespace {
Poly3 var(int i) { return Poly3::variable(i); }
Poly3 cst(const FieldElement& c) { return Poly3(c); }

Component line(Poly3 form, std::array<Poly3, 3> param,
               std::array<Poly3, 3> sigma, int target) {
  Component c;
  c.kind = ComponentKind::Line;
  c.form = std::move(form);
  c.param = std::move(param);
  c.sigma = PolySigma{std::move(sigma), target};
  return c;
}
}  // namespace

std::pair<RelationSpace, GeometricPair> standard_algebra(const AlgebraType& t) {
  using Tag = AlgebraType::Tag;
  const FieldElement one(1), zero(0);
  GeometricPair pair;
  pair.tower = t.tower;
  std::vector<Matrix3> rel;

  switch (t.tag) {
    case Tag::P: {
      rel = {rows({0, 0, 0, 0, 0, 1, 0, -1, 0}),
             rows({0, 0, -1, 0, 0, 0, 1, 0, 0}),
             rows({0, 1, 0, -1, 0, 0, 0, 0, 0})};
      Component c;
      c.kind = ComponentKind::WholePlane;
      c.param = {var(0), var(1), var(2)};
      c.sigma = PolySigma{{var(0), var(1), var(2)}, 0};
      pair.components.push_back(std::move(c));
      break;
    }
    case Tag::S: {
      const FieldElement& al = t.alpha;
      rel = {rows_fe({zero, zero, zero, zero, zero, one, zero, -al, zero}),
             rows_fe({zero, zero, -al, zero, zero, zero, one, zero, zero}),
             rows_fe({zero, one, zero, -al, zero, zero, zero, zero, zero})};
      pair.components.push_back(line(var(0), {cst(zero), var(0), var(1)},
                                     {Poly3(), var(1), var(2) * al}, 0));
      pair.components.push_back(line(var(1), {var(0), cst(zero), var(1)},
                                     {var(0) * al, Poly3(), var(2)}, 1));
      pair.components.push_back(line(var(2), {var(0), var(1), cst(zero)},
                                     {var(0), var(1) * al, Poly3()}, 2));
      break;
    }
    case Tag::Sp: {
      const FieldElement& al = t.alpha;
      FieldElement lam = (al.pow(3) - one) / al;
      rel = {rows_fe({one, zero, zero, zero, zero, one, zero, -al, zero}),
             rows_fe({zero, zero, -al, zero, zero, zero, one, zero, zero}),
             rows_fe({zero, one, zero, -al, zero, zero, zero, zero, zero})};
      pair.components.push_back(line(var(0), {cst(zero), var(0), var(1)},
                                     {Poly3(), var(1), var(2) * al}, 0));
      Component conic;
      conic.kind = ComponentKind::Conic;
      conic.form = var(0) * var(0) - var(1) * var(2) * lam;
      conic.param = {var(0) * var(1) * lam, var(0) * var(0) * lam,
                     var(1) * var(1)};
      conic.sigma = PolySigma{{var(0), var(1) * al, var(2) * al.inverse()}, 1};
      pair.components.push_back(std::move(conic));
      break;
    }
    case Tag::T: {
      FieldElement w = omega_in(t.tower);
      rel = {rows({1, 0, 0, 0, 0, 1, 0, -1, 0}),
             rows({0, 0, -1, 0, 1, 0, 1, 0, 0}),
             rows({0, 1, 0, -1, 0, 0, 0, 0, 0})};
      // lines x + w^k y = 0 carry sigma (a,b,c) -> (a, b, w^k a + c)
      for (int k = 0; k < 3; ++k) {
        FieldElement wk = w.pow(k);
        pair.components.push_back(
            line(var(0) + var(1) * wk,
                 {var(0) * wk, var(0) * (-one), var(1) * wk},
                 {var(0), var(1), var(0) * wk + var(2)}, k));
      }
      break;
    }
    case Tag::Tp: {
      rel = {rows({0, 1, 0, 1, 0, 1, 0, -1, 0}),
             rows({1, 0, -1, 0, 1, -1, 1, -1, 0}),
             rows({0, 1, 0, -1, -1, 0, 0, 0, 0})};
      pair.components.push_back(line(var(1), {var(0), cst(zero), var(1)},
                                     {var(0), Poly3(), var(0) + var(2)}, 0));
      Component conic;
      conic.kind = ComponentKind::Conic;
      conic.form = var(0) * var(0) - var(1) * var(2);
      conic.param = {var(0) * var(1), var(0) * var(0), var(1) * var(1)};
      conic.sigma = PolySigma{
          {var(0) - var(1), var(1), var(1) - var(0) * FieldElement(2) + var(2)},
          1};
      pair.components.push_back(std::move(conic));
      break;
    }
    case Tag::NC: {
      const FieldElement& al = t.alpha;
      FieldElement lam = (al.pow(3) - one) / al;
      rel = {rows_fe({one, zero, zero, zero, zero, one, zero, -al, zero}),
             rows_fe({zero, zero, -al, zero, one, zero, one, zero, zero}),
             rows_fe({zero, one, zero, -al, zero, zero, zero, zero, zero})};
      Component cub;
      cub.kind = ComponentKind::Cubic;
      cub.form = var(0) * var(0) * var(0) + var(1) * var(1) * var(1) -
                 var(0) * var(1) * var(2) * lam;
      cub.param = {var(0) * var(0) * var(1) * lam,
                   var(0) * var(1) * var(1) * lam,
                   var(0) * var(0) * var(0) + var(1) * var(1) * var(1)};
      cub.sigma = PolySigma{{var(0) * var(1), var(1) * var(1) * al,
                             var(1) * var(2) * al.pow(2) - var(0) * var(0)},
                            0};
      pair.components.push_back(std::move(cub));
      break;
    }
    case Tag::CC: {
      rel = {rows({3, 0, 0, 0, 1, 1, 0, -1, 0}),
             rows({0, 1, -1, 1, 0, -1, 1, -1, 0}),
             rows({0, 1, 0, -1, -1, 0, 0, 0, 0})};
      Component cub;
      cub.kind = ComponentKind::Cubic;
      cub.form = var(0) * var(0) * var(0) - var(1) * var(1) * var(2);
      cub.param = {var(0) * var(0) * var(1), var(0) * var(0) * var(0),
                   var(1) * var(1) * var(1)};
      cub.sigma = PolySigma{{var(0) * var(1) - var(1) * var(1), var(1) * var(1),
                             var(0) * var(1) * FieldElement(3) -
                                 var(0) * var(0) * FieldElement(3) -
                                 var(1) * var(1) + var(1) * var(2)},
                            0};
      pair.components.push_back(std::move(cub));
      break;
    }
    case Tag::EC: {
      const FieldElement &a = t.point[0], &b = t.point[1], &c = t.point[2];
      rel = {rows_fe({c, zero, zero, zero, zero, a, zero, b, zero}),
             rows_fe({zero, zero, b, zero, c, zero, a, zero, zero}),
             rows_fe({zero, a, zero, b, zero, zero, zero, zero, c})};
      Component cub;
      cub.kind = ComponentKind::Cubic;
      cub.form = t.curve->form();
      cub.curve = t.curve;
      cub.sigma = CurveSigma{EllipticAut{t.curve->point(t.point), 0}};
      pair.components.push_back(std::move(cub));
      break;
    }
  }
  return {RelationSpace(std::move(rel), t.tower), std::move(pair)};
}

// ---- table2_groups --------------------------------------------------------------

std::pair<GroupDesc, GroupDesc> table2_groups(const AlgebraType& t) {
  using Tag = AlgebraType::Tag;
  using F = GroupDesc::Family;
  switch (t.tag) {
    case Tag::P:
      return {GroupDesc(F::FullPGL3, {}, "PGL3"),
              GroupDesc(F::Trivial, {}, "1")};
    case Tag::S:
      return {GroupDesc(F::DiagTorus2, {cyclic_shift_map()},
                        "diag(1,e,i) x| <cyc>"),
              GroupDesc(F::Trivial, {swap_xy_map()}, "<swap_xy>")};
    case Tag::Sp:
      return {GroupDesc(F::DiagTorus1, {}, "diag(1,e,e^-1)"),
              GroupDesc(F::Trivial, {swap_yz_map()}, "<swap_yz>")};
    case Tag::T:
      return {GroupDesc(F::TypeTZ, {swap_xy_negz_map()},
                        "typeT(e,g,h) x| <swap_xy_negz>"),
              GroupDesc(F::DiagUnit3, {}, "diag(1,1,i)")};
    case Tag::Tp:
      return {GroupDesc(F::UnipShear, {}, "shear(d)"),
              GroupDesc(F::DiagTorus1, {}, "diag(1,e,e^-1)")};
    case Tag::NC: {
      FieldElement w = omega_in(t.tower);
      return {GroupDesc(F::Trivial, {diag_map(FieldElement(1), w, w * w)},
                        "<diag(1,w,w^2)>"),
              GroupDesc(F::Trivial, {swap_xy_map()}, "<swap_xy>")};
    }
    case Tag::CC:
      // the family preserving V(x^3 - y^2 z); the conjugation computation
      // behind the classification applies e^-2 in the last slot
      return {GroupDesc(F::Trivial, {}, "1"),
              GroupDesc(F::DiagInvSquare, {}, "diag(1,e,e^-2)")};
    case Tag::EC: {
      FieldElement w = omega_in(t.tower);
      std::vector<ProjMap> t3{cyclic_shift_map(),
                              diag_map(FieldElement(1), w, w * w)};
      ProjMap tau = tau_generator(t.curve);
      return {GroupDesc(GroupDesc::Family::Trivial, t3, "T[3]"),
              GroupDesc(GroupDesc::Family::Trivial, {tau}, "<tau_E>")};
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace geotwist
