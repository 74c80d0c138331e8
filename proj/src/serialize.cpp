#include "geotwist/serialize.hpp"

namespace geotwist {

Json to_json(const Rational& q) {
  return Json{{"num", q.get_num().get_str()}, {"den", q.get_den().get_str()}};
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  Rational q(mpz_class(j.at("num").get<std::string>()),
             mpz_class(j.at("den").get<std::string>()));
  q.canonicalize();
  return q;
}

namespace {
Json fval_json(const FVal& v) {
  if (v.depth() == 0) return to_json(v.rat());
  Json arr = Json::array();
  for (const auto& c : v.coeffs()) arr.push_back(fval_json(c));
  return arr;
}

FVal fval_from_json(const Json& j, int depth) {
  if (depth == 0) return FVal(rational_from_json(j));
  std::vector<FVal> cs;
  for (const auto& c : j) cs.push_back(fval_from_json(c, depth - 1));
  return FVal(depth, std::move(cs));
}
}  // namespace

Json to_json(const FieldTower& t) {
  Json levels = Json::array();
  for (size_t i = 0; i < t.levels().size(); ++i) {
    const auto& lv = t.levels()[i];
    Json coeffs = Json::array();
    for (const auto& c : lv.minpoly) coeffs.push_back(fval_json(c));
    levels.push_back(Json{{"name", lv.name}, {"minpoly", coeffs}});
  }
  return Json{{"schema", "geotwist/tower-v1"}, {"levels", levels}};
}

TowerPtr tower_from_json(const Json& j) {
  std::vector<FieldTower::Level> levels;
  int depth = 0;
  for (const auto& lv : j.at("levels")) {
    FieldTower::Level level;
    level.name = lv.at("name").get<std::string>();
    for (const auto& c : lv.at("minpoly"))
      level.minpoly.push_back(fval_from_json(c, depth));
    levels.push_back(std::move(level));
    ++depth;
  }
  return FieldTower::make(std::move(levels));
}

Json to_json(const FieldElement& e) { return fval_json(e.value()); }

FieldElement element_from_json(const Json& j, const TowerPtr& tower) {
  int depth = tower ? tower->depth() : 0;
  if (j.is_array() || depth == 0)
    return FieldElement(tower, fval_from_json(j, depth));
  // allow a bare rational for a towered element
  return FieldElement(rational_from_json(j)).promoted_to(tower);
}

Json element_with_tower_json(const FieldElement& e) {
  Json j{{"schema", "geotwist/element-v1"}, {"value", to_json(e)}};
  if (e.tower()) j["tower"] = to_json(*e.tower());
  return j;
}

FieldElement element_with_tower_from_json(const Json& j) {
  TowerPtr t = j.contains("tower") ? tower_from_json(j.at("tower")) : nullptr;
  return element_from_json(j.at("value"), t);
}

Json to_json(const ProjPoint& p) {
  Json arr = Json::array();
  for (int i = 0; i < 3; ++i) arr.push_back(to_json(p[i]));
  return arr;
}

ProjPoint point_from_json(const Json& j, const TowerPtr& tower) {
  Vector3 v;
  for (int i = 0; i < 3; ++i) v(i) = element_from_json(j.at(size_t(i)), tower);
  return ProjPoint(std::move(v));
}

Json to_json(const Matrix3& m) {
  Json rows = Json::array();
  for (int i = 0; i < 3; ++i) {
    Json row = Json::array();
    for (int j2 = 0; j2 < 3; ++j2) row.push_back(to_json(m(i, j2)));
    rows.push_back(row);
  }
  return rows;
}

Matrix3 matrix_from_json(const Json& j, const TowerPtr& tower) {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int c = 0; c < 3; ++c)
      m(i, c) = element_from_json(j.at(size_t(i)).at(size_t(c)), tower);
  return m;
}

Json to_json(const HesseCurve& c) {
  Json j{{"schema", "geotwist/curve-v1"}, {"lambda", to_json(c.lambda())}};
  if (c.tower()) j["tower"] = to_json(*c.tower());
  return j;
}

CurvePtr curve_from_json(const Json& j) {
  TowerPtr t = j.contains("tower") ? tower_from_json(j.at("tower")) : nullptr;
  return HesseCurve::make(element_from_json(j.at("lambda"), t), t);
}

Json to_json(const RelationSpace& r) {
  Json mats = Json::array();
  for (const auto& m : r.basis()) mats.push_back(to_json(m));
  Json j{{"schema", "geotwist/relations-v1"}, {"matrices", mats}};
  if (r.tower()) j["tower"] = to_json(*r.tower());
  return j;
}

RelationSpace relations_from_json(const Json& j) {
  TowerPtr t = j.contains("tower") ? tower_from_json(j.at("tower")) : nullptr;
  std::vector<Matrix3> mats;
  for (const auto& m : j.at("matrices")) mats.push_back(matrix_from_json(m, t));
  return RelationSpace(std::move(mats), t);
}

Json to_json(const Poly3& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    terms.push_back(Json{{"exp", Json::array({e[0], e[1], e[2]})},
                         {"coeff", to_json(c)}});
  }
  return terms;
}

Poly3 poly_from_json(const Json& j, const TowerPtr& tower) {
  Poly3 p;
  for (const auto& t : j) {
    Poly3::Exp e{t.at("exp").at(0).get<int>(), t.at("exp").at(1).get<int>(),
                 t.at("exp").at(2).get<int>()};
    p.add_term(e, element_from_json(t.at("coeff"), tower));
  }
  return p;
}

namespace {
std::string kind_name(ComponentKind k) {
  switch (k) {
    case ComponentKind::WholePlane: return "whole-plane";
    case ComponentKind::Line: return "line";
    case ComponentKind::Conic: return "conic";
    case ComponentKind::Cubic: return "cubic";
  }
  return "?";
}

ComponentKind kind_from_name(const std::string& s) {
  if (s == "whole-plane") return ComponentKind::WholePlane;
  if (s == "line") return ComponentKind::Line;
  if (s == "conic") return ComponentKind::Conic;
  if (s == "cubic") return ComponentKind::Cubic;
  throw std::invalid_argument("unknown component kind: " + s);
}
}  // namespace

Json to_json(const GeometricPair& pair) {
  Json comps = Json::array();
  for (const auto& c : pair.components) {
    Json jc{{"kind", kind_name(c.kind)}, {"form", to_json(c.form)}};
    if (c.param) {
      Json par = Json::array();
      for (const auto& p : *c.param) par.push_back(to_json(p));
      jc["param"] = par;
    }
    if (c.curve) jc["curve"] = to_json(*c.curve);
    if (std::holds_alternative<PolySigma>(c.sigma)) {
      const auto& ps = std::get<PolySigma>(c.sigma);
      Json tri = Json::array();
      for (const auto& p : ps.map) tri.push_back(to_json(p));
      jc["sigma"] = Json{{"poly", tri}, {"target", ps.target}};
    } else {
      const auto& cs = std::get<CurveSigma>(c.sigma);
      jc["sigma"] = Json{{"translate", to_json(cs.aut.translate.point())},
                         {"tau_power", cs.aut.power}};
    }
    comps.push_back(std::move(jc));
  }
  Json j{{"schema", "geotwist/pair-v1"}, {"components", comps}};
  if (pair.tower) j["tower"] = to_json(*pair.tower);
  return j;
}

GeometricPair pair_from_json(const Json& j) {
  GeometricPair pair;
  pair.tower = j.contains("tower") ? tower_from_json(j.at("tower")) : nullptr;
  for (const auto& jc : j.at("components")) {
    Component c;
    c.kind = kind_from_name(jc.at("kind").get<std::string>());
    c.form = poly_from_json(jc.at("form"), pair.tower);
    if (jc.contains("param")) {
      std::array<Poly3, 3> par;
      for (int i = 0; i < 3; ++i)
        par[size_t(i)] = poly_from_json(jc.at("param").at(size_t(i)), pair.tower);
      c.param = par;
    }
    if (jc.contains("curve")) c.curve = curve_from_json(jc.at("curve"));
    const Json& js = jc.at("sigma");
    if (js.contains("poly")) {
      PolySigma ps;
      for (int i = 0; i < 3; ++i)
        ps.map[size_t(i)] = poly_from_json(js.at("poly").at(size_t(i)), pair.tower);
      ps.target = js.at("target").get<int>();
      c.sigma = ps;
    } else {
      if (!c.curve)
        throw std::invalid_argument("translation sigma needs a curve");
      CurveSigma cs{EllipticAut{
          c.curve->point(point_from_json(js.at("translate"), pair.tower)),
          js.at("tau_power").get<long>()}};
      c.sigma = cs;
    }
    pair.components.push_back(std::move(c));
  }
  return pair;
}

namespace {
std::string family_name(GroupDesc::Family f) {
  using F = GroupDesc::Family;
  switch (f) {
    case F::Trivial: return "trivial";
    case F::FullPGL3: return "pgl3";
    case F::DiagTorus2: return "diag(1,e,i)";
    case F::DiagTorus1: return "diag(1,e,e^-1)";
    case F::DiagSquare: return "diag(1,e,e^2)";
    case F::DiagInvSquare: return "diag(1,e,e^-2)";
    case F::DiagUnit3: return "diag(1,1,i)";
    case F::TypeTZ: return "typeT(e,g,h)";
    case F::UnipShear: return "shear(d)";
  }
  return "?";
}
}  // namespace

Json to_json(const GroupDesc& g) {
  Json gens = Json::array();
  for (const auto& m : g.finite_generators()) gens.push_back(to_json(m.matrix()));
  return Json{{"family", family_name(g.family())},
              {"label", g.label()},
              {"finite_generators", gens},
              {"finite_order", g.finite_elements().size()}};
}

Json to_json(const Certificate& c) {
  return Json{{"name", c.name}, {"pass", c.pass}, {"detail", c.detail}};
}

Json to_json(const TwistReport& r) {
  Json fam = Json::array();
  for (const auto& e : r.twist_family) {
    fam.push_back(Json{{"description", e.description},
                       {"tau", to_json(e.tau.matrix())},
                       {"from_continuous_family", e.from_continuous_family}});
  }
  Json certs = Json::array();
  for (const auto& c : r.certificates) certs.push_back(to_json(c));
  Json j{{"schema", "geotwist/report-v1"},
         {"type", r.type},
         {"params", r.params},
         {"z_group", to_json(r.z_group)},
         {"m_group", to_json(r.m_group)},
         {"n_group", to_json(r.n_group)},
         {"flags",
          Json{{"z_equals_m", r.z_equals_m},
               {"m_equals_n", r.m_equals_n},
               {"exceptional", r.exceptional}}},
         {"twist_family", fam},
         {"certificates", certs}};
  if (r.sigma_order) j["sigma_order"] = *r.sigma_order;
  else j["sigma_order"] = nullptr;
  if (r.twist_alg_equals_twist)
    j["flags"]["twist_alg_equals_twist"] = *r.twist_alg_equals_twist;
  else
    j["flags"]["twist_alg_equals_twist"] = nullptr;
  return j;
}

}  // namespace geotwist
