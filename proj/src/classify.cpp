#include "geotwist/classify.hpp"

#include <sstream>

namespace geotwist {

namespace {

std::array<Poly3, 3> linear_triple(const Matrix3& m) {
  std::array<Poly3, 3> lin;
  for (int i = 0; i < 3; ++i)
    lin[size_t(i)] = Poly3::variable(0, m(i, 0)) + Poly3::variable(1, m(i, 1)) +
                     Poly3::variable(2, m(i, 2));
  return lin;
}

std::array<Poly3, 3> identity_param() {
  return {Poly3::variable(0), Poly3::variable(1), Poly3::variable(2)};
}

std::array<Poly3, 3> component_param(const Component& c) {
  return c.param ? *c.param : identity_param();
}

// Deterministic exact points of the variety, tagged with their component.
std::vector<std::pair<int, ProjPoint>> variety_samples(
    const GeometricPair& pair, int per_component) {
  std::vector<std::pair<int, ProjPoint>> out;
  for (size_t ci = 0; ci < pair.components.size(); ++ci)
    for (const auto& p : pair.component_samples(int(ci), per_component))
      out.emplace_back(int(ci), p);
  return out;
}

std::optional<std::array<ProjPoint, 4>> pick_frame(
    const std::vector<ProjPoint>& pts) {
  size_t n = pts.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          std::array<ProjPoint, 4> f{pts[a], pts[b], pts[c], pts[d]};
          if (general_position(f)) return f;
        }
  return std::nullopt;
}

bool preserves_form(const ProjMap& m, const Poly3& form) {
  Poly3 pulled = form.substitute(linear_triple(m.matrix()));
  return proportional(pulled, form);
}

}  // namespace

ProjPoint RestrictedAut::apply(const GeometricPair& pair, int ci,
                               const ProjPoint& p) const {
  const SigmaMap& sm = maps[size_t(ci)];
  if (std::holds_alternative<PolySigma>(sm))
    return eval_triple(std::get<PolySigma>(sm).map, p);
  const auto& cs = std::get<CurveSigma>(sm);
  return cs.aut.apply(pair.components[size_t(ci)].curve->point(p)).point();
}

std::optional<RestrictedAut> restricts_to_E(const ProjMap& tau,
                                            const GeometricPair& pair) {
  RestrictedAut ra;
  ra.ambient = tau;
  auto lin = linear_triple(tau.matrix());
  std::vector<bool> hit(pair.components.size(), false);
  for (size_t i = 0; i < pair.components.size(); ++i) {
    const Component& ci = pair.components[i];
    if (ci.kind == ComponentKind::WholePlane) {
      ra.permutation.push_back(int(i));
      ra.maps.push_back(PolySigma{lin, int(i)});
      hit[i] = true;
      continue;
    }
    // tau maps component i onto j iff form_j pulls back to a multiple of form_i
    int target = -1;
    for (size_t j = 0; j < pair.components.size(); ++j) {
      if (pair.components[j].kind == ComponentKind::WholePlane) continue;
      Poly3 pull = pair.components[j].form.substitute(lin);
      if (proportional(pull, ci.form)) {
        target = int(j);
        break;
      }
    }
    if (target < 0 || hit[size_t(target)]) return std::nullopt;
    hit[size_t(target)] = true;
    ra.permutation.push_back(target);
    ra.maps.push_back(PolySigma{lin, target});
  }
  return ra;
}

RestrictedAut sigma_of(const GeometricPair& pair) {
  RestrictedAut ra;
  for (size_t i = 0; i < pair.components.size(); ++i) {
    ra.maps.push_back(pair.components[i].sigma);
    ra.permutation.push_back(pair.sigma_target(int(i)));
  }
  return ra;
}

std::optional<ProjMap> extends_to_P2(const RestrictedAut& f,
                                     const GeometricPair& pair) {
  auto samples = variety_samples(pair, 8);
  std::vector<ProjPoint> pts;
  for (auto& [ci, p] : samples) pts.push_back(p);
  auto frame = pick_frame(pts);
  if (!frame)
    throw std::domain_error("variety has no four points in general position");
  std::array<ProjPoint, 4> images{};
  for (int k = 0; k < 4; ++k) {
    const ProjPoint& p = (*frame)[size_t(k)];
    int ci = -1;
    for (auto& [c, q] : samples)
      if (q == p) {
        ci = c;
        break;
      }
    images[size_t(k)] = f.apply(pair, ci, p);
  }
  std::optional<ProjMap> fit;
  try {
    fit = fit_proj_map(*frame, images);
  } catch (const std::invalid_argument&) {
    return std::nullopt;
  }
  if (!fit) return std::nullopt;

  for (size_t i = 0; i < pair.components.size(); ++i) {
    const Component& c = pair.components[i];
    const SigmaMap& sm = f.maps[i];
    if (std::holds_alternative<PolySigma>(sm)) {
      auto par = component_param(c);
      auto lhs = apply_matrix(fit->matrix(), par);
      auto rhs = compose_triple(std::get<PolySigma>(sm).map, par);
      if (!triples_proportional(lhs, rhs)) return std::nullopt;
    } else {
      if (!preserves_form(*fit, c.form)) return std::nullopt;
      for (const auto& p : pair.component_samples(int(i), 10)) {
        ProjPoint want = f.apply(pair, int(i), p);
        if (!(fit->apply(p) == want)) return std::nullopt;
      }
    }
  }
  return fit;
}

namespace {

// Verifies g_left ∘ sigma == sigma ∘ g_right as maps on E, with the two
// ambient linear maps permuting components by perm_left/perm_right.
bool commutes_with_sigma(const GeometricPair& pair, const ProjMap& g_left,
                         const std::vector<int>& perm_left,
                         const ProjMap& g_right,
                         const std::vector<int>& perm_right) {
  for (size_t i = 0; i < pair.components.size(); ++i) {
    const Component& c = pair.components[i];
    if (std::holds_alternative<PolySigma>(c.sigma)) {
      auto par = component_param(c);
      int j = perm_right[i];
      const auto& sig_j = std::get<PolySigma>(pair.components[size_t(j)].sigma);
      auto lhs = compose_triple(sig_j.map, apply_matrix(g_right.matrix(), par));
      const auto& sig_i = std::get<PolySigma>(c.sigma);
      auto rhs = apply_matrix(g_left.matrix(), compose_triple(sig_i.map, par));
      if (!triples_proportional(lhs, rhs)) return false;
      int via_lhs = pair.sigma_target(j);
      int via_rhs = perm_left[size_t(pair.sigma_target(int(i)))];
      if (via_lhs != via_rhs) return false;
    } else {
      const auto& cs = std::get<CurveSigma>(c.sigma);
      for (const auto& p : pair.component_samples(int(i), 10)) {
        CurvePoint cp = c.curve->point(p);
        ProjPoint lhs = cs.aut.apply(c.curve->point(g_right.apply(p))).point();
        ProjPoint rhs = g_left.apply(cs.aut.apply(cp).point());
        if (!(lhs == rhs)) return false;
      }
    }
  }
  return true;
}

}  // namespace

bool in_Z(const ProjMap& tau, const GeometricPair& pair) {
  auto ra = restricts_to_E(tau, pair);
  if (!ra) return false;
  return commutes_with_sigma(pair, tau, ra->permutation, tau, ra->permutation);
}

bool in_N(const ProjMap& tau, const GeometricPair& pair) {
  auto ra = restricts_to_E(tau, pair);
  if (!ra) return false;
  // Fit an ambient candidate for sigma tau sigma^{-1} from graph points
  // (sigma(r), sigma(tau(r))), then verify M sigma = sigma tau exactly.
  auto samples = variety_samples(pair, 8);
  std::vector<ProjPoint> dom, img;
  RestrictedAut sig = sigma_of(pair);
  for (auto& [ci, r] : samples) {
    dom.push_back(sig.apply(pair, ci, r));
    img.push_back(sig.apply(pair, ra->permutation[size_t(ci)], tau.apply(r)));
  }
  size_t n = dom.size();
  for (size_t a = 0; a < n; ++a)
    for (size_t b = a + 1; b < n; ++b)
      for (size_t c = b + 1; c < n; ++c)
        for (size_t d = c + 1; d < n; ++d) {
          std::array<ProjPoint, 4> f{dom[a], dom[b], dom[c], dom[d]};
          if (!general_position(f)) continue;
          std::array<ProjPoint, 4> g{img[a], img[b], img[c], img[d]};
          std::optional<ProjMap> m;
          try {
            m = fit_proj_map(f, g);
          } catch (const std::invalid_argument&) {
            continue;
          }
          if (!m) return false;
          auto mra = restricts_to_E(*m, pair);
          if (!mra) return false;
          return commutes_with_sigma(pair, *m, mra->permutation, tau,
                                     ra->permutation);
        }
  return false;
}

// ---- in_M -----------------------------------------------------------------

namespace {

bool is_translation_pair(const GeometricPair& pair) {
  return pair.components.size() == 1 &&
         pair.components[0].kind == ComponentKind::Cubic &&
         pair.components[0].curve != nullptr &&
         std::holds_alternative<CurveSigma>(pair.components[0].sigma);
}

// sigma^{-1} through the reverse pencil: the preimage of q spans the kernel
// of the matrix with rows (C_k q)^T.
ProjPoint sigma_inverse_via_pencil(const RelationSpace& r, const ProjPoint& q) {
  Matrix3 m;
  for (int k = 0; k < 3; ++k) {
    Vector3 col = r.basis()[size_t(k)] * q.coords();
    for (int j = 0; j < 3; ++j) m(k, j) = col(j);
  }
  if (!det3(m).is_zero()) throw PointOffVariety(q.str());
  Matrix3 adj = mat_adjugate(m);
  for (int j = 0; j < 3; ++j) {
    Vector3 col = adj.col(j);
    if (!col(0).is_zero() || !col(1).is_zero() || !col(2).is_zero())
      return ProjPoint(std::move(col));
  }
  throw SigmaUndetermined(q.str());
}

MResult in_M_bounded(const ProjMap& tau, const GeometricPair& pair, long bound,
                     long* failing_i) {
  auto ra = restricts_to_E(tau, pair);
  if (!ra) return MResult::False;
  RestrictedAut sig = sigma_of(pair);
  RelationSpace rel = reconstruct_G2(pair);

  auto locate = [&](const ProjPoint& p) {
    for (size_t ci = 0; ci < pair.components.size(); ++ci) {
      const Component& c = pair.components[ci];
      if (c.kind == ComponentKind::WholePlane ||
          c.form.eval(p.coords()).is_zero())
        return int(ci);
    }
    throw PointOffVariety(p.str());
  };
  auto sigma_fwd = [&](const ProjPoint& p) {
    return sig.apply(pair, locate(p), p);
  };
  auto tau_sigma = [&](const ProjPoint& p) { return tau.apply(sigma_fwd(p)); };

  auto samples = variety_samples(pair, 8);
  std::vector<ProjPoint> base;
  for (auto& [ci, p] : samples) base.push_back(p);

  auto check_extends = [&](const std::vector<ProjPoint>& d,
                           const std::vector<ProjPoint>& m) {
    size_t n = d.size();
    for (size_t a = 0; a < n; ++a)
      for (size_t b = a + 1; b < n; ++b)
        for (size_t c = b + 1; c < n; ++c)
          for (size_t e = c + 1; e < n; ++e) {
            std::array<ProjPoint, 4> f{d[a], d[b], d[c], d[e]};
            if (!general_position(f)) continue;
            std::array<ProjPoint, 4> g{m[a], m[b], m[c], m[e]};
            std::optional<ProjMap> fit;
            try {
              fit = fit_proj_map(f, g);
            } catch (const std::invalid_argument&) {
              continue;
            }
            if (!fit) return false;
            for (size_t k = 0; k < n; ++k)
              if (!(fit->apply(d[k]) == m[k])) return false;
            return true;
          }
    return false;
  };

  for (long i = 1; i <= bound; ++i) {
    // positive side: (tau sigma)^i sigma^{-i} maps sigma^i(r) to (tau sigma)^i(r)
    std::vector<ProjPoint> dom, img;
    for (const auto& r : base) {
      ProjPoint x = r, y = r;
      for (long k = 0; k < i; ++k) x = sigma_fwd(x);
      for (long k = 0; k < i; ++k) y = tau_sigma(y);
      dom.push_back(x);
      img.push_back(y);
    }
    // negative side: sigma^{-i} (tau sigma)^i (the inverse of the i -> -i map)
    std::vector<ProjPoint> himg;
    for (const auto& y0 : img) {
      ProjPoint y = y0;
      for (long k = 0; k < i; ++k) y = sigma_inverse_via_pencil(rel, y);
      himg.push_back(y);
    }
    if (!check_extends(dom, img) || !check_extends(base, himg)) {
      if (failing_i) *failing_i = i;
      return MResult::False;
    }
  }
  return MResult::TrueWithinBound;
}

// The torsion criterion deciding membership for translation pairs.
MResult ec_membership(const ProjMap& tau, const CurvePtr& curve,
                      const CurvePoint& p) {
  auto dec = linear_to_aut(tau, curve);
  if (!dec) return MResult::False;
  ProjMap taui = tau_generator(curve).power(dec->power);
  CurvePoint tip = curve->point(taui.apply(p.point()));
  CurvePoint diff = group_add(p, negate(tip));
  return scalar_mul(3, diff) == curve->zero() ? MResult::True : MResult::False;
}

}  // namespace

MResult in_M(const ProjMap& tau, const GeometricPair& pair, long bound,
             const std::optional<AlgebraType>& catalog_type, long* failing_i) {
  using Tag = AlgebraType::Tag;
  if (catalog_type) {
    const AlgebraType& t = *catalog_type;
    auto ra = restricts_to_E(tau, pair);
    if (!ra) return MResult::False;
    switch (t.tag) {
      case Tag::P:
        return MResult::True;
      case Tag::T:
      case Tag::Tp:
      case Tag::CC:
        return in_Z(tau, pair) ? MResult::True : MResult::False;
      case Tag::S:
      case Tag::Sp:
      case Tag::NC: {
        bool sigma6 = root_of_unity_order(t.alpha, 6).has_value();
        if (sigma6) return MResult::True;  // M = Aut(P^2, E)
        auto [z, g] = table2_groups(t);
        return z.contains(tau) ? MResult::True : MResult::False;
      }
      case Tag::EC:
        return ec_membership(tau, t.curve, t.curve->point(t.point));
    }
  }
  if (is_translation_pair(pair)) {
    const Component& c = pair.components[0];
    const auto& cs = std::get<CurveSigma>(c.sigma);
    if (cs.aut.power == 0)
      return ec_membership(tau, c.curve, cs.aut.translate);
  }
  return in_M_bounded(tau, pair, bound, failing_i);
}

// ---- classification branches -------------------------------------------------

namespace {

GroupDesc t3_group(const AlgebraType& t, const std::string& label) {
  FieldElement w = omega_in(t.tower);
  return GroupDesc(GroupDesc::Family::Trivial,
                   {cyclic_shift_map(), diag_map(FieldElement(1), w, w * w)},
                   label);
}

GroupDesc t3_with_tau(const AlgebraType& t, long tau_pow,
                      const std::string& label) {
  FieldElement w = omega_in(t.tower);
  ProjMap tau = tau_generator(t.curve).power(tau_pow);
  return GroupDesc(GroupDesc::Family::Trivial,
                   {cyclic_shift_map(), diag_map(FieldElement(1), w, w * w), tau},
                   label);
}

std::optional<long> sigma_order_of(const AlgebraType& t) {
  using Tag = AlgebraType::Tag;
  switch (t.tag) {
    case Tag::P:
      return 1;
    case Tag::S:
    case Tag::Sp:
    case Tag::NC:
      return root_of_unity_order(t.alpha, 12);
    case Tag::T:
    case Tag::Tp:
    case Tag::CC:
      return std::nullopt;  // infinite order
    case Tag::EC: {
      CurvePoint p = t.curve->point(t.point);
      CurvePoint acc = p;
      for (long n = 1; n <= 12; ++n) {
        if (acc == t.curve->zero()) return n;
        acc = group_add(acc, p);
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

struct Groups {
  GroupDesc z, m;
  bool exceptional = false;
};

Groups classification_groups(const AlgebraType& t) {
  using Tag = AlgebraType::Tag;
  using F = GroupDesc::Family;
  Groups gs;
  auto [z_table, g_table] = table2_groups(t);
  std::optional<long> so = sigma_order_of(t);
  bool sigma2 = so && (*so == 1 || *so == 2);
  bool sigma6 = so && *so <= 6 && 6 % *so == 0;

  switch (t.tag) {
    case Tag::P:
      gs.z = GroupDesc(F::FullPGL3, {}, "PGL3");
      gs.m = gs.z;
      break;
    case Tag::S: {
      GroupDesc full(F::DiagTorus2, {cyclic_shift_map(), swap_xy_map()},
                     "diag(1,e,i) x| <cyc,swap_xy>");
      gs.z = sigma2 ? full : z_table;
      gs.m = sigma6 ? full : z_table;
      break;
    }
    case Tag::Sp: {
      GroupDesc full(F::DiagTorus1, {swap_yz_map()},
                     "diag(1,e,e^-1) x| <swap_yz>");
      gs.z = sigma2 ? full : z_table;
      gs.m = sigma6 ? full : z_table;
      break;
    }
    case Tag::NC: {
      FieldElement w = omega_in(t.tower);
      GroupDesc full(F::Trivial,
                     {diag_map(FieldElement(1), w, w * w), swap_xy_map()},
                     "<diag(1,w,w^2)> x| <swap_xy>");
      gs.z = sigma2 ? full : z_table;
      gs.m = sigma6 ? full : z_table;
      break;
    }
    case Tag::T:
    case Tag::Tp:
      gs.z = z_table;
      gs.m = z_table;
      break;
    case Tag::CC:
      gs.z = GroupDesc(F::Trivial, {}, "1");
      gs.m = gs.z;
      break;
    case Tag::EC: {
      CurvePoint p = t.curve->point(t.point);
      const CurvePoint o = t.curve->zero();
      bool in2 = scalar_mul(2, p) == o;
      bool in6 = scalar_mul(6, p) == o;
      FieldElement j = j_invariant(*t.curve);
      GroupDesc t3 = t3_group(t, "T[3]");
      GroupDesc full = t3_with_tau(t, 1, "T[3] x| <tau_E>");
      if (!j.is_zero() && !(j == FieldElement(1728))) {
        gs.z = in2 ? full : t3;
        gs.m = in6 ? full : t3;
      } else if (j.is_zero()) {
        gs.exceptional = in_exceptional(p);
        gs.z = in2 ? t3_with_tau(t, 3, "T[3] x| <tau_E^3>") : t3;
        if (gs.exceptional)
          gs.m = t3_with_tau(t, 2, "T[3] x| <tau_E^2>");
        else if (in6)
          gs.m = t3_with_tau(t, 3, "T[3] x| <tau_E^3>");
        else
          gs.m = t3;
      } else {
        // j = 1728 with lambda = 1 + sqrt(3)
        CurvePoint special = t.curve->point(
            ProjPoint(FieldElement(1), FieldElement(1), t.curve->lambda()));
        if (scalar_mul(2, special) != o)
          throw std::logic_error("(1,1,lambda) must be 2-torsion");
        if (in2)
          gs.z = (p == special) ? full : t3_with_tau(t, 2, "T[3] x| <tau_E^2>");
        else
          gs.z = t3;
        if (in6) {
          bool in_f = false;  // F = <(1,1,lambda)> + E[3]
          for (const auto& q3 : torsion_points(t.curve, 3).points)
            if (p == q3 || p == group_add(special, q3)) in_f = true;
          gs.m = in_f ? full : t3_with_tau(t, 2, "T[3] x| <tau_E^2>");
        } else {
          gs.m = t3;
        }
      }
      break;
    }
  }
  return gs;
}

}  // namespace

TwistReport classify(const AlgebraType& t) {
  TwistReport rep;
  rep.type = t.tag_name();
  rep.params = t.params_str();
  rep.sigma_order = sigma_order_of(t);

  Groups gs = classification_groups(t);
  rep.z_group = gs.z;
  rep.m_group = gs.m;
  rep.n_group = gs.m;
  rep.exceptional = gs.exceptional;
  rep.z_equals_m = rep.z_group == rep.m_group;
  rep.m_equals_n = true;
  if (!rep.exceptional) rep.twist_alg_equals_twist = rep.z_equals_m;

  auto [rel, pair] = standard_algebra(t);
  (void)rel;
  for (const auto& g : rep.z_group.finite_generators()) {
    bool ok = in_Z(g, pair);
    rep.certificates.push_back(
        {"z-generator " + g.str(), ok, ok ? "" : "in_Z failed"});
  }
  for (const auto& g : rep.m_group.finite_generators()) {
    bool ok = in_N(g, pair);
    rep.certificates.push_back(
        {"m-generator " + g.str(), ok, ok ? "" : "in_N failed"});
  }
  rep.twist_family = twist_family(t);
  return rep;
}

std::vector<TwistFamilyEntry> twist_family(const AlgebraType& t) {
  std::vector<TwistFamilyEntry> out;
  auto [rel, pair] = standard_algebra(t);
  (void)rel;
  GroupDesc m = classification_groups(t).m;

  for (const auto& g : m.finite_generators()) {
    TwistFamilyEntry e;
    e.tau = g;
    e.description = "finite generator " + g.str();
    e.pair = pair_after_linear(pair, g);
    out.push_back(std::move(e));
  }
  if (m.family() != GroupDesc::Family::Trivial) {
    for (const auto& s : m.family_samples(t.tower, 3)) {
      if (s.is_identity()) continue;
      TwistFamilyEntry e;
      e.tau = s;
      e.description = "family sample (" + m.label() + ") " + s.str();
      e.from_continuous_family = true;
      e.pair = pair_after_linear(pair, s);
      out.push_back(std::move(e));
    }
  }
  if (out.empty()) {
    TwistFamilyEntry e;
    e.description = "identity (singleton family)";
    e.pair = pair;
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<OracleRow> brute_force_MN_oracle(const AlgebraType& ec_type,
                                             long i_limit) {
  if (ec_type.tag != AlgebraType::Tag::EC)
    throw std::invalid_argument("oracle runs on Type EC only");
  const CurvePtr& curve = ec_type.curve;
  CurvePoint p = curve->point(ec_type.point);
  auto [rel, pair] = standard_algebra(ec_type);
  (void)rel;
  TorsionSet e3 = torsion_points(curve, 3);
  ProjMap tau = tau_generator(curve);
  long ord = tau_order(curve);
  if (i_limit < 0 || i_limit > ord) i_limit = ord;

  std::vector<OracleRow> rows;
  for (size_t qi = 0; qi < e3.points.size(); ++qi) {
    ProjMap tq = translation_matrix(e3.points[qi]);
    for (long i = 0; i < i_limit; ++i) {
      OracleRow row;
      row.q_index = long(qi);
      row.i = i;
      ProjMap cand = tq.compose(tau.power(i));
      row.z_definitional = in_Z(cand, pair);
      row.n_definitional = in_N(cand, pair);
      CurvePoint tip = curve->point(tau.power(i).apply(p.point()));
      CurvePoint diff = group_add(p, negate(tip));
      row.z_torsion = diff == curve->zero();
      row.n_torsion = scalar_mul(3, diff) == curve->zero();
      rows.push_back(row);
    }
  }
  return rows;
}

}  // namespace geotwist
