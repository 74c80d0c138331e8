#include "geotwist/quadalg.hpp"

#include <sstream>

namespace geotwist {

RelationSpace::RelationSpace(std::vector<Matrix3> basis, TowerPtr tower)
    : basis_(std::move(basis)), tower_(std::move(tower)) {
  if (basis_.size() != 3)
    throw std::invalid_argument("a relation space needs exactly 3 relations");
  MatrixX f = flat();
  if (rank_of(f) != 3)
    throw std::invalid_argument("relations are not linearly independent");
}

MatrixX RelationSpace::flat() const {
  MatrixX m(3, 9);
  for (int k = 0; k < 3; ++k)
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(k, 3 * i + j) = basis_[size_t(k)](i, j);
  return m;
}

MatrixX RelationSpace::canonical() const {
  MatrixX m = flat();
  rref_in_place(m);
  return m;
}

bool RelationSpace::same_subspace(const RelationSpace& o) const {
  return mat_equal(canonical(), o.canonical());
}

void CheckReport::add(const std::string& name, bool pass,
                      const std::string& detail) {
  certificates.push_back({name, pass, detail});
  ok = ok && pass;
}

std::array<std::array<Poly3, 3>, 3> pencil_matrix(const RelationSpace& r) {
  std::array<std::array<Poly3, 3>, 3> m;
  for (int k = 0; k < 3; ++k) {
    const Matrix3& c = r.basis()[size_t(k)];
    for (int j = 0; j < 3; ++j) {
      Poly3 e;
      for (int i = 0; i < 3; ++i) e = e + Poly3::variable(i, c(i, j));
      m[size_t(k)][size_t(j)] = e;
    }
  }
  return m;
}

Poly3 pencil_determinant(const RelationSpace& r) {
  auto m = pencil_matrix(r);
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

namespace {

Matrix3 pencil_at(const RelationSpace& r, const ProjPoint& p) {
  Matrix3 m;
  for (int k = 0; k < 3; ++k) {
    const Matrix3& c = r.basis()[size_t(k)];
    for (int j = 0; j < 3; ++j) {
      FieldElement e(0);
      for (int i = 0; i < 3; ++i) e = e + p[i] * c(i, j);
      m(k, j) = e;
    }
  }
  return m;
}

// Adjugate of a 3x3 polynomial matrix.
std::array<std::array<Poly3, 3>, 3> poly_adjugate(
    const std::array<std::array<Poly3, 3>, 3>& m) {
  std::array<std::array<Poly3, 3>, 3> a;
  auto co = [&](int i0, int i1, int j0, int j1) {
    return m[size_t(i0)][size_t(j0)] * m[size_t(i1)][size_t(j1)] -
           m[size_t(i0)][size_t(j1)] * m[size_t(i1)][size_t(j0)];
  };
  a[0][0] = co(1, 2, 1, 2);
  a[0][1] = -co(0, 2, 1, 2);
  a[0][2] = co(0, 1, 1, 2);
  a[1][0] = -co(1, 2, 0, 2);
  a[1][1] = co(0, 2, 0, 2);
  a[1][2] = -co(0, 1, 0, 2);
  a[2][0] = co(1, 2, 0, 1);
  a[2][1] = -co(0, 2, 0, 1);
  a[2][2] = co(0, 1, 0, 1);
  return a;
}

}  // namespace

ProjPoint sigma_from_pencil(const RelationSpace& r, const ProjPoint& p) {
  Matrix3 m = pencil_at(r, p);
  if (!det3(m).is_zero()) throw PointOffVariety(p.str());
  Matrix3 adj = mat_adjugate(m);
  for (int j = 0; j < 3; ++j) {
    Vector3 col = adj.col(j);
    if (!col(0).is_zero() || !col(1).is_zero() || !col(2).is_zero())
      return ProjPoint(std::move(col));
  }
  throw SigmaUndetermined(p.str());
}

ProjPoint GeometricPair::sigma_at(int ci, const ProjPoint& p) const {
  const Component& c = components[size_t(ci)];
  if (std::holds_alternative<PolySigma>(c.sigma)) {
    return eval_triple(std::get<PolySigma>(c.sigma).map, p);
  }
  const auto& cs = std::get<CurveSigma>(c.sigma);
  return cs.aut.apply(c.curve->point(p)).point();
}

int GeometricPair::sigma_target(int ci) const {
  const Component& c = components[size_t(ci)];
  if (std::holds_alternative<PolySigma>(c.sigma))
    return std::get<PolySigma>(c.sigma).target;
  return ci;
}

std::vector<ProjPoint> GeometricPair::component_samples(int ci, int count) const {
  const Component& c = components[size_t(ci)];
  std::vector<ProjPoint> out;
  if (c.kind == ComponentKind::Cubic && c.curve) {
    // the translation point itself widens the chord closure on thin towers
    std::vector<CurvePoint> seeds;
    if (std::holds_alternative<CurveSigma>(c.sigma))
      seeds.push_back(std::get<CurveSigma>(c.sigma).aut.translate);
    for (const auto& cp : sample_points(c.curve, count, seeds))
      out.push_back(cp.point());
    return out;
  }
  if (!c.param) throw std::logic_error("component has no parametrization");
  const auto& par = *c.param;
  auto push = [&](const FieldElement& s, const FieldElement& t,
                  const FieldElement& u) {
    Vector3 v;
    v << par[0].eval(s, t, u), par[1].eval(s, t, u), par[2].eval(s, t, u);
    if (v(0).is_zero() && v(1).is_zero() && v(2).is_zero()) return;
    ProjPoint p{std::move(v)};
    for (const auto& q : out)
      if (q == p) return;
    out.push_back(p);
  };
  if (c.kind == ComponentKind::WholePlane) {
    // spread over the plane, not just one line
    for (int k = 0; int(out.size()) < count && k < 4 * count + 4; ++k) {
      push(FieldElement(1), FieldElement(k), FieldElement(k * k + 1));
      push(FieldElement(0), FieldElement(1), FieldElement(k));
      push(FieldElement(1), FieldElement(k + 1), FieldElement(k));
    }
    push(FieldElement(0), FieldElement(0), FieldElement(1));
    return out;
  }
  // deterministic parameter values (s : t) = (1 : k) and (k : 1)
  for (int k = 1; int(out.size()) < count && k < 4 * count + 4; ++k) {
    push(FieldElement(1), FieldElement(k), FieldElement(0));
    if (int(out.size()) >= count) break;
    push(FieldElement(k), FieldElement(1), FieldElement(0));
  }
  return out;
}

// ---- verify_G1 ---------------------------------------------------------------

namespace {

bool forms_match_product(const Poly3& det, const GeometricPair& pair) {
  Poly3 prod(FieldElement(1));
  for (const auto& c : pair.components) prod = prod * c.form;
  return proportional(det, prod);
}

}  // namespace

CheckReport verify_G1(const RelationSpace& r, const GeometricPair& pair) {
  CheckReport rep;
  Poly3 det = pencil_determinant(r);

  bool whole_plane = !pair.components.empty() &&
                     pair.components[0].kind == ComponentKind::WholePlane;
  if (whole_plane) {
    rep.add("variety.whole-plane", pair.components.size() == 1 && det.is_zero(),
            "pencil determinant must vanish identically");
  } else {
    bool vanishing_ok = !det.is_zero() && forms_match_product(det, pair);
    rep.add("variety.factorization", vanishing_ok,
            "det M equals the product of component forms up to scalar");
  }
  if (!rep.ok) return rep;

  auto pm = pencil_matrix(r);
  for (size_t ci = 0; ci < pair.components.size(); ++ci) {
    const Component& c = pair.components[ci];
    std::string tag = "component." + std::to_string(ci);

    if (std::holds_alternative<PolySigma>(c.sigma)) {
      const auto& ps = std::get<PolySigma>(c.sigma);
      std::array<Poly3, 3> par =
          c.param ? *c.param
                  : std::array<Poly3, 3>{Poly3::variable(0), Poly3::variable(1),
                                         Poly3::variable(2)};
      std::array<Poly3, 3> sig = compose_triple(ps.map, par);

      // sigma lands on its target component
      const Poly3& tform = pair.components[size_t(ps.target)].form;
      Poly3 pullback = tform.substitute(sig);
      rep.add(tag + ".sigma-target", pullback.is_zero(),
              "sigma image satisfies the target component form");

      // pencil kernel agrees with sigma symbolically
      std::array<std::array<Poly3, 3>, 3> msub;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
          msub[size_t(a)][size_t(b)] = pm[size_t(a)][size_t(b)].substitute(par);
      auto adj = poly_adjugate(msub);
      bool any_col = false, cols_ok = true;
      for (int j = 0; j < 3; ++j) {
        std::array<Poly3, 3> col{adj[0][size_t(j)], adj[1][size_t(j)],
                                 adj[2][size_t(j)]};
        if (col[0].is_zero() && col[1].is_zero() && col[2].is_zero()) continue;
        any_col = true;
        if (!triples_proportional(col, sig)) cols_ok = false;
      }
      rep.add(tag + ".pencil-sigma", any_col && cols_ok,
              any_col ? "adjugate kernel columns match sigma"
                      : "sigma undetermined along the component");
    } else {
      // smooth cubic handled on chord-generated samples
      const auto& cs = std::get<CurveSigma>(c.sigma);
      auto samples = pair.component_samples(int(ci), 12);
      bool ok = samples.size() >= 10;
      std::string why = ok ? "" : "not enough sample points";
      for (const auto& p : samples) {
        if (!ok) break;
        ProjPoint expect = cs.aut.apply(c.curve->point(p)).point();
        ProjPoint got = sigma_from_pencil(r, p);
        if (!(expect == got)) {
          ok = false;
          why = "pencil sigma differs at " + p.str();
        }
      }
      rep.add(tag + ".pencil-sigma-samples", ok, why);
    }
  }
  return rep;
}

// ---- reconstruct_G2 ----------------------------------------------------------

RelationSpace reconstruct_G2(const GeometricPair& pair) {
  std::vector<VectorX> rows;
  std::vector<std::pair<ProjPoint, ProjPoint>> holdout;

  for (size_t ci = 0; ci < pair.components.size(); ++ci) {
    const Component& c = pair.components[ci];
    if (std::holds_alternative<PolySigma>(c.sigma)) {
      std::array<Poly3, 3> par =
          c.param ? *c.param
                  : std::array<Poly3, 3>{Poly3::variable(0), Poly3::variable(1),
                                         Poly3::variable(2)};
      std::array<Poly3, 3> sig =
          compose_triple(std::get<PolySigma>(c.sigma).map, par);
      // coefficient of each parameter monomial in rho_i * sig_j gives a row
      std::map<Poly3::Exp, VectorX> by_monomial;
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
          Poly3 prod = par[size_t(i)] * sig[size_t(j)];
          for (const auto& [e, coeff] : prod.terms()) {
            auto it = by_monomial.find(e);
            if (it == by_monomial.end()) {
              VectorX row(9);
              for (int k = 0; k < 9; ++k) row(k) = FieldElement(0);
              it = by_monomial.emplace(e, std::move(row)).first;
            }
            it->second(3 * i + j) = it->second(3 * i + j) + coeff;
          }
        }
      for (auto& [e, row] : by_monomial) rows.push_back(row);
    } else {
      const auto& cs = std::get<CurveSigma>(c.sigma);
      auto samples = pair.component_samples(int(ci), 22);
      if (samples.size() < 22)
        throw std::domain_error("not enough exact points on the cubic component");
      for (size_t k = 0; k < samples.size(); ++k) {
        const ProjPoint& p = samples[k];
        ProjPoint q = cs.aut.apply(c.curve->point(p)).point();
        if (k < 12) {
          VectorX row(9);
          for (int i = 0; i < 3; ++i)
            for (int j = 0; j < 3; ++j) row(3 * i + j) = p[i] * q[j];
          rows.push_back(std::move(row));
        } else {
          holdout.emplace_back(p, q);
        }
      }
    }
  }

  MatrixX m(long(rows.size()), 9);
  for (size_t i = 0; i < rows.size(); ++i) m.row(long(i)) = rows[i].transpose();
  MatrixX kb = kernel_basis(m);
  if (kb.cols() != 3) throw G2Error(int(kb.cols()));

  std::vector<Matrix3> basis;
  for (int k = 0; k < 3; ++k) {
    Matrix3 c;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) c(i, j) = kb(3 * i + j, k);
    basis.push_back(std::move(c));
  }
  RelationSpace result(std::move(basis), pair.tower);

  for (const auto& [p, q] : holdout) {
    for (const auto& c : result.basis()) {
      FieldElement v(0);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) v = v + p[i] * c(i, j) * q[j];
      if (!v.is_zero())
        throw std::logic_error("reconstructed relations fail a held-out point");
    }
  }
  return result;
}

// ---- twisting ----------------------------------------------------------------

RelationSpace twist_relations(const RelationSpace& r, const Matrix3& phi) {
  if (det3(phi).is_zero())
    throw std::invalid_argument("twist requires an invertible map");
  // (1 (x) phi^{-1}) acts on coefficient matrices as C -> C * (phi^{-1})^T;
  // the adjugate differs by the determinant, which rescales the whole basis.
  Matrix3 qt = mat_adjugate(phi).transpose();
  std::vector<Matrix3> basis;
  for (const auto& c : r.basis()) basis.push_back(Matrix3(c * qt));
  return RelationSpace(std::move(basis), r.tower());
}

GeometricPair pair_after_linear(const GeometricPair& pair, const ProjMap& tau) {
  GeometricPair out;
  out.tower = pair.tower;
  // component permutation of tau: i -> j iff form_j(tau(.)) ~ form_i
  std::vector<int> perm(pair.components.size(), -1);
  std::array<Poly3, 3> lin;
  for (int i = 0; i < 3; ++i)
    lin[size_t(i)] = Poly3::variable(0, tau.matrix()(i, 0)) +
                     Poly3::variable(1, tau.matrix()(i, 1)) +
                     Poly3::variable(2, tau.matrix()(i, 2));
  for (size_t i = 0; i < pair.components.size(); ++i) {
    if (pair.components[i].kind == ComponentKind::WholePlane) {
      perm[i] = int(i);
      continue;
    }
    for (size_t j = 0; j < pair.components.size(); ++j) {
      Poly3 pull = pair.components[j].form.substitute(lin);
      if (proportional(pull, pair.components[i].form)) {
        perm[i] = int(j);
        break;
      }
    }
    if (perm[i] < 0)
      throw std::domain_error("map does not preserve the point variety");
  }

  for (size_t i = 0; i < pair.components.size(); ++i) {
    const Component& c = pair.components[i];
    Component nc = c;
    if (std::holds_alternative<PolySigma>(c.sigma)) {
      const auto& ps = std::get<PolySigma>(c.sigma);
      PolySigma np;
      np.map = apply_matrix(tau.matrix(), ps.map);
      np.target = perm[size_t(ps.target)];
      nc.sigma = np;
    } else {
      const auto& cs = std::get<CurveSigma>(c.sigma);
      auto t_aut = linear_to_aut(tau, c.curve);
      if (!t_aut)
        throw std::domain_error("map does not restrict to the cubic");
      nc.sigma = CurveSigma{t_aut->after(cs.aut)};
    }
    out.components.push_back(std::move(nc));
  }
  return out;
}

bool geometric_twist_check(const RelationSpace& r, const Matrix3& phi,
                           const GeometricPair& pair) {
  RelationSpace algebraic = twist_relations(r, phi);
  ProjMap tau{Matrix3(phi.transpose())};  // the projectivized dual
  GeometricPair twisted = pair_after_linear(pair, tau);
  RelationSpace geometric = reconstruct_G2(twisted);
  return algebraic.same_subspace(geometric);
}

// ---- truncations ---------------------------------------------------------------

namespace {
long ipow3(int n) {
  long r = 1;
  while (n-- > 0) r *= 3;
  return r;
}

// Relation span rows in degree n for the given relation space.
MatrixX relation_span(const RelationSpace& r, int n) {
  long cols = ipow3(n);
  std::vector<VectorX> rows;
  for (int pos = 0; pos + 2 <= n; ++pos) {
    long left = ipow3(pos), right = ipow3(n - 2 - pos);
    for (const auto& c : r.basis()) {
      for (long u = 0; u < left; ++u) {
        for (long w = 0; w < right; ++w) {
          VectorX row(cols);
          for (long k = 0; k < cols; ++k) row(k) = FieldElement(0);
          for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) {
              if (c(a, b).is_zero()) continue;
              // word = u . a . b . w in base-3, most significant first
              long idx = ((u * 3 + a) * 3 + b) * right + w;
              row(idx) = row(idx) + c(a, b);
            }
          rows.push_back(std::move(row));
        }
      }
    }
  }
  MatrixX m(long(rows.size()), cols);
  for (size_t i = 0; i < rows.size(); ++i) m.row(long(i)) = rows[i].transpose();
  return m;
}
}  // namespace

std::vector<long> truncation_dims(const RelationSpace& r, int d) {
  if (d > 6) throw std::invalid_argument("truncation degree capped at 6");
  std::vector<long> dims{1};
  if (d >= 1) dims.push_back(3);
  for (int n = 2; n <= d; ++n) {
    MatrixX m = relation_span(r, n);
    dims.push_back(ipow3(n) - rank_of(std::move(m)));
  }
  return dims;
}

GradedTruncation::GradedTruncation(const RelationSpace& r, int d) : d_(d) {
  if (d > 6) throw std::invalid_argument("truncation degree capped at 6");
  rel_rref_.resize(size_t(d) + 1);
  rel_pivots_.resize(size_t(d) + 1);
  basis_words_.resize(size_t(d) + 1);
  basis_words_[0] = {0};
  if (d >= 1) basis_words_[1] = {0, 1, 2};
  for (int n = 2; n <= d; ++n) {
    MatrixX m = relation_span(r, n);
    auto pivots = rref_in_place(m);
    // keep only the nonzero rows
    MatrixX rr(long(pivots.size()), m.cols());
    for (size_t i = 0; i < pivots.size(); ++i) rr.row(long(i)) = m.row(long(i));
    std::vector<bool> is_pivot(size_t(m.cols()), false);
    for (int p : pivots) is_pivot[size_t(p)] = true;
    for (long w = 0; w < m.cols(); ++w)
      if (!is_pivot[size_t(w)]) basis_words_[size_t(n)].push_back(w);
    rel_rref_[size_t(n)] = std::move(rr);
    rel_pivots_[size_t(n)] = std::move(pivots);
  }
}

VectorX GradedTruncation::normal_form(int n, const VectorX& v) const {
  VectorX w = v;
  if (n >= 2) {
    const MatrixX& rr = rel_rref_[size_t(n)];
    const auto& pivots = rel_pivots_[size_t(n)];
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      const FieldElement& c = w(pivots[pi]);
      if (c.is_zero()) continue;
      FieldElement f = c;
      for (long j = 0; j < w.size(); ++j) w(j) = w(j) - f * rr(long(pi), j);
    }
  }
  const auto& bw = basis_words_[size_t(n)];
  VectorX out(long(bw.size()));
  for (size_t k = 0; k < bw.size(); ++k) out(long(k)) = w(bw[k]);
  return out;
}

VectorX GradedTruncation::multiply_basis(int m, long ai, int l, long bi) const {
  long wa = basis_words_[size_t(m)][size_t(ai)];
  long wb = basis_words_[size_t(l)][size_t(bi)];
  long idx = wa * ipow3(l) + wb;
  VectorX v(ipow3(m + l));
  for (long k = 0; k < v.size(); ++k) v(k) = FieldElement(0);
  v(idx) = FieldElement(1);
  return normal_form(m + l, v);
}

MatrixX GradedTruncation::degree_matrix(const Matrix3& p, int n) const {
  const auto& bw = basis_words_[size_t(n)];
  MatrixX out(long(bw.size()), long(bw.size()));
  for (size_t col = 0; col < bw.size(); ++col) {
    // expand phi^(x)n applied to the basis word
    long word = bw[col];
    std::vector<int> letters(size_t(n), 0);
    long tmp = word;
    for (int i = n - 1; i >= 0; --i) {
      letters[size_t(i)] = int(tmp % 3);
      tmp /= 3;
    }
    VectorX full(ipow3(n));
    for (long k = 0; k < full.size(); ++k) full(k) = FieldElement(0);
    // iterate over all target words
    long total = ipow3(n);
    for (long t = 0; t < total; ++t) {
      long tt = t;
      std::vector<int> tl(size_t(n), 0);
      for (int i = n - 1; i >= 0; --i) {
        tl[size_t(i)] = int(tt % 3);
        tt /= 3;
      }
      FieldElement coeff(1);
      for (int i = 0; i < n && !coeff.is_zero(); ++i)
        coeff = coeff * p(tl[size_t(i)], letters[size_t(i)]);
      if (!coeff.is_zero()) full(t) = full(t) + coeff;
    }
    out.col(long(col)) = normal_form(n, full);
  }
  return out;
}

std::optional<TwistingWitness> verify_twisting_system(
    const GradedTruncation& t,
    const std::vector<std::vector<MatrixX>>& theta, int d,
    bool require_theta0_identity, bool* theta0_is_identity) {
  int window = int(theta.size());
  auto theta_apply = [&](int n, int deg, const VectorX& v) {
    return VectorX(theta[size_t(n)][size_t(deg - 1)] * v);
  };
  if (theta0_is_identity) *theta0_is_identity = true;
  if (require_theta0_identity || theta0_is_identity) {
    for (int deg = 1; deg <= d && window > 0; ++deg) {
      MatrixX id(t.dim(deg), t.dim(deg));
      id.setZero();
      for (long i = 0; i < t.dim(deg); ++i) id(i, i) = FieldElement(1);
      if (!mat_equal(theta[0][size_t(deg - 1)], id)) {
        if (theta0_is_identity) *theta0_is_identity = false;
        if (require_theta0_identity)
          return TwistingWitness{0, deg, 0, -1, -1};
      }
    }
  }
  for (int m = 1; m < d; ++m) {
    for (int l = 1; m + l <= d; ++l) {
      for (int n = 0; n < window && n + m < window; ++n) {
        for (long ai = 0; ai < t.dim(m); ++ai) {
          for (long bi = 0; bi < t.dim(l); ++bi) {
            // theta_n(a * theta_m(b)) with a the basis element ai
            VectorX tb(t.dim(l));
            VectorX eb(t.dim(l));
            for (long k = 0; k < t.dim(l); ++k) eb(k) = FieldElement(0);
            eb(bi) = FieldElement(1);
            tb = theta_apply(m, l, eb);
            VectorX prod(t.dim(m + l));
            for (long k = 0; k < t.dim(m + l); ++k) prod(k) = FieldElement(0);
            for (long k = 0; k < t.dim(l); ++k) {
              if (tb(k).is_zero()) continue;
              VectorX pk = t.multiply_basis(m, ai, l, k);
              for (long j = 0; j < prod.size(); ++j)
                prod(j) = prod(j) + tb(k) * pk(j);
            }
            VectorX lhs = theta_apply(n, m + l, prod);

            // theta_n(a) * theta_{n+m}(b)
            VectorX ea(t.dim(m));
            for (long k = 0; k < t.dim(m); ++k) ea(k) = FieldElement(0);
            ea(ai) = FieldElement(1);
            VectorX ta = theta_apply(n, m, ea);
            VectorX tnb = theta_apply(n + m, l, eb);
            VectorX rhs(t.dim(m + l));
            for (long k = 0; k < t.dim(m + l); ++k) rhs(k) = FieldElement(0);
            for (long x = 0; x < t.dim(m); ++x) {
              if (ta(x).is_zero()) continue;
              for (long y = 0; y < t.dim(l); ++y) {
                if (tnb(y).is_zero()) continue;
                VectorX pk = t.multiply_basis(m, x, l, y);
                FieldElement c = ta(x) * tnb(y);
                for (long j = 0; j < rhs.size(); ++j)
                  rhs(j) = rhs(j) + c * pk(j);
              }
            }
            if (!mat_equal(lhs, rhs))
              return TwistingWitness{n, m, l, ai, bi};
          }
        }
      }
    }
  }
  return std::nullopt;
}

std::vector<std::vector<MatrixX>> algebraic_twisting_system(
    const GradedTruncation& t, const Matrix3& phi, int window, int d) {
  std::vector<std::vector<MatrixX>> theta;
  std::vector<MatrixX> base;
  for (int deg = 1; deg <= d; ++deg) base.push_back(t.degree_matrix(phi, deg));
  std::vector<MatrixX> cur;
  for (int deg = 1; deg <= d; ++deg) {
    MatrixX id(t.dim(deg), t.dim(deg));
    id.setZero();
    for (long i = 0; i < t.dim(deg); ++i) id(i, i) = FieldElement(1);
    cur.push_back(std::move(id));
  }
  for (int n = 0; n < window; ++n) {
    theta.push_back(cur);
    for (int deg = 1; deg <= d; ++deg)
      cur[size_t(deg - 1)] = MatrixX(base[size_t(deg - 1)] * cur[size_t(deg - 1)]);
  }
  return theta;
}

}  // namespace geotwist
