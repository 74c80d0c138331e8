#include "geotwist/field.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

namespace geotwist {

Rational parse_rational(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) {
    throw std::invalid_argument("bad rational: " + s);
  }
  q.canonicalize();
  return q;
}

std::string rational_str(const Rational& q) { return q.get_str(); }

bool FVal::operator==(const FVal& o) const {
  if (depth_ != o.depth_) return false;
  if (depth_ == 0) return rat_ == o.rat_;
  return coeffs_ == o.coeffs_;
}

namespace {

// ---- depth-generic value arithmetic -------------------------------------
// All helpers take the tower so level degrees and minimal polynomials are
// available; `d` is the depth of the operands.

FVal v_zero(const FieldTower& t, int d) {
  if (d == 0) return FVal(Rational(0));
  std::vector<FVal> c(t.levels()[d - 1].degree(), v_zero(t, d - 1));
  return FVal(d, std::move(c));
}

FVal v_from_rat(const FieldTower& t, int d, const Rational& q) {
  if (d == 0) return FVal(q);
  FVal z = v_zero(t, d);
  z.coeffs()[0] = v_from_rat(t, d - 1, q);
  return z;
}

// Lifts a depth-d value to depth dd >= d.
FVal v_lift(const FieldTower& t, const FVal& v, int dd) {
  if (v.depth() == dd) return v;
  FVal z = v_zero(t, dd);
  z.coeffs()[0] = v_lift(t, v, dd - 1);
  return z;
}

bool v_is_zero(const FVal& v) {
  if (v.depth() == 0) return v.rat() == 0;
  return std::all_of(v.coeffs().begin(), v.coeffs().end(),
                     [](const FVal& c) { return v_is_zero(c); });
}

FVal v_add(const FieldTower& t, const FVal& a, const FVal& b) {
  if (a.depth() == 0) return FVal(a.rat() + b.rat());
  std::vector<FVal> c(a.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i)
    c[i] = v_add(t, a.coeffs()[i], b.coeffs()[i]);
  return FVal(a.depth(), std::move(c));
}

FVal v_neg(const FieldTower& t, const FVal& a) {
  if (a.depth() == 0) return FVal(-a.rat());
  std::vector<FVal> c(a.coeffs().size());
  for (size_t i = 0; i < c.size(); ++i) c[i] = v_neg(t, a.coeffs()[i]);
  return FVal(a.depth(), std::move(c));
}

FVal v_sub(const FieldTower& t, const FVal& a, const FVal& b) {
  return v_add(t, a, v_neg(t, b));
}

FVal v_mul(const FieldTower& t, const FVal& a, const FVal& b) {
  if (a.depth() == 0) return FVal(a.rat() * b.rat());
  int d = a.depth();
  int deg = t.levels()[d - 1].degree();
  // Convolution, then reduction modulo the monic minimal polynomial.
  std::vector<FVal> prod(2 * deg - 1, v_zero(t, d - 1));
  for (int i = 0; i < deg; ++i) {
    if (v_is_zero(a.coeffs()[i])) continue;
    for (int j = 0; j < deg; ++j) {
      if (v_is_zero(b.coeffs()[j])) continue;
      prod[i + j] =
          v_add(t, prod[i + j], v_mul(t, a.coeffs()[i], b.coeffs()[j]));
    }
  }
  const auto& mp = t.levels()[d - 1].minpoly;  // length deg+1, monic
  for (int k = int(prod.size()) - 1; k >= deg; --k) {
    if (v_is_zero(prod[k])) continue;
    FVal lead = prod[k];
    // prod -= lead * x^(k-deg) * minpoly
    for (int j = 0; j <= deg; ++j) {
      prod[k - deg + j] =
          v_sub(t, prod[k - deg + j], v_mul(t, lead, mp[j]));
    }
  }
  prod.resize(deg);
  return FVal(d, std::move(prod));
}

FVal v_inv(const FieldTower& t, const FVal& a);

FVal v_div(const FieldTower& t, const FVal& a, const FVal& b) {
  if (a.depth() == 0) {
    if (b.rat() == 0) throw DivisionByZero();
    return FVal(a.rat() / b.rat());
  }
  return v_mul(t, a, v_inv(t, b));
}

// Polynomial helpers over depth-(d) values, used by the xgcd inversion.
using VPoly = std::vector<FVal>;

int vp_deg(const VPoly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (!v_is_zero(p[i])) return i;
  return -1;
}

// Extended Euclid over K_d[x] to invert an element of K_{d+1}.
FVal v_inv(const FieldTower& t, const FVal& a) {
  if (a.depth() == 0) {
    if (a.rat() == 0) throw DivisionByZero();
    return FVal(Rational(1) / a.rat());
  }
  if (v_is_zero(a)) throw DivisionByZero();
  int d = a.depth();
  int cd = d - 1;  // coefficient depth
  const auto& mp = t.levels()[d - 1].minpoly;

  VPoly r0(mp.begin(), mp.end());      // minimal polynomial
  VPoly r1 = a.coeffs();               // the element as a polynomial
  VPoly s0{v_zero(t, cd)};             // Bezout coefficient for r w.r.t. a
  VPoly s1{v_from_rat(t, cd, 1)};

  while (vp_deg(r1) > 0) {
    // r0 = q*r1 + rem (monic-free long division with exact field inverses)
    int d1 = vp_deg(r1);
    FVal lead_inv = v_inv(t, r1[d1]);
    VPoly rem = r0;
    VPoly q(std::max<int>(vp_deg(r0) - d1 + 1, 1), v_zero(t, cd));
    for (int k = vp_deg(rem); k >= d1; --k) {
      if (v_is_zero(rem[k])) continue;
      FVal c = v_mul(t, rem[k], lead_inv);
      q[k - d1] = c;
      for (int j = 0; j <= d1; ++j) {
        rem[k - d1 + j] = v_sub(t, rem[k - d1 + j], v_mul(t, c, r1[j]));
      }
    }
    // s_next = s0 - q*s1
    VPoly snew(std::max(s0.size(), q.size() + s1.size()), v_zero(t, cd));
    for (size_t i = 0; i < s0.size(); ++i) snew[i] = s0[i];
    for (size_t i = 0; i < q.size(); ++i) {
      if (v_is_zero(q[i])) continue;
      for (size_t j = 0; j < s1.size(); ++j) {
        snew[i + j] = v_sub(t, snew[i + j], v_mul(t, q[i], s1[j]));
      }
    }
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(snew);
  }
  if (vp_deg(r1) != 0) {
    // gcd has positive degree: the declared minimal polynomial was reducible.
    throw std::domain_error("element not invertible; reducible minimal polynomial?");
  }
  FVal g_inv = v_inv(t, r1[0]);
  // inverse = s1 * g_inv reduced into the field
  int deg = t.levels()[d - 1].degree();
  std::vector<FVal> out(deg, v_zero(t, cd));
  for (int i = 0; i < deg && i < int(s1.size()); ++i)
    out[i] = v_mul(t, s1[i], g_inv);
  return FVal(d, std::move(out));
}

std::string v_str(const FieldTower& t, const FVal& v) {
  if (v.depth() == 0) return v.rat().get_str();
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < v.coeffs().size(); ++i) {
    if (i) os << ",";
    os << v_str(t, v.coeffs()[i]);
  }
  os << "]";
  return os.str();
}

// Renders the value as an expression in the generator names, parseable by
// the scalar mini-grammar (e.g. "-c2", "1+r3", "(-1-w)*c2").
std::string v_str_named(const FieldTower& t, const FVal& v) {
  if (v.depth() == 0) return v.rat().get_str();
  const std::string& g = t.levels()[size_t(v.depth() - 1)].name;
  std::vector<std::string> terms;
  for (size_t i = 0; i < v.coeffs().size(); ++i) {
    const FVal& c = v.coeffs()[i];
    if (v_is_zero(c)) continue;
    std::string cs = v_str_named(t, c);
    std::string power;
    if (i == 1) power = g;
    else if (i > 1) power = g + "^" + std::to_string(i);
    if (power.empty()) {
      terms.push_back(cs);
      continue;
    }
    bool composite = cs.find_first_of("+-", 1) != std::string::npos ||
                     cs.find('*') != std::string::npos;
    if (cs == "1") terms.push_back(power);
    else if (cs == "-1") terms.push_back("-" + power);
    else if (composite) terms.push_back("(" + cs + ")*" + power);
    else terms.push_back(cs + "*" + power);
  }
  if (terms.empty()) return "0";
  std::string out = terms[0];
  for (size_t i = 1; i < terms.size(); ++i) {
    if (!terms[i].empty() && terms[i][0] == '-') out += terms[i];
    else out += "+" + terms[i];
  }
  return out;
}

}  // namespace

// ---- FieldTower ----------------------------------------------------------

TowerPtr FieldTower::rationals() {
  static TowerPtr q = make({});
  return q;
}

TowerPtr FieldTower::make(std::vector<Level> levels) {
  auto t = std::make_shared<FieldTower>();
  std::ostringstream key;
  for (size_t i = 0; i < levels.size(); ++i) {
    const auto& lv = levels[i];
    if (lv.degree() < 2)
      throw std::invalid_argument("minimal polynomial degree must be >= 2");
    for (const auto& c : lv.minpoly) {
      if (c.depth() != int(i))
        throw std::invalid_argument(
            "minimal polynomial coefficients must live in the previous level");
    }
    // The depth-i unit needs levels 0..i-1, which are already in place.
    if (!(lv.minpoly.back() == v_from_rat(*t, int(i), 1)))
      throw std::invalid_argument("minimal polynomial must be monic");
    t->levels_.push_back(lv);
    key << lv.name << "~";
    for (const auto& c : lv.minpoly) key << v_str(*t, c) << ";";
    key << "|";
  }
  t->key_ = key.str();
  return t;
}

int FieldTower::dimension() const {
  int n = 1;
  for (const auto& lv : levels_) n *= lv.degree();
  return n;
}

int FieldTower::level_index(const std::string& name) const {
  for (size_t i = 0; i < levels_.size(); ++i)
    if (levels_[i].name == name) return int(i);
  return -1;
}

// ---- FieldElement --------------------------------------------------------

FieldElement::FieldElement(TowerPtr t, FVal v)
    : tower_(std::move(t)), val_(std::move(v)) {
  if (tower_ && val_.depth() != tower_->depth())
    val_ = v_lift(*tower_, val_, tower_->depth());
}

FieldElement FieldElement::generator(const TowerPtr& t, int level) {
  if (!t || level < 0 || level >= t->depth())
    throw std::invalid_argument("generator level out of range");
  FVal g = v_zero(*t, level + 1);
  g.coeffs()[1] = v_from_rat(*t, level, 1);
  return FieldElement(t, v_lift(*t, g, t->depth()));
}

FieldElement FieldElement::zero(const TowerPtr& t) {
  if (!t || t->depth() == 0) return FieldElement(0);
  return FieldElement(t, v_zero(*t, t->depth()));
}

FieldElement FieldElement::one(const TowerPtr& t) {
  if (!t || t->depth() == 0) return FieldElement(1);
  return FieldElement(t, v_from_rat(*t, t->depth(), 1));
}

bool FieldElement::is_rational() const {
  if (!tower_ || val_.depth() == 0) return true;
  // rational iff all coefficients beyond the constant vanish at every level
  const FVal* v = &val_;
  while (v->depth() > 0) {
    for (size_t i = 1; i < v->coeffs().size(); ++i)
      if (!v_is_zero(v->coeffs()[i])) return false;
    v = &v->coeffs()[0];
  }
  return true;
}

Rational FieldElement::to_rational() const {
  if (!is_rational()) throw std::domain_error("element is not rational");
  const FVal* v = &val_;
  while (v->depth() > 0) v = &v->coeffs()[0];
  return v->rat();
}

bool FieldElement::is_zero() const { return v_is_zero(val_); }

bool FieldElement::is_one() const {
  if (!tower_ || val_.depth() == 0) return val_.depth() == 0 && val_.rat() == 1;
  return is_rational() && to_rational() == 1;
}

namespace {
// Aligns operand representations: shared tower (or both rational).
struct Aligned {
  TowerPtr tower;
  FVal a, b;
};

Aligned align(const FieldElement& x, const FieldElement& y) {
  const TowerPtr& tx = x.tower();
  const TowerPtr& ty = y.tower();
  if (!tx && !ty) return {nullptr, x.value(), y.value()};
  if (tx && ty) {
    if (tx.get() != ty.get() && !tx->same(*ty)) throw TowerMismatch();
    return {tx, x.value(), y.value()};
  }
  const TowerPtr& t = tx ? tx : ty;
  FVal a = tx ? x.value() : v_lift(*t, x.value(), t->depth());
  FVal b = ty ? y.value() : v_lift(*t, y.value(), t->depth());
  return {t, std::move(a), std::move(b)};
}

FieldElement wrap(TowerPtr t, FVal v) {
  if (!t) return FieldElement(Rational(v.rat()));
  return FieldElement(std::move(t), std::move(v));
}
}  // namespace

FieldElement FieldElement::operator-() const {
  if (!tower_) return FieldElement(Rational(-val_.rat()));
  return FieldElement(tower_, v_neg(*tower_, val_));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  Aligned al = align(a, b);
  if (!al.tower) return FieldElement(Rational(al.a.rat() + al.b.rat()));
  return wrap(al.tower, v_add(*al.tower, al.a, al.b));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  Aligned al = align(a, b);
  if (!al.tower) return FieldElement(Rational(al.a.rat() - al.b.rat()));
  return wrap(al.tower, v_sub(*al.tower, al.a, al.b));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  Aligned al = align(a, b);
  if (!al.tower) return FieldElement(Rational(al.a.rat() * al.b.rat()));
  return wrap(al.tower, v_mul(*al.tower, al.a, al.b));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  if (b.is_zero()) throw DivisionByZero();
  Aligned al = align(a, b);
  if (!al.tower) return FieldElement(Rational(al.a.rat() / al.b.rat()));
  return wrap(al.tower, v_div(*al.tower, al.a, al.b));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (!tower_) return FieldElement(Rational(1 / val_.rat()));
  return FieldElement(tower_, v_inv(*tower_, val_));
}

FieldElement FieldElement::pow(long n) const {
  if (n < 0) return inverse().pow(-n);
  FieldElement r(1), base = *this;
  while (n > 0) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

bool FieldElement::operator==(const FieldElement& o) const {
  Aligned al = align(*this, o);
  if (!al.tower) return al.a.rat() == al.b.rat();
  return al.a == al.b;
}

std::string FieldElement::str() const {
  if (!tower_) return val_.rat().get_str();
  if (is_rational()) return to_rational().get_str();
  return v_str_named(*tower_, val_);
}

FieldElement FieldElement::promoted_to(const TowerPtr& t) const {
  if (!t) {
    if (!tower_) return *this;
    throw TowerMismatch();
  }
  if (!tower_) return FieldElement(t, v_from_rat(*t, t->depth(), val_.rat()));
  if (tower_->same(*t)) return FieldElement(t, val_);
  // allowed when the current tower is a prefix of t
  const auto& a = tower_->levels();
  const auto& b = t->levels();
  if (a.size() > b.size()) throw TowerMismatch();
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i].name != b[i].name || !(a[i].minpoly == b[i].minpoly))
      throw TowerMismatch();
  }
  return FieldElement(t, v_lift(*t, val_, t->depth()));
}

std::ostream& operator<<(std::ostream& os, const FieldElement& e) {
  return os << e.str();
}

std::optional<long> root_of_unity_order(const FieldElement& a, long bound) {
  if (a.is_zero()) throw std::domain_error("root_of_unity_order of zero");
  FieldElement p = a;
  for (long n = 1; n <= bound; ++n) {
    if (p.is_one()) return n;
    p = p * a;
  }
  return std::nullopt;
}

// ---- univariate polynomials ----------------------------------------------

UPoly upoly_trim(UPoly p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

int upoly_deg(const UPoly& p) {
  for (int i = int(p.size()) - 1; i >= 0; --i)
    if (!p[i].is_zero()) return i;
  return -1;
}

FieldElement upoly_eval(const UPoly& p, const FieldElement& x) {
  FieldElement r(0);
  for (int i = int(p.size()) - 1; i >= 0; --i) r = r * x + p[i];
  return r;
}

UPoly upoly_deflate(const UPoly& p, const FieldElement& root) {
  int d = upoly_deg(p);
  if (d < 1) throw std::invalid_argument("cannot deflate a constant");
  UPoly q(d);
  FieldElement carry = p[d];
  for (int i = d - 1; i >= 0; --i) {
    q[i] = carry;
    carry = p[i] + carry * root;
  }
  if (!carry.is_zero()) throw std::domain_error("deflation by a non-root");
  return q;
}

// ---- root search inside a tower -------------------------------------------

namespace {

// All products of generator powers below their degrees, excluding 1.
std::vector<FieldElement> tower_monomials(const TowerPtr& t) {
  std::vector<FieldElement> out;
  if (!t) return out;
  std::vector<FieldElement> acc{FieldElement(1)};
  for (int lv = 0; lv < t->depth(); ++lv) {
    FieldElement g = FieldElement::generator(t, lv);
    std::vector<FieldElement> next;
    int deg = t->levels()[lv].degree();
    for (const auto& m : acc) {
      FieldElement p(1);
      for (int e = 0; e < deg; ++e) {
        next.push_back(m * p);
        p = p * g;
      }
    }
    acc = std::move(next);
  }
  for (const auto& m : acc)
    if (!m.is_one()) out.push_back(m);
  return out;
}

// Flattens an element to its rational coordinate vector over Q.
void flatten(const FVal& v, std::vector<Rational>& out) {
  if (v.depth() == 0) {
    out.push_back(v.rat());
    return;
  }
  for (const auto& c : v.coeffs()) flatten(c, out);
}

std::vector<Rational> coords(const FieldElement& e, const TowerPtr& t) {
  std::vector<Rational> out;
  flatten(e.promoted_to(t).value(), out);
  return out;
}

// Rational roots of a rational-coefficient polynomial (ascending coeffs),
// via divisor enumeration on the cleared-denominator form.
std::vector<Rational> rational_poly_roots(std::vector<Rational> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  // strip x^k | p
  size_t k = 0;
  while (k < c.size() && c[k] == 0) ++k;
  if (k > 0) {
    roots.push_back(Rational(0));
    c.erase(c.begin(), c.begin() + long(k));
    if (c.size() <= 1) return roots;
  }
  mpz_class lcm = 1;
  for (const auto& q : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> ic;
  for (const auto& q : c) ic.push_back(mpz_class(q * lcm));
  mpz_class a0 = ic.front(), an = ic.back();
  auto divisors = [](mpz_class n) {
    std::vector<mpz_class> ds;
    n = abs(n);
    if (n == 0) return ds;
    for (mpz_class d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        ds.push_back(d);
        ds.push_back(n / d);
      }
      if (d > 2000000) break;  // desk-scale guard; larger roots are not searched
    }
    return ds;
  };
  auto eval = [&](const Rational& x) {
    Rational r = 0;
    for (int i = int(ic.size()) - 1; i >= 0; --i) r = r * x + Rational(ic[i]);
    return r;
  };
  for (const auto& p : divisors(a0)) {
    for (const auto& q : divisors(an)) {
      for (int s = 0; s < 2; ++s) {
        Rational x(s ? -p : p, q);
        x.canonicalize();
        if (eval(x) == 0 &&
            std::find(roots.begin(), roots.end(), x) == roots.end())
          roots.push_back(x);
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const Rational& a, const Rational& b) { return a < b; });
  return roots;
}

// 3x3..6x6 polynomial determinant by cofactor expansion; entries are
// univariate rational polynomials (ascending coefficient vectors).
using QPoly = std::vector<Rational>;

QPoly qp_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}
QPoly qp_add(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), Rational(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return a;
}
QPoly qp_neg(QPoly a) {
  for (auto& x : a) x = -x;
  return a;
}
bool qp_zero(const QPoly& a) {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x == 0; });
}

QPoly qp_det(std::vector<std::vector<QPoly>> m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  QPoly det;
  for (size_t j = 0; j < n; ++j) {
    if (qp_zero(m[0][j])) continue;
    std::vector<std::vector<QPoly>> minor;
    for (size_t i = 1; i < n; ++i) {
      std::vector<QPoly> row;
      for (size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    QPoly term = qp_mul(m[0][j], qp_det(std::move(minor)));
    det = qp_add(std::move(det), j % 2 ? qp_neg(std::move(term)) : term);
  }
  if (det.empty()) det = {Rational(0)};
  return det;
}

// Attempts one root of p in the tower; nullopt when the pattern search fails.
std::optional<FieldElement> find_one_root(const UPoly& p, const TowerPtr& t) {
  int d = upoly_deg(p);
  if (d < 1) return std::nullopt;
  if (d == 1) return -p[0] / p[1];

  std::vector<FieldElement> monomials = tower_monomials(t);

  // Shape q*m (including m = 1 for plain rational roots).
  std::vector<FieldElement> shapes{FieldElement(1)};
  shapes.insert(shapes.end(), monomials.begin(), monomials.end());
  for (const auto& m : shapes) {
    // p(q*m) = sum_k c_k m^k q^k: each Q-coordinate is a rational poly in q.
    size_t dim = t ? size_t(t->dimension()) : 1;
    std::vector<QPoly> coord_polys(dim, QPoly(size_t(d) + 1, Rational(0)));
    FieldElement mk(1);
    for (int k = 0; k <= d; ++k) {
      FieldElement ck = (k < int(p.size())) ? p[k] * mk : FieldElement(0);
      auto cs = t ? coords(ck, t) : std::vector<Rational>{ck.to_rational()};
      for (size_t i = 0; i < dim; ++i) coord_polys[i][size_t(k)] = cs[i];
      mk = mk * m;
    }
    QPoly probe;
    for (const auto& cp : coord_polys)
      if (!qp_zero(cp)) { probe = cp; break; }
    if (probe.empty()) continue;
    for (const auto& q : rational_poly_roots(probe)) {
      FieldElement cand = FieldElement(q) * m;
      if (upoly_eval(p, cand).is_zero()) return cand;
    }
  }

  // Shape q0 + q1*m with m a non-trivial monomial: eliminate q0 with a
  // Sylvester resultant of two coordinate polynomials, then back-substitute.
  if (d > 3 || !t) return std::nullopt;
  for (const auto& m : monomials) {
    // p(q0 + q1*m) expanded: coordinates are bivariate polys in (q0, q1).
    // Represent as matrices biv[i][j] = coeff of q0^i q1^j per Q-coordinate.
    size_t dim = size_t(t->dimension());
    std::vector<std::vector<std::vector<Rational>>> biv(
        dim, std::vector<std::vector<Rational>>(size_t(d) + 1,
                                                std::vector<Rational>(size_t(d) + 1, Rational(0))));
    // binomials: (q0 + q1 m)^k = sum_j C(k,j) q0^(k-j) q1^j m^j
    std::vector<std::vector<long>> binom(size_t(d) + 1, std::vector<long>(size_t(d) + 1, 0));
    for (int i = 0; i <= d; ++i) {
      binom[size_t(i)][0] = 1;
      for (int j = 1; j <= i; ++j)
        binom[size_t(i)][size_t(j)] =
            binom[size_t(i - 1)][size_t(j - 1)] + (j <= i - 1 ? binom[size_t(i - 1)][size_t(j)] : 0);
    }
    for (int k = 0; k <= d; ++k) {
      FieldElement ck = (k < int(p.size())) ? p[k] : FieldElement(0);
      if (ck.is_zero()) continue;
      FieldElement mj(1);
      for (int j = 0; j <= k; ++j) {
        FieldElement c = ck * FieldElement(Rational(binom[size_t(k)][size_t(j)])) * mj;
        auto cs = coords(c, t);
        for (size_t i = 0; i < dim; ++i) biv[i][size_t(k - j)][size_t(j)] += cs[i];
        mj = mj * m;
      }
    }
    // pick two independent nonzero coordinate polynomials
    std::vector<size_t> nz;
    for (size_t i = 0; i < dim && nz.size() < 2; ++i) {
      bool z = true;
      for (auto& row : biv[i])
        for (auto& c : row)
          if (c != 0) z = false;
      if (!z) nz.push_back(i);
    }
    if (nz.size() < 2) continue;
    // Build Sylvester matrix in q0 (entries: polys in q1) of the two coords.
    auto as_q0_poly = [&](size_t idx) {
      std::vector<QPoly> out;  // out[i] = coeff of q0^i as poly in q1
      for (int i = 0; i <= d; ++i) {
        QPoly row(size_t(d) + 1, Rational(0));
        for (int j = 0; j <= d; ++j) row[size_t(j)] = biv[idx][size_t(i)][size_t(j)];
        out.push_back(row);
      }
      while (out.size() > 1 && qp_zero(out.back())) out.pop_back();
      return out;
    };
    auto f = as_q0_poly(nz[0]);
    auto g = as_q0_poly(nz[1]);
    int df = int(f.size()) - 1, dg = int(g.size()) - 1;
    if (df < 1 || dg < 1) continue;
    size_t n = size_t(df + dg);
    std::vector<std::vector<QPoly>> syl(n, std::vector<QPoly>(n, QPoly{Rational(0)}));
    for (int r = 0; r < dg; ++r)
      for (int c = 0; c <= df; ++c) syl[size_t(r)][size_t(r + c)] = f[size_t(df - c)];
    for (int r = 0; r < df; ++r)
      for (int c = 0; c <= dg; ++c) syl[size_t(dg + r)][size_t(r + c)] = g[size_t(dg - c)];
    QPoly res = qp_det(std::move(syl));
    if (qp_zero(res)) continue;
    for (const auto& q1 : rational_poly_roots(res)) {
      if (q1 == 0) continue;
      // substitute q1, solve remaining univariate in q0 over Q
      QPoly in_q0(size_t(d) + 1, Rational(0));
      bool any = false;
      for (size_t i = 0; i < nz.size() && !any; ++i) {
        for (int a = 0; a <= d; ++a) {
          Rational c = 0, pw = 1;
          for (int b = 0; b <= d; ++b) {
            c += biv[nz[i]][size_t(a)][size_t(b)] * pw;
            pw *= q1;
          }
          in_q0[size_t(a)] = c;
        }
        if (!qp_zero(in_q0)) any = true;
      }
      if (!any) continue;
      for (const auto& q0 : rational_poly_roots(in_q0)) {
        FieldElement cand = FieldElement(q0) + FieldElement(q1) * m;
        if (upoly_eval(p, cand).is_zero()) return cand;
      }
    }
  }
  return std::nullopt;
}

}  // namespace

TowerRootResult roots_in_tower(const UPoly& p0, const TowerPtr& tower) {
  TowerRootResult res;
  UPoly p = upoly_trim(p0);
  while (upoly_deg(p) >= 1) {
    auto r = find_one_root(p, tower);
    if (!r) break;
    res.roots.push_back(*r);
    p = upoly_deflate(p, *r);
  }
  res.residual = p;
  return res;
}

// ---- scalar mini-grammar ---------------------------------------------------

namespace {
struct Parser {
  const std::string& s;
  size_t pos = 0;
  TowerPtr tower;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " +
                                std::to_string(pos) + ": " + what);
  }

  FieldElement expr() {
    FieldElement v = term();
    for (;;) {
      if (eat('+')) v = v + term();
      else if (eat('-')) v = v - term();
      else return v;
    }
  }
  FieldElement term() {
    FieldElement v = factor();
    for (;;) {
      if (eat('*')) v = v * factor();
      else if (eat('/')) v = v / factor();
      else return v;
    }
  }
  FieldElement factor() {
    if (eat('-')) return -factor();
    FieldElement v = atom();
    skip();
    if (eat('^')) {
      skip();
      bool neg = eat('-');
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      if (pos == start) fail("exponent expected");
      long e = std::stol(s.substr(start, pos - start));
      v = v.pow(neg ? -e : e);
    }
    return v;
  }
  FieldElement atom() {
    skip();
    if (eat('(')) {
      FieldElement v = expr();
      if (!eat(')')) fail("expected )");
      return v;
    }
    if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
      size_t start = pos;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
      return FieldElement(parse_rational(s.substr(start, pos - start)));
    }
    if (pos < s.size() &&
        (std::isalpha(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) {
      size_t start = pos;
      while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) ||
                                s[pos] == '_'))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (!tower) fail("unknown name (no tower declared): " + name);
      int lv = tower->level_index(name);
      if (lv < 0) fail("unknown generator: " + name);
      return FieldElement::generator(tower, lv);
    }
    fail("unexpected character");
  }
};
}  // namespace

FieldElement parse_element(const std::string& text, const TowerPtr& tower) {
  Parser p{text, 0, tower};
  FieldElement v = p.expr();
  p.skip();
  if (p.pos != text.size()) p.fail("trailing input");
  return v;
}

}  // namespace geotwist
