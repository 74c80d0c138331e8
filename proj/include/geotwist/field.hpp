// Exact arithmetic over towers of algebraic extensions of the rationals.
//
// A FieldTower declares levels Q = K_0 < K_1 < ... < K_L, each level given by
// a generator name and a monic minimal polynomial over the previous level.
// A FieldElement is an element of the top field K_L in canonical reduced
// form: at level i it is a dense coefficient vector of length deg_i whose
// entries live in K_{i-1}.  Equality of elements is equality of canonical
// forms, so every comparison is a syntactic check.
//
// Declared minimal polynomials are trusted; irreducibility is not verified.

#pragma once

#include <gmpxx.h>

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geotwist {

using Rational = mpq_class;

// Parses "a/b" or "a" with arbitrary precision; canonicalizes.
Rational parse_rational(const std::string& s);
std::string rational_str(const Rational& q);

struct TowerMismatch : std::domain_error {
  TowerMismatch() : std::domain_error("elements belong to different towers") {}
};
struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
};

// Value tree: depth 0 is a rational, depth d > 0 is a dense coefficient
// vector (length = degree of level d) of depth d-1 values.
class FVal {
 public:
  FVal() : depth_(0), rat_(0) {}
  explicit FVal(Rational r) : depth_(0), rat_(std::move(r)) {}
  FVal(int depth, std::vector<FVal> coeffs)
      : depth_(depth), coeffs_(std::move(coeffs)) {}

  int depth() const { return depth_; }
  const Rational& rat() const { return rat_; }
  const std::vector<FVal>& coeffs() const { return coeffs_; }
  std::vector<FVal>& coeffs() { return coeffs_; }

  bool operator==(const FVal& o) const;

 private:
  int depth_;
  Rational rat_;
  std::vector<FVal> coeffs_;
};

class FieldTower;
using TowerPtr = std::shared_ptr<const FieldTower>;

class FieldTower : public std::enable_shared_from_this<FieldTower> {
 public:
  struct Level {
    std::string name;
    // Monic minimal polynomial, ascending coefficients including the
    // leading 1; coefficients are values of the previous level's depth.
    std::vector<FVal> minpoly;
    int degree() const { return int(minpoly.size()) - 1; }
  };

  static TowerPtr rationals();  // the empty tower (level 0 only)
  // Builds a tower level by level; throws on non-monic or degree < 2.
  static TowerPtr make(std::vector<Level> levels);

  const std::vector<Level>& levels() const { return levels_; }
  int depth() const { return int(levels_.size()); }
  // Total degree over Q (product of level degrees).
  int dimension() const;
  int level_index(const std::string& name) const;  // -1 if absent

  bool same(const FieldTower& o) const { return key_ == o.key_; }
  const std::string& key() const { return key_; }

 private:
  std::vector<Level> levels_;
  std::string key_;  // canonical structural fingerprint
};

class FieldElement {
 public:
  FieldElement() : tower_(nullptr), val_(Rational(0)) {}
  FieldElement(int n) : tower_(nullptr), val_(Rational(n)) {}
  FieldElement(long n) : tower_(nullptr), val_(Rational(n)) {}
  explicit FieldElement(Rational q) : tower_(nullptr), val_(Rational(0)) {
    q.canonicalize();
    val_ = FVal(std::move(q));
  }
  FieldElement(TowerPtr t, FVal v);

  // The i-th tower generator as an element (level index from 0).
  static FieldElement generator(const TowerPtr& t, int level);
  static FieldElement zero(const TowerPtr& t);
  static FieldElement one(const TowerPtr& t);

  const TowerPtr& tower() const { return tower_; }
  const FVal& value() const { return val_; }
  bool is_rational() const;
  // Rational content when is_rational(); throws otherwise.
  Rational to_rational() const;

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator-() const;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  FieldElement& operator+=(const FieldElement& b) { return *this = *this + b; }
  FieldElement& operator-=(const FieldElement& b) { return *this = *this - b; }
  FieldElement& operator*=(const FieldElement& b) { return *this = *this * b; }
  FieldElement& operator/=(const FieldElement& b) { return *this = *this / b; }

  FieldElement inverse() const;
  FieldElement pow(long n) const;  // negative n inverts

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string str() const;  // human-readable, deterministic

  // Lifts this element into tower t (must extend the current context).
  FieldElement promoted_to(const TowerPtr& t) const;

 private:
  TowerPtr tower_;  // null means plain rational
  FVal val_;        // depth == tower depth (or 0 when tower_ is null)
};

std::ostream& operator<<(std::ostream& os, const FieldElement& e);

// Smallest n <= bound with a^n = 1, if any.  Throws on a = 0.
std::optional<long> root_of_unity_order(const FieldElement& a, long bound);

// Dense univariate polynomials over a tower field, ascending coefficients.
// Used for minimal-polynomial work and for root search inside a tower.
using UPoly = std::vector<FieldElement>;

UPoly upoly_trim(UPoly p);
int upoly_deg(const UPoly& p);  // -1 for zero
FieldElement upoly_eval(const UPoly& p, const FieldElement& x);
// Exact division by (x - root); remainder must vanish.
UPoly upoly_deflate(const UPoly& p, const FieldElement& root);

struct TowerRootResult {
  std::vector<FieldElement> roots;  // found in the tower, with deflation
  UPoly residual;                   // still unsolved factor (constant if complete)
  bool complete() const { return upoly_deg(residual) <= 0; }
};

// Finds roots of p lying in the tower by a deterministic pattern search
// (rational multiples of generator monomials and rational-affine forms
// q0 + q1*m), deflating after each hit.  Complete whenever the roots have
// those shapes; otherwise the residual polynomial reports what is missing.
TowerRootResult roots_in_tower(const UPoly& p, const TowerPtr& tower);

// Mini-grammar parser for scalars: rationals `a/b`, tower generator names,
// `+ - * / ^ ( )`.  Example: "1+r3", "-c2^2/3".
FieldElement parse_element(const std::string& text, const TowerPtr& tower);

}  // namespace geotwist
