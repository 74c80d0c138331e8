// The eight standard quadratic algebras with their geometric pairs, and the
// decompositions Aut(P^2, E) = Z(E) x| G(E) as checkable group descriptions.

#pragma once

#include "geotwist/quadalg.hpp"

namespace geotwist {

// A group of projective maps: a continuous normalized family combined with
// a finite part given by generators (the closure is enumerated, so
// membership is decidable exactly).
class GroupDesc {
 public:
  enum class Family {
    Trivial,
    FullPGL3,
    DiagTorus2,     // diag(1,e,i), e*i != 0
    DiagTorus1,     // diag(1,e,e^-1)
    DiagSquare,     // diag(1,e,e^2)
    DiagInvSquare,  // diag(1,e,e^-2)
    DiagUnit3,      // diag(1,1,i)
    TypeTZ,         // [[1,0,0],[0,e,0],[g,h,e^2]] with e^3 = 1
    UnipShear,      // [[1,d,0],[0,1,0],[2d,d^2,1]]
  };

  GroupDesc() = default;
  GroupDesc(Family f, std::vector<ProjMap> finite_gens, std::string label);

  Family family() const { return family_; }
  const std::string& label() const { return label_; }
  const std::vector<ProjMap>& finite_generators() const { return gens_; }
  const std::vector<ProjMap>& finite_elements() const { return elements_; }

  bool contains(const ProjMap& m) const;
  static bool family_member(Family f, const ProjMap& m);

  // Structural equality: same family and the same finite element set.
  bool operator==(const GroupDesc& o) const;
  bool operator!=(const GroupDesc& o) const { return !(*this == o); }

  // Deterministic members of the continuous family for sampling, excluding
  // the identity where the family allows it.
  std::vector<ProjMap> family_samples(const TowerPtr& tower, int count) const;

 private:
  Family family_ = Family::Trivial;
  std::vector<ProjMap> gens_;
  std::vector<ProjMap> elements_;  // closure of the finite part
  std::string label_;
};

struct AlgebraType {
  enum class Tag { P, S, Sp, T, Tp, NC, CC, EC };
  Tag tag = Tag::P;
  TowerPtr tower;
  FieldElement alpha;  // S, S', NC
  CurvePtr curve;      // EC
  ProjPoint point;     // EC: p = (alpha, beta, gamma)

  std::string tag_name() const;
  std::string params_str() const;

  static AlgebraType P();
  static AlgebraType S(FieldElement alpha, TowerPtr tower = nullptr);
  static AlgebraType Sprime(FieldElement alpha, TowerPtr tower = nullptr);
  static AlgebraType T(TowerPtr tower_with_omega);
  static AlgebraType Tprime();
  static AlgebraType NC(FieldElement alpha, TowerPtr tower_with_omega);
  static AlgebraType CC();
  // p on the smooth Hesse cubic it determines; alpha*beta*gamma != 0.
  static AlgebraType EC(ProjPoint p, TowerPtr tower);
};

// Relations and point-variety pair exactly as catalogued; the pair passes
// verify_G1 by construction (certified in the test suite).
std::pair<RelationSpace, GeometricPair> standard_algebra(const AlgebraType& t);

// Z(E) and G(E) with explicit generators for every finite factor.
std::pair<GroupDesc, GroupDesc> table2_groups(const AlgebraType& t);

// Frequently used exact matrices over a tower.
ProjMap cyclic_shift_map();              // (a,b,c) -> (b,c,a) coordinates cycle
ProjMap swap_xy_map();                   // (a,b,c) -> (b,a,c)
ProjMap swap_yz_map();                   // (a,b,c) -> (a,c,b)
ProjMap swap_xy_negz_map();              // (a,b,c) -> (b,a,-c)
ProjMap diag_map(const FieldElement& a, const FieldElement& b,
                 const FieldElement& c);
// A primitive cube root of unity in the tower; throws TowerTooSmall.
FieldElement omega_in(const TowerPtr& tower);

}  // namespace geotwist
