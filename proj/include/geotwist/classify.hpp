// Membership tests for Z(E,sigma), N(E,sigma), M(E,sigma), the extension
// test to the ambient plane, and the classifier assembling the twist report
// per catalogued type.

#pragma once

#include "geotwist/catalog.hpp"

namespace geotwist {

// An automorphism of the point variety given per component, together with
// the ambient map when one is known.
struct RestrictedAut {
  std::vector<SigmaMap> maps;          // mirrors pair.components
  std::vector<int> permutation;        // component i maps onto permutation[i]
  std::optional<ProjMap> ambient;

  ProjPoint apply(const GeometricPair& pair, int ci, const ProjPoint& p) const;
};

// The restriction of tau when it maps E onto E (every component form pulls
// back, up to scalar, to a component form); nullopt otherwise.
std::optional<RestrictedAut> restricts_to_E(const ProjMap& tau,
                                            const GeometricPair& pair);

// The pair's own sigma as a RestrictedAut.
RestrictedAut sigma_of(const GeometricPair& pair);

// The unique ambient map agreeing with f on E, when one exists.  E must
// contain four points in general position (checked).
std::optional<ProjMap> extends_to_P2(const RestrictedAut& f,
                                     const GeometricPair& pair);

bool in_Z(const ProjMap& tau, const GeometricPair& pair);
bool in_N(const ProjMap& tau, const GeometricPair& pair);

enum class MResult { False, True, TrueWithinBound };

// Closed-form for catalogued types; bounded definitional check otherwise.
MResult in_M(const ProjMap& tau, const GeometricPair& pair, long bound,
             const std::optional<AlgebraType>& catalog_type = std::nullopt,
             long* failing_i = nullptr);

struct TwistFamilyEntry {
  std::string description;
  ProjMap tau;
  GeometricPair pair;        // (E, tau|_E sigma)
  bool from_continuous_family = false;
};

struct TwistReport {
  std::string type;
  std::string params;
  GroupDesc z_group, m_group, n_group;
  std::optional<long> sigma_order;         // bounded search, when finite
  bool z_equals_m = false;
  bool m_equals_n = true;
  bool exceptional = false;
  std::optional<bool> twist_alg_equals_twist;  // absent when exceptional
  std::vector<TwistFamilyEntry> twist_family;
  std::vector<Certificate> certificates;
};

// Z(E,sigma), M(E,sigma), N(E,sigma) and the twist family from the
// closed-form classification; every finite generator re-verified.
TwistReport classify(const AlgebraType& t);

// The pairs (E, tau|_E sigma) for the generators of M(E,sigma); continuous
// families contribute deterministic samples flagged as such.
std::vector<TwistFamilyEntry> twist_family(const AlgebraType& t);

struct OracleRow {
  long q_index = 0;  // index into E[3]
  long i = 0;        // tau exponent
  bool z_definitional = false, z_torsion = false;
  bool n_definitional = false, n_torsion = false;
  bool agree() const {
    return z_definitional == z_torsion && n_definitional == n_torsion;
  }
};

// All candidates sigma_q tau^i (q in E[3], 0 <= i < |tau|): Z- and
// N-membership by the definitional route and by the torsion criteria.
std::vector<OracleRow> brute_force_MN_oracle(const AlgebraType& ec_type,
                                             long i_limit = -1);

}  // namespace geotwist
