// Named verification suites: each check emits one certificate so that runs
// can be diffed against committed expectations.

#pragma once

#include "geotwist/classify.hpp"

namespace geotwist {

// Standard towers used across the suites.
TowerPtr tower_omega();         // Q(w), w^2 + w + 1 = 0
TowerPtr tower_omega_cbrt2();   // Q(w, c2), c2^3 = 2
TowerPtr tower_sqrt3();         // Q(r3), r3^2 = 3
TowerPtr tower_sqrt3_omega();   // Q(r3, w)
TowerPtr tower_omega_sqrt2();   // Q(w, r2), r2^2 = 2
TowerPtr tower_omega_cbrt6();   // Q(w, c6), c6^3 = 6
TowerPtr tower_zeta6();         // Q(z6), z6^2 - z6 + 1 = 0

// The catalogue instances fixed by the acceptance criteria.
std::vector<AlgebraType> acceptance_catalog();

CheckReport run_table1_certification();   // G1 + G2 for all eight types
CheckReport run_pencil_determinants();
CheckReport run_j_invariant_anchors();
CheckReport run_group_axioms();
CheckReport run_lemma_oracle();           // 54-candidate Z/N agreement
CheckReport run_table3();
CheckReport run_table4_lambda0();
CheckReport run_twist_route_equivalence();
CheckReport run_twisting_axiom_checker();
CheckReport run_hilbert_instrument();
CheckReport run_six_torsion_scenario();

struct SuiteResult {
  std::string name;
  CheckReport report;
};

// Named CLI suites: table1, table3, table4, lemma48, groupaxioms.
std::vector<SuiteResult> run_suite(const std::string& name);
std::vector<std::string> suite_names();

}  // namespace geotwist
