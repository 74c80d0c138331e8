// Acceptance gate: runs every criterion at zero tolerance (all arithmetic
// is exact) and prints one PASS/FAIL line per criterion.  Exit code is the
// number of failing criteria.

#include <cstdio>
#include <vector>

#include "geotwist/suites.hpp"

using namespace geotwist;

namespace {
int failures = 0;

void criterion(const char* id, const char* title, const CheckReport& rep) {
  std::printf("%-4s %-52s %s\n", id, title, rep.ok ? "PASS" : "FAIL");
  if (!rep.ok) {
    ++failures;
    for (const auto& c : rep.certificates) {
      if (!c.pass)
        std::printf("     - %s%s%s\n", c.name.c_str(),
                    c.detail.empty() ? "" : ": ", c.detail.c_str());
    }
  }
}
}  // namespace

int main() {
  std::printf("acceptance criteria (exact arithmetic, zero tolerance)\n");
  std::printf("------------------------------------------------------\n");
  try {
    criterion("AC1", "Table 1 certification (G1 + G2)", run_table1_certification());
    criterion("AC2", "pencil determinants", run_pencil_determinants());
    criterion("AC3", "j-invariant anchors", run_j_invariant_anchors());
    criterion("AC4", "group-law axioms and tau orders", run_group_axioms());
    criterion("AC5", "54-candidate membership oracle agreement", run_lemma_oracle());
    criterion("AC6", "Table 3 reproduction", run_table3());
    criterion("AC7", "Table 4 reproduction at lambda = 0", run_table4_lambda0());
    criterion("AC8", "twist route equivalence", run_twist_route_equivalence());
    criterion("AC9", "twisting-system axiom checker", run_twisting_axiom_checker());
    criterion("AC10", "Hilbert-dimension instrument", run_hilbert_instrument());
    criterion("AC11", "six-torsion classification scenario", run_six_torsion_scenario());
  } catch (const std::exception& e) {
    std::printf("fatal: %s\n", e.what());
    return 99;
  }
  std::printf("------------------------------------------------------\n");
  std::printf("%s (%d failing)\n", failures == 0 ? "ALL CRITERIA PASS" : "FAILURES",
              failures);
  return failures;
}
