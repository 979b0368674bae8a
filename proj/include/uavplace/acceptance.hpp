#pragma once

#include <iosfwd>
#include <string>

namespace uavplace::acceptance {

struct CriterionResult {
    std::string id;
    std::string title;
    bool passed = false;
    std::string detail;
    double seconds = 0.0;
};

// The six end-to-end checks that gate a build. Each one measures its own
// wall-clock time and fails if it exceeds its stated budget.

// Every solve, in every mode, over 200 seeded scenarios, yields a
// non-increasing objective trace (tolerance 1e-9 per step). Budget 10 s.
CriterionResult monotone_descent();

// On 100 border-stress scenarios (k=2, three high-load users between the two
// groups, load ratio 8), weighted mode beats two-feature mode on
// mean_dist_highload in at least 90 and on mean_dist_weighted in at least 95.
// Budget 30 s.
CriterionResult border_user_relief();

// On 50 scenarios with integer loads 1..8, weighted Lloyd and unweighted
// Lloyd on the replica expansion, started from identical centroids, trace
// identical trajectories within 1e-12 per coordinate. Budget 10 s.
CriterionResult replication_equivalence();

// On 100 tiny instances (n 4..8, k=2), weighted solve with 20 restarts hits
// the enumerated optimum within 1e-6 relative in at least 95, and never goes
// below optimum - 1e-9. Budget 20 s.
CriterionResult oracle_gap();

// k=1 centroids equal (weighted) means within 1e-12; equal-load scenarios
// give all-zero comparison deltas; three-feature with alpha=0 reproduces
// two-feature assignments exactly. Budget 1 s.
CriterionResult closed_forms();

// Every command run twice with fixed flags produces byte-identical output
// files and logs. Budget 5 s.
CriterionResult cli_determinism();

// Runs all six criteria, streaming one PASS/FAIL line each plus a summary;
// returns true iff every criterion passed.
bool run_all(std::ostream& log);

}  // namespace uavplace::acceptance
