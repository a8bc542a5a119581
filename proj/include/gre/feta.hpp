#pragma once

#include <map>
#include <string>
#include <vector>

#include "gre/tracelets.hpp"

namespace gre {

// Static pathway synthesis: grow tracelets backwards from a target event rule
// E, keeping only those where E cannot be shifted to an earlier position, one
// canonical representative per equivalence class.
struct PathwayQuery {
  std::vector<RuleWithConditions> transitions;
  RuleWithConditions target;
  int n_max = 2;
  RewriteType type = RewriteType::Dpo;
  EquivConfig equiv;

  explicit PathwayQuery(RuleWithConditions target_rule) : target(std::move(target_rule)) {}
};

struct PathwayDiagnostics {
  int inconclusive_condition_checks = 0;
  // Pairs whose shift verdict depends on whether window conditions are
  // compared.
  int condition_verdict_splits = 0;
  std::vector<std::string> notes;
};

struct PathwaySet {
  std::map<int, std::vector<Tracelet>> by_length;
  PathwayDiagnostics diagnostics;
};

// True iff no tracelet reachable from T by chains of single-window shift
// steps (within the configured caps) carries a rule isomorphic to E at a
// non-final column. T's own columns count as reachable.
bool precedes(const RuleWithConditions& E, const Tracelet& T, const EquivConfig& cfg,
              PathwayDiagnostics* diag = nullptr);

// One canonical representative (lexicographically minimal serialization) per
// class of the equivalence generated by abstraction and shift steps within
// the given set.
std::vector<Tracelet> quotient(const std::vector<Tracelet>& ts, const EquivConfig& cfg,
                               PathwayDiagnostics* diag = nullptr);

PathwaySet feta(const PathwayQuery& q);

// All single-window shift-step neighbours of T at window [j-k, j] whose rule
// content realizes the given ordering of the window's columns (a permutation
// of window positions, values 0..k). Exposed for the pathway search and its
// tests.
std::vector<Tracelet> window_permutation_candidates(const Tracelet& T, int j, int k,
                                                    const std::vector<int>& order,
                                                    const EquivConfig& cfg,
                                                    PathwayDiagnostics* diag = nullptr);

}  // namespace gre
