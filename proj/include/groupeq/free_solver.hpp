#pragma once

// Bounded semi-decision for systems over free groups: sound for both SAT
// and UNSAT, honest UNKNOWN otherwise.
//
// UNSAT route: the equations are abelianized (substitution twists become
// exponent-sum matrices, inequations are dropped) and refuted exactly over
// Z^rank when possible. SAT route: all assignments of reduced words of
// length <= B are tried in (max length, length-lex per variable) order;
// the first satisfying assignment is the witness. Otherwise the verdict
// is UNKNOWN("bound B exhausted").

#include "groupeq/system.hpp"

namespace groupeq {

struct FreeSolveOptions {
  std::optional<int> bound_override;        // overrides the structure's bound
  long long max_candidates = -1;            // <0 = unlimited
};

Verdict solve_free_bounded(const GroupStructure& g, const System& s,
                           const FreeSolveOptions& opts = {},
                           long long* stats_candidates = nullptr);

/// Reduced words of length <= bound in length-lex order (letter order
/// a < a^-1 < b < b^-1 < ...). Shared with the oracle tests.
std::vector<FreeWord> reduced_words_upto(int rank, int bound);

}  // namespace groupeq
