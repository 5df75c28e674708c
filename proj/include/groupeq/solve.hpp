#pragma once

// Satisfiability over structured groups by structural reduction:
//   finite         -> exhaustive table search
//   free abelian   -> exact integer linear algebra
//   free           -> abelianization filter + bounded search (semi-decision)
//   direct product -> per-factor projection with inequation covers
//                     (factor-permuting twists flatten to coordinate
//                     variables over one factor group instead)
//   extension      -> project to the finite quotient, enumerate quotient
//                     solutions, rewrite each branch to a twisted system
//                     over the base and recurse
//
// solve_virtually_direct_product is the alternative route for extensions
// over products: embed into a direct product of wreath products (one per
// factor orbit), solve there, pull witnesses back.
//
// A SAT verdict always carries a witness that passes check_witness; a
// global branch budget converts runaway enumeration into
// UNKNOWN("branch budget"), never a wrong answer.

#include "groupeq/system.hpp"
#include "groupeq/wreath.hpp"

#include <optional>

namespace groupeq {

struct SolveOptions {
  long long branch_budget = 1'000'000;
  std::optional<int> free_bound;  // overrides every free factor's bound
  long long finite_assignment_cap = 10'000'000;
  bool via_embedding = false;  // route product-base extensions through the pipeline
};

struct SolveStats {
  long long branches = 0;
};

Verdict solve(const GroupStructure& g, const System& s, const SolveOptions& opts = {},
              SolveStats* stats = nullptr);

/// Factor-preserving twists only; throws on a factor-permuting twist.
Verdict solve_direct_product(const GroupStructure& g, const System& s,
                             const SolveOptions& opts = {}, SolveStats* stats = nullptr);

Verdict solve_extension(const GroupStructure& g, const System& s,
                        const SolveOptions& opts = {}, SolveStats* stats = nullptr);

/// The embedding pipeline: requires an extension whose base factors fall
/// into conjugation orbits under the action.
Verdict solve_virtually_direct_product(const GroupStructure& g, const System& s,
                                       const SolveOptions& opts = {},
                                       SolveStats* stats = nullptr);

}  // namespace groupeq
