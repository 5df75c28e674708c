#pragma once

// Exhaustive constrained solver over a finite group: the engine's exact
// base case. Enumerates all constraint-respecting assignments in
// deterministic lexicographic order (sorted variables, element index
// order) and returns the first satisfying one. Never answers unknown;
// oversized searches are an input-size error.

#include "groupeq/system.hpp"

#include <optional>

namespace groupeq {

struct FiniteSolveOptions {
  long long assignment_cap = 10'000'000;
};

/// Deterministic stream of all constraint-respecting assignments of
/// group elements to variables.
class AssignmentEnumerator {
 public:
  /// allowed[k]: sorted element indices admissible for variable k; an
  /// empty list yields an empty stream.
  AssignmentEnumerator(std::vector<std::vector<int>> allowed);

  /// Next assignment as indices aligned with the variable order, or
  /// nullopt when exhausted. Restartable via reset().
  std::optional<std::vector<int>> next();
  void reset();

  /// Total number of assignments in the stream.
  long long count() const;

 private:
  std::vector<std::vector<int>> allowed_;
  std::vector<size_t> cursor_;
  bool done_ = false;
  bool started_ = false;
};

/// System over GroupStructure::Finite with twists resolved to element
/// maps (or identity). `stats_assignments`, when given, accumulates the
/// number of assignments tested.
Verdict solve_finite(const GroupStructure& g, const System& s,
                     const FiniteSolveOptions& opts = {},
                     long long* stats_assignments = nullptr);

}  // namespace groupeq
