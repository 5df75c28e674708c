#pragma once

// Systems of (possibly twisted) equations and inequations over a
// structured group, the three-valued verdict algebra, and the independent
// witness checker. Equations are normalized to the form word = 1; a word
// is a sequence of constants and variable occurrences Y^{±1}, each
// occurrence optionally twisted by an automorphism applied before
// exponentiation.

#include "groupeq/recset.hpp"
#include "groupeq/structure.hpp"

#include <map>
#include <string>
#include <variant>
#include <vector>

namespace groupeq {

struct Occurrence {
  std::string var;
  int exponent = 1;  // +1 or -1
  AutPtr twist;      // null = identity
  std::string twist_tag;  // original registry tag; informational
};

using Token = std::variant<GroupValue, Occurrence>;
using EqWord = std::vector<Token>;

struct System {
  std::vector<std::string> variables;  // sorted, unique
  std::vector<EqWord> equations;       // each asserted = 1
  std::vector<EqWord> inequations;     // each asserted != 1
  std::map<std::string, RecSet> constraints;

  void declare(const std::string& var);
  bool declared(const std::string& var) const;
};

/// Reverses the word, flips exponents and inverts constants; a twisted
/// occurrence keeps its twist.
EqWord word_inverse(const GroupStructure& g, const EqWord& w);

using Assignment = std::map<std::string, GroupValue>;

/// Product of the word under the assignment; twists are applied to the
/// assigned value before exponentiation. The empty word is the identity.
GroupValue evaluate_word(const GroupStructure& g, const EqWord& w, const Assignment& a);

/// True iff every equation evaluates to the identity, every inequation to
/// a non-identity, and every constrained value lies in its set. Shares no
/// search logic with any solver.
bool check_witness(const GroupStructure& g, const System& s, const Assignment& a);

/// Throws std::invalid_argument when the system is malformed for the
/// group: undeclared occurrence variables, constants of the wrong shape,
/// constraints of the wrong shape.
void validate_system(const GroupStructure& g, const System& s);

enum class VerdictKind { Sat, Unsat, Unknown };

struct Verdict {
  VerdictKind kind = VerdictKind::Unsat;
  Assignment witness;  // total on the system's variables when Sat
  std::string reason;  // Unknown only

  static Verdict sat(Assignment w) { return {VerdictKind::Sat, std::move(w), ""}; }
  static Verdict unsat() { return {VerdictKind::Unsat, {}, ""}; }
  static Verdict unknown(std::string why) { return {VerdictKind::Unknown, {}, std::move(why)}; }
  bool is_sat() const { return kind == VerdictKind::Sat; }
  bool is_unsat() const { return kind == VerdictKind::Unsat; }
  bool is_unknown() const { return kind == VerdictKind::Unknown; }
};

enum class CombineMode { Any, All };

/// Any: first Sat wins (deterministic order), else first Unknown, else
/// Unsat. All: first Unsat wins, else first Unknown, else Sat with the
/// witnesses merged; merging conflicting assignments to one variable is a
/// logic error (callers keep scopes disjoint).
Verdict combine_verdicts(const std::vector<Verdict>& verdicts, CombineMode mode);

}  // namespace groupeq
