#pragma once

// Elements of structured groups. The representation follows the group's
// structural decomposition:
//   finite group        -> element index
//   free abelian Z^r    -> integer vector
//   free group          -> reduced word
//   direct product      -> tuple of component values
//   finite extension    -> pair (k, q) denoting k * t_q, with k in the
//                          base group and t_q the transversal letter of
//                          the quotient element q
//
// The base-first normal form is what makes the wreath-product value
// (j_1,...,j_n, pi) literally the pair (tuple, pi).

#include "groupeq/box.hpp"
#include "groupeq/free_word.hpp"
#include "groupeq/int_matrix.hpp"

#include <variant>
#include <vector>

namespace groupeq {

class GroupValue;

struct FiniteElt {
  int index = 0;
};

struct ExtElt {
  Box<GroupValue> base;  // k
  int top = 0;           // q, quotient element index
};

using ValueTuple = std::vector<GroupValue>;

class GroupValue {
 public:
  using Variant = std::variant<FiniteElt, IntVec, FreeWord, ValueTuple, ExtElt>;

  GroupValue() : v(FiniteElt{0}) {}
  GroupValue(Variant value) : v(std::move(value)) {}

  static GroupValue finite(int index) { return GroupValue(FiniteElt{index}); }
  static GroupValue vector(IntVec x) { return GroupValue(Variant(std::move(x))); }
  static GroupValue word(FreeWord w) { return GroupValue(Variant(std::move(w))); }
  static GroupValue tuple(ValueTuple parts) { return GroupValue(Variant(std::move(parts))); }
  static GroupValue ext(GroupValue base, int top) {
    return GroupValue(Variant(ExtElt{Box<GroupValue>(std::move(base)), top}));
  }

  Variant v;
};

bool value_eq(const GroupValue& a, const GroupValue& b);
/// Total order for deterministic iteration; -1/0/+1.
int value_cmp(const GroupValue& a, const GroupValue& b);

}  // namespace groupeq
