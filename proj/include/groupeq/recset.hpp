#pragma once

// Recognisable subsets as finite unions of structure-aligned boxes, i.e.
// coset-like sets of finite-index kind:
//   finite group   -> explicit element subset
//   free abelian   -> coset of a full-rank sublattice
//   free group     -> preimage of an allowed set under a map to a finite
//                     group (given by generator targets)
//   direct product -> tuple of component boxes
//   extension      -> fixed quotient part with a box over the base
//
// Membership is decided by structural recursion; the empty union denotes
// the empty set.

#include "groupeq/abelian_solver.hpp"
#include "groupeq/structure.hpp"

#include <vector>

namespace groupeq {

struct RecBox;

struct RecSet {
  std::vector<RecBox> boxes;
};

struct RecBox {
  struct FiniteSubset {
    std::vector<int> elements;  // sorted
  };
  struct FreeQuot {
    FiniteGroup quot;
    std::vector<int> targets;  // one per free generator
    std::vector<int> allowed;  // sorted
  };
  struct TupleBox {
    std::vector<RecBox> components;
  };
  struct ExtBox {
    int top = 0;
    Box<RecBox> base;
  };
  using Variant = std::variant<FiniteSubset, CongruenceBox, FreeQuot, TupleBox, ExtBox>;

  RecBox() : v(FiniteSubset{}) {}
  RecBox(Variant value) : v(std::move(value)) {}
  Variant v;
};

bool recbox_member(const GroupStructure& g, const RecBox& box, const GroupValue& x);
bool recset_member(const GroupStructure& g, const RecSet& set, const GroupValue& x);

/// Shape check against the structure; throws std::invalid_argument.
void validate_recset(const GroupStructure& g, const RecSet& set);

/// Intersection, distributed over the unions; empty intersections dropped.
RecSet recset_intersect(const GroupStructure& g, const RecSet& a, const RecSet& b);
/// nullopt when the intersection is empty.
std::optional<RecBox> box_intersect(const GroupStructure& g, const RecBox& a, const RecBox& b);

/// {x * c : x in box}.
RecBox box_translate_right(const GroupStructure& g, const RecBox& box, const GroupValue& c);
/// {aut(x) : x in box}.
RecBox box_image(const GroupStructure& g, const AutPtr& aut, const RecBox& box);

/// Boxes whose union is the whole group (several for extension bases).
std::vector<RecBox> full_boxes(const GroupStructure& g);

}  // namespace groupeq
