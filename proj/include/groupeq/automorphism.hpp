#pragma once

// Automorphisms of structured groups, one representation per structure
// kind. A null AutPtr denotes the identity automorphism everywhere.
//
// ProductAut is the general factor-permuting form: the image tuple has
// component i equal to components[i] applied to the source component
// sigma^{-1}(i). Factor-permuting automorphisms require the permuted
// factors to be structurally equal.

#include "groupeq/free_word.hpp"
#include "groupeq/int_matrix.hpp"
#include "groupeq/perm.hpp"

#include <memory>
#include <variant>
#include <vector>

namespace groupeq {

class GroupStructure;
class GroupValue;
class Automorphism;
using AutPtr = std::shared_ptr<const Automorphism>;

class Automorphism {
 public:
  struct FiniteMap {
    std::vector<int> images;  // element index -> element index
  };
  struct MatrixAut {
    IntMatrix m;  // unimodular
  };
  struct FreeSubst {
    std::vector<FreeWord> images;
    std::vector<FreeWord> inverse_images;  // certifies the automorphism
  };
  struct ProductAut {
    Perm sigma;
    std::vector<AutPtr> components;  // components[i]: factor sigma^{-1}(i) -> factor i
  };
  using Variant = std::variant<FiniteMap, MatrixAut, FreeSubst, ProductAut>;

  explicit Automorphism(Variant value) : v(std::move(value)) {}
  Variant v;

  static AutPtr finite_map(std::vector<int> images);
  static AutPtr matrix(IntMatrix m);
  static AutPtr free_subst(std::vector<FreeWord> images, std::vector<FreeWord> inverse_images);
  static AutPtr product(Perm sigma, std::vector<AutPtr> components);
};

inline bool aut_is_identity(const AutPtr& a) { return a == nullptr; }

GroupValue apply_aut(const AutPtr& aut, const GroupStructure& g, const GroupValue& x);

/// f after g, collapsed to a single representation.
AutPtr compose_auts(const AutPtr& f, const AutPtr& g, const GroupStructure& target);

/// Functional inverse (computable without user input for every kind).
AutPtr inverse_aut(const AutPtr& aut, const GroupStructure& g);

/// Throws std::invalid_argument when `aut` is not a valid automorphism of
/// `g`, with a message naming the violation.
void validate_automorphism(const AutPtr& aut, const GroupStructure& g);

bool aut_equal(const AutPtr& a, const AutPtr& b);

}  // namespace groupeq
