#pragma once

// Compositional descriptions of groups and the group operations on their
// values. A group is one of:
//   Finite        -- multiplication table (usually closed from perms)
//   FreeAbelian   -- Z^rank, written additively as integer vectors
//   Free          -- free group of finite rank with a search bound
//   Product       -- direct product of component groups
//   Extension     -- base K, finite quotient Q, transversal action
//                    alpha: Q -> Aut(K) and normalized cocycle
//                    c: Q x Q -> K with t_p t_q = t_{pq} c(p,q)
//
// Extension values are pairs (k, q) denoting k * t_q, multiplied by
//   (k, p)(k', q) = (k * alpha_p(k') * alpha_{pq}(c(p,q)), pq),
// which on permutational wreath products is coordinatewise
//   (j, pi)(k, rho) = ((j_i k_{pi^{-1}(i)})_i, pi rho).

#include "groupeq/automorphism.hpp"
#include "groupeq/box.hpp"
#include "groupeq/finite_group.hpp"
#include "groupeq/value.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace groupeq {

class GroupStructure {
 public:
  struct Finite {
    FiniteGroup group;
  };
  struct FreeAbelian {
    int rank = 0;
  };
  struct Free {
    int rank = 1;
    int bound = 6;  // default search bound for the semi-decision
    std::vector<std::string> gen_names;
  };
  struct Product {
    std::vector<GroupStructure> factors;
  };
  struct Extension {
    Box<GroupStructure> base;
    FiniteGroup quotient;
    std::vector<AutPtr> action;                    // indexed by quotient element
    std::vector<std::vector<GroupValue>> cocycle;  // [p][q], values in base
  };
  using Variant = std::variant<Finite, FreeAbelian, Free, Product, Extension>;

  GroupStructure() : v(FreeAbelian{0}) {}
  GroupStructure(Variant value) : v(std::move(value)) {}

  Variant v;
  /// Registered automorphisms available as twists in systems.
  std::map<std::string, AutPtr> automorphisms;

  const Finite* finite() const { return std::get_if<Finite>(&v); }
  const FreeAbelian* free_abelian() const { return std::get_if<FreeAbelian>(&v); }
  const Free* free() const { return std::get_if<Free>(&v); }
  const Product* product() const { return std::get_if<Product>(&v); }
  const Extension* extension() const { return std::get_if<Extension>(&v); }
};

GroupValue gid(const GroupStructure& g);
GroupValue gmul(const GroupStructure& g, const GroupValue& a, const GroupValue& b);
GroupValue ginv(const GroupStructure& g, const GroupValue& a);
bool is_identity_value(const GroupStructure& g, const GroupValue& a);

/// Shape/range check of a value against a structure.
bool value_in_structure(const GroupStructure& g, const GroupValue& a);

/// Validates the whole structure recursively; extension data is checked
/// for normalized cocycles and the associativity identities on all
/// quotient pairs/triples. Throws std::invalid_argument naming the
/// violation (including the offending cocycle triple).
void validate_structure(const GroupStructure& g);

/// Structural equality of the group data (registries ignored).
bool structure_equal(const GroupStructure& a, const GroupStructure& b);

/// Total order when every leaf is finite (free abelian of rank 0 counts).
std::optional<size_t> finite_order(const GroupStructure& g);

/// All values of a finite-order structure, sorted under value_cmp.
std::vector<GroupValue> enumerate_values(const GroupStructure& g, size_t cap = 1 << 20);

/// Small set of values on which homomorphism identities are verified
/// exactly (generates the group: all elements / basis / generators).
std::vector<GroupValue> probe_values(const GroupStructure& g);

const GroupValue& ext_base(const GroupValue& v);
int ext_top(const GroupValue& v);

}  // namespace groupeq
