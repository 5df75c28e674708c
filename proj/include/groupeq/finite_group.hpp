#pragma once

// Finite groups by multiplication table, usually materialized from
// permutation generators by breadth-first closure. Elements are compared
// by index; discovery order is deterministic (sorted generator labels).

#include "groupeq/perm.hpp"

#include <map>
#include <string>
#include <vector>

namespace groupeq {

class FiniteGroup {
 public:
  FiniteGroup() = default;  // empty; populate via from_table/closure

  /// Validates the table: identity, inverses, associativity (exhaustive
  /// for order <= 64, randomized sample above).
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> names = {});

  /// BFS closure of labelled permutation generators. Generators are
  /// processed in sorted label order; element 0 is the identity. Element
  /// names are shortest product words in the generator labels.
  static FiniteGroup closure(const std::map<std::string, Perm>& generators,
                             int degree, size_t max_order = 100000);

  int order() const { return n_; }
  int identity() const { return 0; }
  int mul(int a, int b) const { return table_[a][b]; }
  int inv(int a) const { return inverse_[a]; }
  int pow(int a, long e) const;

  const std::string& name_of(int a) const { return names_[a]; }
  /// Index of a named element, -1 if absent.
  int index_of_name(const std::string& name) const;

  bool has_perms() const { return !perms_.empty(); }
  const Perm& perm_of(int a) const { return perms_[a]; }
  /// Index of a permutation, -1 if absent (only for perm-backed groups).
  int index_of_perm(const Perm& p) const;
  int degree() const { return degree_; }

  /// Labelled generators this group was closed from (empty for tables).
  const std::map<std::string, int>& generators() const { return generators_; }

  bool equal_tables(const FiniteGroup& other) const;

 private:
  int n_ = 0;
  int degree_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  std::vector<std::string> names_;
  std::vector<Perm> perms_;
  std::map<std::string, int> generators_;
  std::map<Perm, int> perm_index_;
  void finish_from_table();
};

/// Direct product; element (a, b) has index a * |B| + b, names "a|b".
FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

/// Subgroup on the given element subset (must be closed; sorted indices).
/// Returns the subgroup with its index map back into the parent.
struct Subgroup {
  FiniteGroup group;
  std::vector<int> to_parent;           // subgroup index -> parent index
  std::map<int, int> from_parent;       // parent index -> subgroup index
};
Subgroup subgroup_of(const FiniteGroup& g, std::vector<int> elements);

}  // namespace groupeq
