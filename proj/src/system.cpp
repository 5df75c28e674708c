#include "groupeq/system.hpp"

#include <algorithm>
#include <stdexcept>

namespace groupeq {

void System::declare(const std::string& var) {
  auto it = std::lower_bound(variables.begin(), variables.end(), var);
  if (it == variables.end() || *it != var) variables.insert(it, var);
}

bool System::declared(const std::string& var) const {
  return std::binary_search(variables.begin(), variables.end(), var);
}

EqWord word_inverse(const GroupStructure& g, const EqWord& w) {
  EqWord out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) {
    if (const auto* c = std::get_if<GroupValue>(&*it)) {
      out.push_back(ginv(g, *c));
    } else {
      Occurrence o = std::get<Occurrence>(*it);
      o.exponent = -o.exponent;
      out.push_back(std::move(o));
    }
  }
  return out;
}

GroupValue evaluate_word(const GroupStructure& g, const EqWord& w, const Assignment& a) {
  GroupValue acc = gid(g);
  for (const auto& tok : w) {
    if (const auto* c = std::get_if<GroupValue>(&tok)) {
      if (!value_in_structure(g, *c))
        throw std::invalid_argument("evaluate: constant from the wrong group");
      acc = gmul(g, acc, *c);
      continue;
    }
    const auto& o = std::get<Occurrence>(tok);
    auto it = a.find(o.var);
    if (it == a.end())
      throw std::invalid_argument("evaluate: no value assigned to variable " + o.var);
    if (!value_in_structure(g, it->second))
      throw std::invalid_argument("evaluate: value from the wrong group for " + o.var);
    GroupValue v = apply_aut(o.twist, g, it->second);
    if (o.exponent < 0) v = ginv(g, v);
    acc = gmul(g, acc, v);
  }
  return acc;
}

bool check_witness(const GroupStructure& g, const System& s, const Assignment& a) {
  for (const auto& var : s.variables)
    if (!a.count(var)) throw std::invalid_argument("check_witness: assignment not total");
  for (const auto& eq : s.equations)
    if (!is_identity_value(g, evaluate_word(g, eq, a))) return false;
  for (const auto& neq : s.inequations)
    if (is_identity_value(g, evaluate_word(g, neq, a))) return false;
  for (const auto& [var, set] : s.constraints)
    if (!recset_member(g, set, a.at(var))) return false;
  return true;
}

void validate_system(const GroupStructure& g, const System& s) {
  auto check_word = [&](const EqWord& w) {
    for (const auto& tok : w) {
      if (const auto* c = std::get_if<GroupValue>(&tok)) {
        if (!value_in_structure(g, *c))
          throw std::invalid_argument("system: constant from the wrong group");
        continue;
      }
      const auto& o = std::get<Occurrence>(tok);
      if (!s.declared(o.var))
        throw std::invalid_argument("system: undeclared variable " + o.var);
      if (o.exponent != 1 && o.exponent != -1)
        throw std::invalid_argument("system: exponent must be +1 or -1");
      validate_automorphism(o.twist, g);
    }
  };
  for (const auto& eq : s.equations) check_word(eq);
  for (const auto& neq : s.inequations) check_word(neq);
  for (const auto& [var, set] : s.constraints) {
    if (!s.declared(var))
      throw std::invalid_argument("system: constraint on undeclared variable " + var);
    validate_recset(g, set);
  }
}

Verdict combine_verdicts(const std::vector<Verdict>& verdicts, CombineMode mode) {
  if (mode == CombineMode::Any) {
    const Verdict* first_unknown = nullptr;
    for (const auto& v : verdicts) {
      if (v.is_sat()) return v;
      if (v.is_unknown() && !first_unknown) first_unknown = &v;
    }
    if (first_unknown) return *first_unknown;
    return Verdict::unsat();
  }
  const Verdict* first_unknown = nullptr;
  for (const auto& v : verdicts) {
    if (v.is_unsat()) return v;
    if (v.is_unknown() && !first_unknown) first_unknown = &v;
  }
  if (first_unknown) return *first_unknown;
  Assignment merged;
  for (const auto& v : verdicts)
    for (const auto& [var, val] : v.witness) {
      auto it = merged.find(var);
      if (it == merged.end())
        merged.emplace(var, val);
      else if (!value_eq(it->second, val))
        throw std::logic_error("combine_verdicts: conflicting assignments to " + var);
    }
  return Verdict::sat(std::move(merged));
}

}  // namespace groupeq
