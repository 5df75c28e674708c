#pragma once

// Group files: UTF-8 JSON naming a group structure, its generator
// labels, automorphism registry and recognisable-set definitions.
// Canonical form is nlohmann's sorted-key two-space dump; save ∘ load is
// the identity on it. Loading re-validates every structural invariant.

#include "groupeq/zoo.hpp"

#include <nlohmann/json_fwd.hpp>

#include <string>

namespace groupeq {

nlohmann::json group_to_json(const GroupEnv& env);
GroupEnv group_from_json(const nlohmann::json& j);

std::string save_group(const GroupEnv& env);  // canonical text
GroupEnv load_group(const std::string& text);

GroupEnv load_group_file(const std::string& path);
void save_group_file(const GroupEnv& env, const std::string& path);

/// Element literal in structure-aligned syntax: element names, integer
/// vectors, word strings, arrays for tuples, {"k":..,"q":..} pairs.
nlohmann::json value_to_json(const GroupStructure& g, const GroupValue& v);
GroupValue value_from_json(const GroupStructure& g, const nlohmann::json& j);

/// As value_to_json, but a value equal to a label prints as the label.
nlohmann::json value_to_json_labeled(const GroupEnv& env, const GroupValue& v);

nlohmann::json aut_to_json(const GroupStructure& g, const AutPtr& a);
AutPtr aut_from_json(const GroupStructure& g, const nlohmann::json& j);

nlohmann::json recset_to_json(const GroupStructure& g, const RecSet& set);
RecSet recset_from_json(const GroupStructure& g, const nlohmann::json& j);

}  // namespace groupeq
