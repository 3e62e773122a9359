#pragma once

#include <string>

#include <json.hpp>

#include "kbar/tree.hpp"

namespace kbar {

// Tree file schema (documented in the README):
//   {"n": N, "m": M, "root": {"interior": [item...], "boundary": [item...]}}
// with items {"ip": k}, {"bp": k}, {"sphere": {"children": [...]}},
// {"disk": {"interior": [...], "boundary": [...]}}. The root boundary list
// carries cyclic semantics.
nlohmann::json tree_to_json(const BubbleTree& t);
BubbleTree tree_from_json(const nlohmann::json& j);  // throws Error(ParseError)
BubbleTree tree_from_string(const std::string& s);

// Dual tree schema:
//   {"n": N, "m": M, "tree": node} with node = {"ip": k} | {"bp": k} |
//   {"vertex": {"spatial": [...], "planar": [...]}}.
nlohmann::json dual_to_json(const DualTree& d);
DualTree dual_from_json(const nlohmann::json& j);

}  // namespace kbar
