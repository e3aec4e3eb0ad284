#pragma once

#include <string>
#include <utility>

#include <json.hpp>

#include "bfi/independence.hpp"
#include "bfi/mass.hpp"
#include "bfi/product_space.hpp"

namespace bfi {

// Mass function value form:
//   {"frame": ["w1","w2"], "focals": [{"set": ["w1"], "mass": 0.2}, ...]}
// "set": [] denotes ∅; focal order is canonical (cardinality, mask); set
// members are sorted labels.
nlohmann::json mass_to_json(const MassFunction& m);
MassFunction mass_from_json(const nlohmann::json& j);

// Dataset form: {"frame": [...], "items": [<mass value form>, ...]}. Items
// may omit their redundant "frame" key on input; the writer always emits it.
nlohmann::json dataset_to_json(const MassDataset& ds);
MassDataset dataset_from_json(const nlohmann::json& j);

// Product mass form:
//   {"frame": {"left": [...], "right": [...]},
//    "focals": [{"set": [["w1","I"], ...], "mass": 0.01}, ...]}
nlohmann::json product_mass_to_json(const MassFunction& m, const ProductFrame& pf);
std::pair<ProductFrame, MassFunction> product_mass_from_json(const nlohmann::json& j);

// File helpers; errors carry the path and offending field.
MassFunction load_mass_file(const std::string& path);
MassDataset load_dataset_file(const std::string& path);

}  // namespace bfi
