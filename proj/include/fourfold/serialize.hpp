#pragma once

#include "fourfold/catalog.hpp"
#include "fourfold/model.hpp"
#include "fourfold/symbolic.hpp"

#include <json.hpp>

namespace fourfold {

inline constexpr const char* kManifoldSchema = "fourfold.manifold/1";

nlohmann::json to_json(const SymbolicValue& v);
SymbolicValue symbolic_from_json(const nlohmann::json& j);

nlohmann::json to_json(const SpinCStructure& g);
SpinCStructure spinc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Manifold& m);
// Summand records naming several atoms are rebuilt from `catalog` and must
// agree with the stored characteristic data.
Manifold manifold_from_json(const nlohmann::json& j, const Catalog& catalog = {});

// A catalog file holds {"manifolds": [...]} or a single manifold document.
void load_catalog_file(const std::string& path, Catalog& catalog);

}  // namespace fourfold
