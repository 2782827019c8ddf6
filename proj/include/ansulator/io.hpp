#pragma once

#include <json.hpp>
#include <string>

#include "ansulator/cyclotomic.hpp"
#include "ansulator/frobenius.hpp"
#include "ansulator/fusion_category.hpp"

namespace ansu {

// exactnum wire form: {"order": N, "coeffs": ["p/q", ...]} with exactly N
// coefficient strings in lowest terms.
nlohmann::json cyclotomic_to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json category_to_json(const FusionData& d);
FusionData category_from_json(const nlohmann::json& j);

// load runs the validator and throws ValidationError on violations.
FusionData load_category(const std::string& path);
void save_category(const FusionData& d, const std::string& path);

nlohmann::json frobenius_to_json(const PointedFrobenius& f);
PointedFrobenius frobenius_from_json(const nlohmann::json& j,
                                     std::shared_ptr<const FusionData> category);
// loader runs verify_frobenius and refuses invalid data unless allow_invalid.
PointedFrobenius load_frobenius(const std::string& path,
                                std::shared_ptr<const FusionData> category,
                                bool allow_invalid = false);
void save_frobenius(const PointedFrobenius& f, const std::string& path);

}  // namespace ansu
