#pragma once

#include <cubline/census.hpp>

#include <json.hpp>

#include <string>

namespace cubline {

inline constexpr const char* kVersion = "0.1.0";

// Arrangement file format (JSON):
//
//   {
//     "label": "EL6",
//     "components": [
//       { "kind": "cubic",
//         "exact":   [[num, den, ex, ey, ez], ...],   // optional
//         "numeric": [[re, im], ...] },               // optional
//       ...
//     ],
//     "product": [[num, den, ex, ey, ez], ...]        // optional
//   }
//
// Each component needs exact or numeric data (or both, which must agree).
// Numerators and denominators are JSON integers, or decimal strings when
// they do not fit in 64 bits. Anything malformed throws ParseError.

nlohmann::ordered_json poly_to_json(const HomogeneousPoly& f);
HomogeneousPoly poly_from_json(const nlohmann::json& j);

nlohmann::ordered_json arrangement_to_json(const Arrangement& arr);
Arrangement arrangement_from_json(const nlohmann::json& j);

Arrangement load_arrangement(const std::string& path);
void save_arrangement(const std::string& path, const Arrangement& arr);

}  // namespace cubline
