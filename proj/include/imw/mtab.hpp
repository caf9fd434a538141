#pragma once

// Text and JSON encodings of the workbench's structures.
//
// mtab v1 (line oriented, '#' starts a comment, indices 0-based):
//
//   mtab v1
//   n=3
//   id=0
//   labels=1,e,t          (optional, CSV; quote fields containing , or ")
//   0 1 2
//   1 1 2
//   2 2 1
//   inv=0,1,2             (optional; must match the computed inverses)

#include <string>
#include <string_view>

#include <json.hpp>

#include "imw/constructions.hpp"

namespace imw {

/// Throws SyntaxError (witness {line, column}, both 1-based) or any
/// validation error of the table.
FiniteMonoid parse_mtab(std::string_view text);

/// Canonical text; emits inv= when the monoid is inverse.
std::string serialize_mtab(const FiniteMonoid& m);

std::vector<std::string> parse_csv(std::string_view text);
std::string format_csv(const std::vector<std::string>& fields);

using Json = nlohmann::json;

inline constexpr int kJsonSchema = 1;

Json monoid_to_json(const FiniteMonoid& m);
FiniteMonoid monoid_from_json(const Json& j);

Json almost_action_to_json(const AlmostAction& aa);
AlmostAction almost_action_from_json(const Json& j);

Json gluing_map_to_json(const GluingMap& gm);
GluingMap gluing_map_from_json(const Json& j);

Json factor_system_to_json(const FactorSystem& fs);
FactorSystem factor_system_from_json(const Json& j);

}  // namespace imw
