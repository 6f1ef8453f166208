#pragma once

#include "hookchar/paths.hpp"
#include "hookchar/qpoly.hpp"
#include "hookchar/schur.hpp"
#include "hookchar/shapes.hpp"

#include <json.hpp>

#include <string_view>

namespace hookchar {

using Json = nlohmann::ordered_json;

Json to_json(const LaurentPoly& p);
Json to_json(const Partition& lambda);
Json to_json(const SchurExpansion& f);
Json to_json(const LatticePath& g);
Json to_json(const StdTableau& tau);

LaurentPoly poly_from_json(const Json& j);
Partition partition_from_json(const Json& j);
SchurExpansion expansion_from_json(const Json& j);
LatticePath path_from_json(const Json& j);
StdTableau tableau_from_json(const Json& j);

/// "4,2,2,1,1"; the empty string is the empty partition.
Partition parse_partition(std::string_view text);
/// Rows bottom to top: "1,2,4,8/3,7/5,10/6/9".
StdTableau parse_tableau(std::string_view text);

}  // namespace hookchar
