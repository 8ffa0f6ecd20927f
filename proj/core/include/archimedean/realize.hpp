#pragma once

#include <optional>
#include <string_view>

#include "archimedean/catalog.hpp"
#include "archimedean/polyhedral_map.hpp"

namespace archimedean {

/// Construct the map for a catalog entry: seeds for the regular solids,
/// truncate/ambo/expand/bevel/snub on the right seed for the semiregular
/// ones, generators for the families (which need the parameter m).
/// Throws std::invalid_argument for an unknown entry or a family
/// parameter below bound, std::logic_error if a family call lacks m.
PolyhedralMap realize(const CatalogEntry& entry,
                      std::optional<int> m = std::nullopt);

/// Name-based convenience overload; accepts display or kebab names.
PolyhedralMap realize(std::string_view name,
                      std::optional<int> m = std::nullopt);

}  // namespace archimedean
