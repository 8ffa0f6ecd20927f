#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archimedean/classify.hpp"
#include "archimedean/counts.hpp"
#include "archimedean/vertex_figure.hpp"

namespace archimedean {

/// Reference data for one solid or family: the display name, the
/// vertex-configuration symbol in ASCII (3.4^3, (3.4)^2, 4^2.m), the
/// canonical figure and full counts for sporadic entries, and the least
/// parameter for the two families.
struct CatalogEntry {
  std::string name;
  SolidClass cls = SolidClass::Platonic;
  std::string symbol;
  std::optional<VertexFigure> figure;  // sporadic only
  std::optional<CountData> counts;     // sporadic only
  std::optional<int> family_min;       // families only
  std::vector<ProofCase> cases;
  std::string notes;

  bool is_family() const { return family_min.has_value(); }

  /// "great rhombicosidodecahedron" -> "great-rhombicosidodecahedron".
  std::string kebab_name() const;
};

/// The full reference table: 5 regular solids, 13 semiregular ones, and
/// the prism and antiprism families, in deterministic order.
const std::vector<CatalogEntry>& reference_catalog();

/// Lookup by display or kebab name; nullptr when unknown.
const CatalogEntry* find_entry(std::string_view name);

/// Expand a vertex-configuration symbol to its figure, preserving cyclic
/// order: "(3.4)^2" -> 3.4.3.4, "3.4^3" -> 3.4.4.4. Grammar: groups
/// separated by '.', each group N, N^K, or (N.N...)^K; no whitespace.
/// Throws std::invalid_argument on malformed input.
VertexFigure parse_symbol(std::string_view s);

/// Canonical ASCII symbol for a figure: repeated whole patterns become a
/// parenthesized power ("(3.4)^2"), otherwise runs compress to N^K.
/// parse_symbol(format_symbol(f)) == f.
std::string format_symbol(const VertexFigure& figure);

/// Serializations of the catalog. Family rows carry their counts
/// symbolically in terms of the parameter m ("2m", "m+2"). Both outputs
/// are byte-stable.
std::string catalog_json();
std::string catalog_csv();

}  // namespace archimedean
