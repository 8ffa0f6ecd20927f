#include "archimedean/realize.hpp"

#include <stdexcept>

#include "archimedean/operators.hpp"

namespace archimedean {

PolyhedralMap realize(const CatalogEntry& entry, std::optional<int> m) {
  if (entry.is_family()) {
    if (!m)
      throw std::logic_error("realize: family entry \"" + entry.name +
                             "\" needs a parameter");
    if (*m < 3)
      throw std::invalid_argument("realize: family parameter below 3");
    return entry.cls == SolidClass::PrismFamily ? prism(*m) : antiprism(*m);
  }
  if (m)
    throw std::invalid_argument("realize: parameter given for sporadic entry");

  const std::string& n = entry.name;
  if (entry.cls == SolidClass::Platonic) return platonic_seed(n);

  if (n.starts_with("truncated "))
    return truncate(platonic_seed(n.substr(10)));
  if (n == "cuboctahedron") return ambo(platonic_seed("cube"));
  if (n == "icosidodecahedron") return ambo(platonic_seed("dodecahedron"));
  if (n == "small rhombicuboctahedron") return expand(platonic_seed("cube"));
  if (n == "small rhombicosidodecahedron")
    return expand(platonic_seed("dodecahedron"));
  if (n == "great rhombicuboctahedron") return bevel(platonic_seed("cube"));
  if (n == "great rhombicosidodecahedron")
    return bevel(platonic_seed("dodecahedron"));
  if (n == "snub cube") return snub(platonic_seed("cube"));
  if (n == "snub dodecahedron") return snub(platonic_seed("dodecahedron"));

  throw std::invalid_argument("realize: no construction for \"" + n + "\"");
}

PolyhedralMap realize(std::string_view name, std::optional<int> m) {
  const CatalogEntry* entry = find_entry(name);
  if (!entry)
    throw std::invalid_argument("realize: unknown entry \"" +
                                std::string(name) + "\"");
  return realize(*entry, m);
}

}  // namespace archimedean
