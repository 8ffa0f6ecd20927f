#pragma once

#include <string_view>

#include "archimedean/polyhedral_map.hpp"

namespace archimedean {

/// The five seeds: "tetrahedron", "cube", "octahedron", "dodecahedron",
/// "icosahedron". Throws std::invalid_argument on anything else.
PolyhedralMap platonic_seed(std::string_view name);

/// Swap the roles of vertices and faces: (sigma, alpha) -> (phi, alpha).
/// Counts go (V, E, F) -> (F, E, V) and dual(dual(m)) == m exactly.
PolyhedralMap dual(const PolyhedralMap& m);

/// Cut every corner: V' = 2E, E' = 3E, F' = F + V. Each degree-d vertex
/// becomes a d-gon, each p-gon becomes a 2p-gon.
PolyhedralMap truncate(const PolyhedralMap& m);

/// One vertex per original edge: V' = E, E' = 2E, F' = F + V. Original
/// faces shrink to their midpoint polygons; vertices become their figures.
PolyhedralMap ambo(const PolyhedralMap& m);

/// ambo∘ambo: V' = 2E, E' = 4E, F' = F + V + E.
PolyhedralMap expand(const PolyhedralMap& m);

/// truncate∘ambo: V' = 4E, E' = 6E, F' = F + V + E. Output is 3-valent
/// with all faces even, hence bipartite.
PolyhedralMap bevel(const PolyhedralMap& m);

/// Alternation of the bevel: 2-color the bevel's vertices, keep one class,
/// turn each removed vertex into a triangle, halve each face, and contract
/// the digons left by the bevel's square faces. V' = 2E, E' = 5E,
/// F' = F + V + 2E. The two color classes give the two mirror forms.
/// Throws std::logic_error if the bevel fails to 2-color.
PolyhedralMap snub(const PolyhedralMap& m);

/// n-gonal prism: V = 2n, E = 3n, F = n + 2, figure 4.4.n. n >= 3.
PolyhedralMap prism(int n);

/// n-gonal antiprism: V = 2n, E = 4n, F = 2n + 2, figure 3.3.3.n. n >= 3.
PolyhedralMap antiprism(int n);

}  // namespace archimedean
