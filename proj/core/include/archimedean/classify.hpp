#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "archimedean/vertex_figure.hpp"

namespace archimedean {

enum class SolidClass { Platonic, Archimedean, PrismFamily, AntiprismFamily };

/// Which branch of the case analysis produced an entry: cases split on the
/// valence r, then on the smallest face present (triangle / square /
/// pentagon).
enum class ProofCase { R5Triangle, R4Triangle, R3Triangle, R3Square, R3Pentagon };

std::string_view to_string(SolidClass c);
std::string_view to_string(ProofCase c);  // "r5-triangle", ...

/// One row of the classification: a sporadic solid with a concrete vertex
/// figure, or an infinite family (prism/antiprism) with its least parameter.
/// The per-case enumerations also emit single family instances (the
/// triangular prism); merging folds those into the family row.
struct Classification {
  SolidClass cls = SolidClass::Platonic;
  std::string name;
  std::optional<VertexFigure> figure;  // sporadic entries and family instances
  std::optional<int> family_min;       // families only: least m
  std::vector<ProofCase> cases;        // provenance; prisms end up with two

  bool is_family() const { return family_min.has_value(); }

  /// Concrete figure: the stored one, or the family pattern at m (which
  /// must be >= family_min).
  VertexFigure instantiate(std::optional<int> m = std::nullopt) const;
};

/// Figure pattern of a family: prisms 4.4.m, antiprisms 3.3.3.m (m >= 3).
VertexFigure family_figure(SolidClass family, int m);

/// Inverse match: the parameter m if the figure is an instance of the
/// family pattern, including the degenerate ends (4.4.4, 3.3.3.3).
std::optional<int> family_parameter(SolidClass family, const VertexFigure& figure);

/// The valence bound r <= 5, established by exact arithmetic: at r = 6 the
/// all-triangle figure already has denominator zero, and the denominator
/// only decreases as r grows or degrees increase.
int max_valence();

/// r = 5: snub dodecahedron, snub cube, icosahedron.
std::vector<Classification> enumerate_case_r5();

/// r = 4: small rhombicosidodecahedron, icosidodecahedron, small
/// rhombicuboctahedron, cuboctahedron, octahedron, and the antiprisms.
std::vector<Classification> enumerate_case_r4();

/// r = 3, split by the smallest degree present (3, 4 or 5): the truncated
/// solids, the great rhombi- solids, tetrahedron/cube/dodecahedron, the
/// triangular prism and the prism family.
std::vector<Classification> enumerate_case_r3();

/// Union of the three cases with family instances folded into their family
/// rows: exactly 5 Platonic + 13 Archimedean + 2 families. Throws
/// std::logic_error if the merge produces anything else.
std::vector<Classification> enumerate_all();

/// The inequality table behind the r = 4 triangle case: all (p, q) with
/// (p-3)(2q-3) < 9 and q <= 5; the p = 3 column continues for every q as
/// the antiprism family. Exposed for verification.
std::vector<std::pair<int, int>> r4_inequality_pairs();

}  // namespace archimedean
