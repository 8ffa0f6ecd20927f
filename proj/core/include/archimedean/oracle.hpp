#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "archimedean/counts.hpp"
#include "archimedean/vertex_figure.hpp"

namespace archimedean {

/// The configuration arguments that kill arithmetic-feasible figures. Each
/// is a purely local condition on the cyclic sequence:
///  - R4TriangleNeighbors: with four faces at a vertex, some triangle entry
///    must have equal cyclic neighbors (the figure is 3.p.q.p up to
///    rotation/reflection);
///  - R3TriangleEqualPair: with three faces, one a triangle, the other two
///    must be equal;
///  - R3TriangleParity: ...and their common degree must be even (or 3);
///  - R3SquareEvenness: with three faces, smallest a square, all degrees
///    must be even (prism figures 4.4.m are exempt: the family exists for
///    odd m as well);
///  - R3PentagonEqualPair: with three faces, smallest a pentagon, the other
///    two must be equal.
enum class SpuriousFilter {
  R4TriangleNeighbors,
  R3TriangleEqualPair,
  R3TriangleParity,
  R3SquareEvenness,
  R3PentagonEqualPair,
};

std::string_view to_string(SpuriousFilter f);

/// Positive denominator plus integrality of V, E and every F_p.
/// Necessary but not sufficient for realizability -- the gap is exactly
/// what oracle_diff exhibits. Requires 3 <= r <= 5.
Feasibility arithmetic_feasible(const VertexFigure& figure);

/// All arithmetic-feasible canonical figures with r in {3,4,5} and
/// 3 <= p_i <= p_max, enumerated over cyclic orders (3.4.4.5 and 3.4.5.4
/// are distinct candidates), sorted by (r, sequence). p_max >= 5.
std::vector<VertexFigure> oracle_enumerate(int p_max);

/// The filter that kills a figure, or empty if none applies (for realized
/// and family figures).
std::optional<SpuriousFilter> killing_filter(const VertexFigure& figure);

struct SpuriousFigure {
  VertexFigure figure;
  SpuriousFilter killed_by;

  auto operator<=>(const SpuriousFigure&) const = default;
};

/// Difference between brute-force arithmetic and the case analysis.
/// realized ⊆ feasible; spurious = feasible minus realized, each entry
/// annotated; any feasible figure that is neither realized, a family
/// instance, nor killed by a filter lands in unexplained (and would
/// falsify the classification).
struct OracleReport {
  int p_max = 0;
  std::vector<VertexFigure> feasible;
  std::vector<VertexFigure> realized;
  std::vector<SpuriousFigure> spurious;
  std::vector<VertexFigure> unexplained;

  bool complete() const { return unexplained.empty(); }
};

/// Runs the sweep and classifies every feasible figure. p_max >= 12, large
/// enough to exercise the parity bound in the r = 3 triangle case.
OracleReport oracle_diff(int p_max);

}  // namespace archimedean
