#pragma once

#include <vector>

#include "archimedean/counts.hpp"
#include "archimedean/polyhedral_map.hpp"
#include "archimedean/vertex_figure.hpp"

namespace archimedean {

/// Everything worth knowing about a realized map. Check failures are
/// reported in the flags, never thrown.
struct MapReport {
  CountData counts;                   // with face and valence counts filled
  std::vector<VertexFigure> figures;  // canonical figure at each vertex, by id
  bool uniform = false;               // all figures equal
  bool bipartite = false;
  bool euler_ok = false;
  bool lemma1_ok = false;

  /// The common figure; only meaningful when uniform.
  const VertexFigure& figure() const;
};

/// Reads counts, per-vertex figures (face sizes in rotation order),
/// uniformity and bipartiteness off the rotation system.
MapReport analyze(const PolyhedralMap& m);

}  // namespace archimedean
