#pragma once

#include <compare>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace archimedean {

/// Canonical form of a cyclic degree sequence: the lexicographically least
/// sequence over all rotations of the input and of its reversal.
/// Throws std::invalid_argument on an empty sequence or any degree < 3.
std::vector<int> canonical_cycle(std::span<const int> degrees);

/// The cyclic sequence of face degrees around a vertex, e.g. 3.4.3.4 at a
/// vertex of the cuboctahedron. Two figures that differ by rotation or
/// reflection are the same figure; the constructor canonicalizes, so
/// equality and ordering of VertexFigure values are equality and ordering
/// of canonical forms.
class VertexFigure {
 public:
  explicit VertexFigure(std::span<const int> degrees)
      : degrees_(canonical_cycle(degrees)) {}
  VertexFigure(std::initializer_list<int> degrees)
      : VertexFigure(std::span<const int>(degrees.begin(), degrees.size())) {}

  const std::vector<int>& degrees() const { return degrees_; }

  /// Number of faces (= edges) around the vertex, written r throughout.
  int valence() const { return static_cast<int>(degrees_.size()); }

  /// How many p-gons meet at the vertex (q in the counting formulas).
  int multiplicity(int p) const;

  bool contains(int p) const { return multiplicity(p) > 0; }

  /// Sorted list of the distinct degrees appearing in the figure.
  std::vector<int> distinct_degrees() const;

  /// Degrees in weakly increasing order (the figure as a multiset).
  std::vector<int> sorted_degrees() const;

  auto operator<=>(const VertexFigure&) const = default;

  /// Dot-separated rendering of the canonical form: "3.4.3.4".
  std::string str() const;

 private:
  std::vector<int> degrees_;
};

/// Ordering used for all result sets: by valence first, then by canonical
/// sequence. Keeps every listing deterministic.
struct FigureOrder {
  bool operator()(const VertexFigure& a, const VertexFigure& b) const {
    if (a.valence() != b.valence()) return a.valence() < b.valence();
    return a.degrees() < b.degrees();
  }
};

}  // namespace archimedean
