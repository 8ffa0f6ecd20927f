#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace archimedean {

/// A map on the sphere as a rotation system. Darts are the 2E directed
/// half-edges, numbered 0..2E-1. sigma cycles the darts sharing an origin
/// vertex (the rotation), alpha is the fixed-point-free involution pairing
/// the two darts of each edge, and faces are the orbits of the composite
///
///   phi(d) = sigma(alpha(d))
///
/// which is the one face-orbit convention used project-wide. Construction
/// validates: alpha an involution without fixed points, <sigma, alpha>
/// transitive (connected map), and |orbits(sigma)| - E + |orbits(phi)| = 2
/// (genus zero). Maps are immutable after construction.
class PolyhedralMap {
 public:
  /// Build from explicit permutations. Throws std::invalid_argument if any
  /// invariant fails.
  static PolyhedralMap from_permutations(std::vector<int> sigma,
                                         std::vector<int> alpha);

  /// Build from consistently oriented face lists: each face a cyclic list
  /// of vertex ids 0..V-1, every directed pair (u, v) appearing in exactly
  /// one face. Faces must have size >= 3 and no repeated vertices.
  static PolyhedralMap from_faces(const std::vector<std::vector<int>>& faces);

  int dart_count() const { return static_cast<int>(sigma_.size()); }
  int vertex_count() const { return n_vertices_; }
  int edge_count() const { return dart_count() / 2; }
  int face_count() const { return n_faces_; }

  int sigma(int d) const { return sigma_[d]; }
  int alpha(int d) const { return alpha_[d]; }
  int phi(int d) const { return sigma_[alpha_[d]]; }

  /// Vertex ids are sigma-orbit indices in dart discovery order; face ids
  /// are phi-orbit indices likewise. Both deterministic for a given map.
  int vertex_of(int d) const { return vertex_of_[d]; }
  int face_of(int d) const { return face_of_[d]; }

  int vertex_degree(int v) const { return vertex_degree_[v]; }
  int face_size(int f) const { return face_size_[f]; }

  /// One representative dart per vertex / per face (the smallest).
  int dart_of_vertex(int v) const { return vertex_dart_[v]; }
  int dart_of_face(int f) const { return face_dart_[f]; }

  /// Neighbouring vertex across dart d.
  int head_of(int d) const { return vertex_of_[alpha_[d]]; }

  /// Faces as cyclic vertex-id lists: face f starts at its smallest dart
  /// and follows phi. The exported document is the line-oriented format
  ///   V E F
  /// followed by one space-separated line of vertex ids per face.
  std::vector<std::vector<int>> face_lists() const;
  std::string face_document() const;

 private:
  PolyhedralMap() = default;
  void index();    // computes orbits and per-dart tables
  void validate() const;

  std::vector<int> sigma_;
  std::vector<int> alpha_;
  std::vector<int> vertex_of_;
  std::vector<int> face_of_;
  std::vector<int> vertex_dart_;
  std::vector<int> face_dart_;
  std::vector<int> vertex_degree_;
  std::vector<int> face_size_;
  int n_vertices_ = 0;
  int n_faces_ = 0;
};

}  // namespace archimedean
