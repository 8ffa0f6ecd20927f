#include "archimedean/operators.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace archimedean {

namespace {

// Oriented face lists for the hardcoded seeds: every directed edge appears
// in exactly one face, which from_faces checks again.
const std::vector<std::vector<int>> kTetrahedronFaces = {
    {0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}};

const std::vector<std::vector<int>> kCubeFaces = {
    {0, 3, 2, 1}, {4, 5, 6, 7}, {0, 1, 5, 4},
    {1, 2, 6, 5}, {2, 3, 7, 6}, {3, 0, 4, 7}};

// apex 0, upper band 1-5, lower band 6-10, apex 11
const std::vector<std::vector<int>> kIcosahedronFaces = {
    {0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},   {0, 5, 1},
    {1, 6, 2},  {2, 7, 3},  {3, 8, 4},  {4, 9, 5},   {5, 10, 1},
    {2, 6, 7},  {3, 7, 8},  {4, 8, 9},  {5, 9, 10},  {1, 10, 6},
    {6, 11, 7}, {7, 11, 8}, {8, 11, 9}, {9, 11, 10}, {10, 11, 6}};

/// Walk the sigma-orbit of v starting at its representative dart.
std::vector<int> vertex_orbit(const PolyhedralMap& m, int v) {
  std::vector<int> darts;
  const int start = m.dart_of_vertex(v);
  int d = start;
  do {
    darts.push_back(d);
    d = m.sigma(d);
  } while (d != start);
  return darts;
}

std::vector<int> face_orbit(const PolyhedralMap& m, int f) {
  std::vector<int> darts;
  const int start = m.dart_of_face(f);
  int d = start;
  do {
    darts.push_back(d);
    d = m.phi(d);
  } while (d != start);
  return darts;
}

/// Reversed cycle keeping the first element in place: (e0, ek-1, ..., e1).
std::vector<int> reverse_cycle(std::vector<int> cycle) {
  std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

/// 2-coloring of the vertex graph, or empty if an odd cycle shows up.
std::vector<int> two_color(const PolyhedralMap& m) {
  std::vector<int> color(m.vertex_count(), -1);
  std::vector<int> stack;
  for (int root = 0; root < m.vertex_count(); ++root) {
    if (color[root] != -1) continue;
    color[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (int d : vertex_orbit(m, v)) {
        const int w = m.head_of(d);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          return {};
        }
      }
    }
  }
  return color;
}

}  // namespace

PolyhedralMap platonic_seed(std::string_view name) {
  if (name == "tetrahedron") return PolyhedralMap::from_faces(kTetrahedronFaces);
  if (name == "cube") return PolyhedralMap::from_faces(kCubeFaces);
  if (name == "icosahedron")
    return PolyhedralMap::from_faces(kIcosahedronFaces);
  if (name == "octahedron") return dual(platonic_seed("cube"));
  if (name == "dodecahedron") return dual(platonic_seed("icosahedron"));
  throw std::invalid_argument("unknown seed: " + std::string(name));
}

PolyhedralMap dual(const PolyhedralMap& m) {
  std::vector<int> sigma(m.dart_count()), alpha(m.dart_count());
  for (int d = 0; d < m.dart_count(); ++d) {
    sigma[d] = m.phi(d);
    alpha[d] = m.alpha(d);
  }
  return PolyhedralMap::from_permutations(std::move(sigma), std::move(alpha));
}

PolyhedralMap truncate(const PolyhedralMap& m) {
  // new vertices = darts: v_d sits on dart d near its origin
  std::vector<std::vector<int>> faces;
  faces.reserve(m.face_count() + m.vertex_count());
  for (int f = 0; f < m.face_count(); ++f) {
    std::vector<int> gon;  // 2p-gon: shortened edges alternate with corners
    for (int d : face_orbit(m, f)) {
      gon.push_back(d);
      gon.push_back(m.alpha(d));
    }
    faces.push_back(std::move(gon));
  }
  for (int v = 0; v < m.vertex_count(); ++v)
    faces.push_back(reverse_cycle(vertex_orbit(m, v)));
  return PolyhedralMap::from_faces(faces);
}

PolyhedralMap ambo(const PolyhedralMap& m) {
  // new vertices = edges: number them by the smaller dart
  std::vector<int> edge_id(m.dart_count(), -1);
  int next = 0;
  for (int d = 0; d < m.dart_count(); ++d)
    if (edge_id[d] == -1) edge_id[d] = edge_id[m.alpha(d)] = next++;

  std::vector<std::vector<int>> faces;
  faces.reserve(m.face_count() + m.vertex_count());
  for (int f = 0; f < m.face_count(); ++f) {
    std::vector<int> gon;
    for (int d : face_orbit(m, f)) gon.push_back(edge_id[d]);
    faces.push_back(std::move(gon));
  }
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<int> gon;
    for (int d : reverse_cycle(vertex_orbit(m, v))) gon.push_back(edge_id[d]);
    faces.push_back(std::move(gon));
  }
  return PolyhedralMap::from_faces(faces);
}

PolyhedralMap expand(const PolyhedralMap& m) { return ambo(ambo(m)); }

PolyhedralMap bevel(const PolyhedralMap& m) { return truncate(ambo(m)); }

PolyhedralMap snub(const PolyhedralMap& m) {
  const PolyhedralMap b = bevel(m);

  const std::vector<int> color = two_color(b);
  if (color.empty())
    throw std::logic_error("snub: bevel failed to 2-color");

  // keep color class 0 (class 1 would give the mirror form)
  std::vector<int> kept_id(b.vertex_count(), -1);
  int next = 0;
  for (int v = 0; v < b.vertex_count(); ++v)
    if (color[v] == 0) kept_id[v] = next++;

  std::vector<std::vector<int>> faces;

  // halve the faces; the bevel's square faces become digons, which are the
  // contracted edges, so they emit nothing
  const auto face_cycles = b.face_lists();
  for (const auto& cycle : face_cycles) {
    if (cycle.size() == 4) continue;
    std::vector<int> gon;
    for (int v : cycle)
      if (color[v] == 0) gon.push_back(kept_id[v]);
    faces.push_back(std::move(gon));
  }

  // every removed vertex becomes a triangle over its three neighbours; the
  // face chords next to it fix the orientation (triangle = reversed chords)
  std::map<int, std::map<int, int>> chords;  // y -> (chord tail -> head)
  for (const auto& cycle : face_cycles) {
    const int k = static_cast<int>(cycle.size());
    for (int i = 0; i < k; ++i) {
      const int y = cycle[i];
      if (color[y] != 1) continue;
      const int u = cycle[(i + k - 1) % k], w = cycle[(i + 1) % k];
      chords[y][u] = w;
    }
  }
  for (const auto& [y, next_of] : chords) {
    if (next_of.size() != 3)
      throw std::logic_error("snub: removed vertex not 3-valent");
    const int a = next_of.begin()->first;
    const int c = next_of.begin()->second;
    const int e = next_of.at(c);
    if (next_of.at(e) != a)
      throw std::logic_error("snub: chords do not close a triangle");
    faces.push_back({kept_id[a], kept_id[e], kept_id[c]});
  }

  return PolyhedralMap::from_faces(faces);
}

PolyhedralMap prism(int n) {
  if (n < 3) throw std::invalid_argument("prism: n must be >= 3");
  std::vector<std::vector<int>> faces;
  std::vector<int> bottom, top;
  for (int i = n - 1; i >= 0; --i) bottom.push_back(i);
  for (int i = 0; i < n; ++i) top.push_back(n + i);
  faces.push_back(bottom);
  faces.push_back(top);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    faces.push_back({i, j, n + j, n + i});
  }
  return PolyhedralMap::from_faces(faces);
}

PolyhedralMap antiprism(int n) {
  if (n < 3) throw std::invalid_argument("antiprism: n must be >= 3");
  std::vector<std::vector<int>> faces;
  std::vector<int> bottom, top;
  for (int i = n - 1; i >= 0; --i) bottom.push_back(i);
  for (int i = 0; i < n; ++i) top.push_back(n + i);
  faces.push_back(bottom);
  faces.push_back(top);
  for (int i = 0; i < n; ++i) {
    const int j = (i + 1) % n;
    faces.push_back({i, j, n + i});          // lower triangle
    faces.push_back({n + i, j, n + j});      // upper triangle
  }
  return PolyhedralMap::from_faces(faces);
}

}  // namespace archimedean
