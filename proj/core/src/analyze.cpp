#include "archimedean/analyze.hpp"

#include <stdexcept>

namespace archimedean {

const VertexFigure& MapReport::figure() const {
  if (!uniform || figures.empty())
    throw std::logic_error("MapReport::figure: map is not uniform");
  return figures.front();
}

MapReport analyze(const PolyhedralMap& m) {
  MapReport rep;

  rep.counts.vertices = m.vertex_count();
  rep.counts.edges = m.edge_count();
  rep.counts.faces = m.face_count();
  for (int f = 0; f < m.face_count(); ++f)
    ++rep.counts.face_counts[m.face_size(f)];
  for (int v = 0; v < m.vertex_count(); ++v)
    ++rep.counts.valence_counts[m.vertex_degree(v)];

  // face sizes in rotation order around each vertex
  rep.figures.reserve(m.vertex_count());
  for (int v = 0; v < m.vertex_count(); ++v) {
    std::vector<int> sizes;
    const int start = m.dart_of_vertex(v);
    int d = start;
    do {
      sizes.push_back(m.face_size(m.face_of(d)));
      d = m.sigma(d);
    } while (d != start);
    rep.figures.emplace_back(sizes);
  }

  rep.uniform = true;
  for (const auto& fig : rep.figures)
    if (!(fig == rep.figures.front())) {
      rep.uniform = false;
      break;
    }

  // 2-colorability of the vertex graph
  {
    std::vector<int> color(m.vertex_count(), -1);
    std::vector<int> stack{0};
    color[0] = 0;
    rep.bipartite = true;
    while (!stack.empty() && rep.bipartite) {
      const int v = stack.back();
      stack.pop_back();
      const int start = m.dart_of_vertex(v);
      int d = start;
      do {
        const int w = m.head_of(d);
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          stack.push_back(w);
        } else if (color[w] == color[v]) {
          rep.bipartite = false;
          break;
        }
        d = m.sigma(d);
      } while (d != start);
    }
  }

  rep.euler_ok = euler_check(rep.counts);
  rep.lemma1_ok = lemma1_balance(rep.counts);
  return rep;
}

}  // namespace archimedean
