#include "archimedean/polyhedral_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace archimedean {

namespace {

/// Orbit labelling in dart discovery order: scan darts ascending, give each
/// unlabelled orbit of `next` the next id. Returns (label per dart,
/// representative dart per orbit).
std::pair<std::vector<int>, std::vector<int>> orbits(
    const std::vector<int>& next) {
  std::vector<int> label(next.size(), -1);
  std::vector<int> rep;
  for (int d = 0; d < static_cast<int>(next.size()); ++d) {
    if (label[d] != -1) continue;
    const int id = static_cast<int>(rep.size());
    rep.push_back(d);
    for (int e = d; label[e] == -1; e = next[e]) label[e] = id;
  }
  return {std::move(label), std::move(rep)};
}

}  // namespace

PolyhedralMap PolyhedralMap::from_permutations(std::vector<int> sigma,
                                               std::vector<int> alpha) {
  PolyhedralMap m;
  m.sigma_ = std::move(sigma);
  m.alpha_ = std::move(alpha);
  m.validate();
  m.index();
  return m;
}

void PolyhedralMap::validate() const {
  const int n = static_cast<int>(sigma_.size());
  if (n == 0 || n % 2 != 0)
    throw std::invalid_argument("map: dart count must be positive and even");
  if (alpha_.size() != sigma_.size())
    throw std::invalid_argument("map: permutation sizes differ");

  std::vector<char> hit(n, 0);
  for (int d = 0; d < n; ++d) {
    if (sigma_[d] < 0 || sigma_[d] >= n || hit[sigma_[d]])
      throw std::invalid_argument("map: sigma is not a permutation");
    hit[sigma_[d]] = 1;
  }
  for (int d = 0; d < n; ++d) {
    if (alpha_[d] < 0 || alpha_[d] >= n)
      throw std::invalid_argument("map: alpha out of range");
    if (alpha_[d] == d)
      throw std::invalid_argument("map: alpha has a fixed point");
    if (alpha_[alpha_[d]] != d)
      throw std::invalid_argument("map: alpha is not an involution");
  }

  // connectivity: darts must form one orbit under <sigma, alpha>
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 0;
  while (!stack.empty()) {
    const int d = stack.back();
    stack.pop_back();
    ++reached;
    for (int e : {sigma_[d], alpha_[d]}) {
      if (!seen[e]) {
        seen[e] = 1;
        stack.push_back(e);
      }
    }
  }
  if (reached != n) throw std::invalid_argument("map: not connected");
}

void PolyhedralMap::index() {
  const int n = dart_count();
  auto [v_of, v_rep] = orbits(sigma_);
  std::vector<int> phi(n);
  for (int d = 0; d < n; ++d) phi[d] = sigma_[alpha_[d]];
  auto [f_of, f_rep] = orbits(phi);

  vertex_of_ = std::move(v_of);
  vertex_dart_ = std::move(v_rep);
  face_of_ = std::move(f_of);
  face_dart_ = std::move(f_rep);
  n_vertices_ = static_cast<int>(vertex_dart_.size());
  n_faces_ = static_cast<int>(face_dart_.size());

  vertex_degree_.assign(n_vertices_, 0);
  for (int d = 0; d < n; ++d) ++vertex_degree_[vertex_of_[d]];
  face_size_.assign(n_faces_, 0);
  for (int d = 0; d < n; ++d) ++face_size_[face_of_[d]];

  // sphere maps only
  if (n_vertices_ - edge_count() + n_faces_ != 2)
    throw std::invalid_argument("map: genus is not zero");
}

PolyhedralMap PolyhedralMap::from_faces(
    const std::vector<std::vector<int>>& faces) {
  if (faces.empty()) throw std::invalid_argument("from_faces: no faces");

  int n_darts = 0;
  for (const auto& f : faces) {
    if (f.size() < 3)
      throw std::invalid_argument("from_faces: face with fewer than 3 sides");
    n_darts += static_cast<int>(f.size());
  }

  // dart ids in (face, position) order; phi advances within the face
  std::vector<int> phi(n_darts);
  std::map<std::pair<int, int>, int> by_pair;
  int d = 0;
  for (const auto& f : faces) {
    const int k = static_cast<int>(f.size());
    const int base = d;
    for (int i = 0; i < k; ++i, ++d) {
      const int u = f[i], v = f[(i + 1) % k];
      if (u < 0 || v < 0)
        throw std::invalid_argument("from_faces: negative vertex id");
      if (u == v)
        throw std::invalid_argument("from_faces: degenerate edge");
      phi[d] = base + (i + 1) % k;
      if (!by_pair.emplace(std::make_pair(u, v), d).second)
        throw std::invalid_argument(
            "from_faces: directed edge used twice (orientation broken)");
    }
  }

  std::vector<int> alpha(n_darts);
  for (const auto& [pair, dart] : by_pair) {
    const auto mate = by_pair.find({pair.second, pair.first});
    if (mate == by_pair.end())
      throw std::invalid_argument("from_faces: unmatched directed edge " +
                                  std::to_string(pair.first) + "->" +
                                  std::to_string(pair.second));
    alpha[dart] = mate->second;
  }

  // sigma = phi∘alpha: the successor of d around its origin vertex
  std::vector<int> sigma(n_darts);
  for (int e = 0; e < n_darts; ++e) sigma[e] = phi[alpha[e]];
  return from_permutations(std::move(sigma), std::move(alpha));
}

std::vector<std::vector<int>> PolyhedralMap::face_lists() const {
  std::vector<std::vector<int>> out(n_faces_);
  for (int f = 0; f < n_faces_; ++f) {
    const int start = face_dart_[f];
    out[f].reserve(face_size_[f]);
    int d = start;
    do {
      out[f].push_back(vertex_of_[d]);
      d = phi(d);
    } while (d != start);
  }
  return out;
}

std::string PolyhedralMap::face_document() const {
  std::string doc = std::to_string(n_vertices_) + " " +
                    std::to_string(edge_count()) + " " +
                    std::to_string(n_faces_) + "\n";
  for (const auto& face : face_lists()) {
    for (size_t i = 0; i < face.size(); ++i) {
      if (i) doc += ' ';
      doc += std::to_string(face[i]);
    }
    doc += '\n';
  }
  return doc;
}

}  // namespace archimedean
