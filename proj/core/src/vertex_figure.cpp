#include "archimedean/vertex_figure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace archimedean {

std::vector<int> canonical_cycle(std::span<const int> degrees) {
  if (degrees.empty())
    throw std::invalid_argument("vertex figure: empty degree sequence");
  for (int p : degrees)
    if (p < 3)
      throw std::invalid_argument("vertex figure: degree " +
                                  std::to_string(p) + " < 3");

  const size_t n = degrees.size();
  std::vector<int> best(degrees.begin(), degrees.end());
  std::vector<int> candidate(n);
  std::vector<int> reversed(degrees.rbegin(), degrees.rend());

  auto consider_rotations = [&](const std::vector<int>& seq) {
    for (size_t shift = 0; shift < n; ++shift) {
      for (size_t i = 0; i < n; ++i) candidate[i] = seq[(shift + i) % n];
      if (candidate < best) best = candidate;
    }
  };
  consider_rotations({degrees.begin(), degrees.end()});
  consider_rotations(reversed);
  return best;
}

int VertexFigure::multiplicity(int p) const {
  return static_cast<int>(std::count(degrees_.begin(), degrees_.end(), p));
}

std::vector<int> VertexFigure::distinct_degrees() const {
  std::set<int> s(degrees_.begin(), degrees_.end());
  return {s.begin(), s.end()};
}

std::vector<int> VertexFigure::sorted_degrees() const {
  std::vector<int> s = degrees_;
  std::sort(s.begin(), s.end());
  return s;
}

std::string VertexFigure::str() const {
  std::string out;
  for (size_t i = 0; i < degrees_.size(); ++i) {
    if (i) out += '.';
    out += std::to_string(degrees_[i]);
  }
  return out;
}

}  // namespace archimedean
