#include "archimedean/oracle.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "archimedean/classify.hpp"

namespace archimedean {

std::string_view to_string(SpuriousFilter f) {
  switch (f) {
    case SpuriousFilter::R4TriangleNeighbors: return "triangle-neighbors";
    case SpuriousFilter::R3TriangleEqualPair: return "equal-pair (triangle)";
    case SpuriousFilter::R3TriangleParity: return "parity";
    case SpuriousFilter::R3SquareEvenness: return "evenness";
    case SpuriousFilter::R3PentagonEqualPair: return "equal-pair (pentagon)";
  }
  throw std::invalid_argument("unknown SpuriousFilter");
}

Feasibility arithmetic_feasible(const VertexFigure& figure) {
  if (figure.valence() < 3 || figure.valence() > 5)
    throw std::invalid_argument("arithmetic_feasible: valence outside 3..5");
  return counts(figure);
}

namespace {

/// Sign test for 1 - r/2 + sum 1/p_i, multiplied through by 2*prod(p_i):
/// exact in int64 for the degrees swept here (prod <= 30^5).
bool denominator_positive(const std::vector<int>& degrees) {
  std::int64_t prod = 1;
  for (int p : degrees) prod *= p;
  std::int64_t recip = 0;
  for (int p : degrees) recip += prod / p;
  const auto r = static_cast<std::int64_t>(degrees.size());
  return (2 - r) * prod + 2 * recip > 0;
}

/// True iff the sequence is its own canonical cycle, without allocating:
/// no rotation of it or of its reversal is lexicographically smaller.
bool is_canonical_cycle(const std::vector<int>& a) {
  const int n = static_cast<int>(a.size());
  for (int s = 0; s < n; ++s) {
    if (s != 0) {
      for (int k = 0; k < n; ++k) {
        const int c = a[static_cast<size_t>((s + k) % n)];
        if (c != a[static_cast<size_t>(k)]) {
          if (c < a[static_cast<size_t>(k)]) return false;
          break;
        }
      }
    }
    for (int k = 0; k < n; ++k) {
      const int c = a[static_cast<size_t>(((s - k) % n + n) % n)];
      if (c != a[static_cast<size_t>(k)]) {
        if (c < a[static_cast<size_t>(k)]) return false;
        break;
      }
    }
  }
  return true;
}

}  // namespace

std::vector<VertexFigure> oracle_enumerate(int p_max) {
  if (p_max < 5) throw std::invalid_argument("oracle_enumerate: p_max < 5");

  std::vector<VertexFigure> out;
  std::vector<int> tup;

  // A canonical cycle starts at a minimal entry, so fix the first entry as
  // the minimum and only extend with degrees >= it. The cheap exact sign
  // test prunes before the full canonical check and counts run.
  auto extend = [&](auto&& self, int r, int lo) -> void {
    if (static_cast<int>(tup.size()) == r) {
      if (!denominator_positive(tup)) return;
      if (!is_canonical_cycle(tup)) return;
      const VertexFigure fig(tup);
      if (is_feasible(counts(fig))) out.push_back(fig);
      return;
    }
    for (int p = lo; p <= p_max; ++p) {
      tup.push_back(p);
      self(self, r, lo);
      tup.pop_back();
    }
  };

  for (int r = 3; r <= 5; ++r)
    for (int first = 3; first <= p_max; ++first) {
      tup.assign(1, first);
      extend(extend, r, first);
      tup.clear();
    }

  std::sort(out.begin(), out.end(), FigureOrder{});
  return out;
}

std::optional<SpuriousFilter> killing_filter(const VertexFigure& figure) {
  const auto& d = figure.degrees();
  const int r = figure.valence();

  if (r == 4) {
    for (int i = 0; i < 4; ++i)
      if (d[i] == 3 && d[(i + 3) % 4] == d[(i + 1) % 4])
        return std::nullopt;  // figure is 3.p.q.p: passes
    return SpuriousFilter::R4TriangleNeighbors;
  }

  if (r == 3) {
    const auto s = figure.sorted_degrees();
    if (s[0] == 3) {
      if (s[1] != s[2]) return SpuriousFilter::R3TriangleEqualPair;
      if (s[2] != 3 && s[2] % 2 != 0) return SpuriousFilter::R3TriangleParity;
      return std::nullopt;
    }
    if (s[0] == 4) {
      if (s[1] == 4) return std::nullopt;  // prism figure, any m admitted
      if (s[1] % 2 != 0 || s[2] % 2 != 0)
        return SpuriousFilter::R3SquareEvenness;
      return std::nullopt;
    }
    if (s[0] == 5) {
      if (s[1] != s[2]) return SpuriousFilter::R3PentagonEqualPair;
      return std::nullopt;
    }
  }

  return std::nullopt;
}

OracleReport oracle_diff(int p_max) {
  if (p_max < 12)
    throw std::invalid_argument("oracle_diff: p_max must be >= 12");

  OracleReport report;
  report.p_max = p_max;
  report.feasible = oracle_enumerate(p_max);

  std::set<VertexFigure> catalog_figures;
  for (const auto& row : enumerate_all())
    if (!row.is_family()) catalog_figures.insert(*row.figure);

  for (const auto& fig : report.feasible) {
    const bool in_catalog = catalog_figures.count(fig) > 0;
    const bool in_family =
        family_parameter(SolidClass::PrismFamily, fig).has_value() ||
        family_parameter(SolidClass::AntiprismFamily, fig).has_value();
    if (in_catalog || in_family) {
      report.realized.push_back(fig);
    } else if (auto filter = killing_filter(fig)) {
      report.spurious.push_back({fig, *filter});
    } else {
      report.unexplained.push_back(fig);
    }
  }
  return report;
}

}  // namespace archimedean
