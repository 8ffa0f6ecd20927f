#include "archimedean/counts.hpp"

#include <stdexcept>

namespace archimedean {

bool euler_check(const CountData& c) {
  return c.vertices - c.edges + c.faces == 2;
}

bool lemma1_balance(const CountData& c) {
  if (c.valence_counts.empty())
    throw std::invalid_argument("lemma1_balance: valence counts missing");
  auto fp = [&](int p) {
    auto it = c.face_counts.find(p);
    return it == c.face_counts.end() ? 0 : it->second;
  };
  std::int64_t lhs = 3 * fp(3) + 2 * fp(4) + fp(5);
  std::int64_t rhs = 12;
  for (const auto& [d, vd] : c.valence_counts) rhs += 2 * (d - 3) * vd;
  for (const auto& [p, n] : c.face_counts)
    if (p >= 7) rhs += (p - 6) * n;
  return lhs == rhs;
}

bool counts_consistent(const CountData& c) {
  std::int64_t f_total = 0, incidences = 0;
  for (const auto& [p, n] : c.face_counts) {
    if (n <= 0) return false;
    f_total += n;
    incidences += static_cast<std::int64_t>(p) * n;
  }
  if (f_total != c.faces || incidences != 2 * c.edges) return false;
  if (!c.valence_counts.empty()) {
    std::int64_t v_total = 0, ends = 0;
    for (const auto& [d, n] : c.valence_counts) {
      if (n <= 0) return false;
      v_total += n;
      ends += static_cast<std::int64_t>(d) * n;
    }
    if (v_total != c.vertices || ends != 2 * c.edges) return false;
  }
  return true;
}

Rational figure_denominator(const VertexFigure& figure) {
  Rational d = Rational(1) - Rational(figure.valence(), 2);
  for (int p : figure.degrees()) d += Rational(1, p);
  return d;
}

std::optional<Rational> vertex_count(const VertexFigure& figure) {
  const Rational den = figure_denominator(figure);
  if (!den.is_positive()) return std::nullopt;
  return Rational(2) / den;
}

Rational edge_count(const VertexFigure& figure, std::int64_t v) {
  return Rational(figure.valence()) * Rational(v) / Rational(2);
}

Rational face_count(const VertexFigure& figure, std::int64_t v, int p) {
  const int q = figure.multiplicity(p);
  if (q == 0) return Rational(0);
  return Rational(q) * Rational(v) / Rational(p);
}

Feasibility counts(const VertexFigure& figure) {
  const auto v = vertex_count(figure);
  if (!v)
    return Infeasible{InfeasibleKind::NonPositiveDenominator,
                      "denominator = " + figure_denominator(figure).str()};
  if (!v->is_integer())
    return Infeasible{InfeasibleKind::NonIntegralCount, "V = " + v->str()};

  CountData c;
  c.vertices = v->numerator();
  const Rational e = edge_count(figure, c.vertices);
  if (!e.is_integer())
    return Infeasible{InfeasibleKind::NonIntegralCount, "E = " + e.str()};
  c.edges = e.numerator();

  for (int p : figure.distinct_degrees()) {
    const Rational f = face_count(figure, c.vertices, p);
    if (!f.is_integer())
      return Infeasible{InfeasibleKind::NonIntegralCount,
                        "F" + std::to_string(p) + " = " + f.str()};
    c.face_counts[p] = f.numerator();
    c.faces += f.numerator();
  }

  // guaranteed by construction; asserted anyway
  if (!euler_check(c))
    throw std::logic_error("counts: Euler check failed for " + figure.str());
  return c;
}

std::optional<Rational> regular_vertex_count(int p, int q) {
  if (p < 3 || q < 3)
    throw std::invalid_argument("regular_vertex_count: p, q must be >= 3");
  const std::int64_t den =
      2 * static_cast<std::int64_t>(p) - static_cast<std::int64_t>(q) * p + 2 * q;
  if (den <= 0) return std::nullopt;
  return Rational(4 * static_cast<std::int64_t>(p), den);
}

std::vector<std::pair<int, int>> enumerate_regular() {
  // (p-2)(q-2) < 4 forces p, q <= 5; the scan window makes the boundary
  // cases (6,3), (4,4), (3,6) visibly fail.
  std::vector<std::pair<int, int>> out;
  for (int p = 3; p <= 8; ++p)
    for (int q = 3; q <= 8; ++q)
      if ((p - 2) * (q - 2) < 4) out.emplace_back(p, q);
  return out;
}

}  // namespace archimedean
