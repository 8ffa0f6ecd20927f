#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "archimedean/rational.hpp"
#include "archimedean/vertex_figure.hpp"

namespace archimedean {

/// The combinatorial bookkeeping of a polyhedron: global V, E, F plus the
/// per-degree face counts F_p, and (for realized maps) per-degree vertex
/// counts V_d.
struct CountData {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t faces = 0;
  std::map<int, std::int64_t> face_counts;     // degree p -> F_p
  std::map<int, std::int64_t> valence_counts;  // degree d -> V_d; empty unless
                                               // filled from a realized map
};

/// V - E + F == 2.
bool euler_check(const CountData& c);

/// The face/valence balance identity that follows from Euler's formula:
///   3*F3 + 2*F4 + F5 == 12 + sum_d 2(d-3) V_d + sum_{p>=7} (p-6) F_p.
/// Requires valence counts; throws std::invalid_argument when absent.
bool lemma1_balance(const CountData& c);

/// Internal consistency: sum F_p == F, sum p*F_p == 2E, and when valence
/// counts are present, sum V_d == V and sum d*V_d == 2E.
bool counts_consistent(const CountData& c);

/// Why a vertex figure fails to yield a polyhedron by arithmetic alone.
enum class InfeasibleKind {
  NonPositiveDenominator,  // zero: flat tiling; negative: hyperbolic
  NonIntegralCount,        // V, E or some F_p is a proper fraction
};

struct Infeasible {
  InfeasibleKind kind;
  std::string detail;  // e.g. "V = 84/5"
};

/// Result of evaluating the counting formulas on a figure.
using Feasibility = std::variant<CountData, Infeasible>;

inline bool is_feasible(const Feasibility& f) {
  return std::holds_alternative<CountData>(f);
}
inline const CountData* feasible_counts(const Feasibility& f) {
  return std::get_if<CountData>(&f);
}
inline const Infeasible* infeasible_reason(const Feasibility& f) {
  return std::get_if<Infeasible>(&f);
}

/// The quantity 1 - r/2 + sum_i 1/p_i whose sign decides everything:
/// positive for a sphere figure, zero for a flat tiling, negative beyond.
/// Defined for any valence, so the r <= 5 bound can be derived from it.
Rational figure_denominator(const VertexFigure& figure);

/// V = 2 / (1 - r/2 + sum 1/p_i). Empty when the denominator is not
/// positive; the value itself may be a non-integral fraction (e.g. 84/5 for
/// 3.7.7) -- integrality is checked by counts().
std::optional<Rational> vertex_count(const VertexFigure& figure);

/// E = r*V/2 (each of the r incidences at each of the V vertices covers an
/// edge end, and every edge has two ends).
Rational edge_count(const VertexFigure& figure, std::int64_t v);

/// F_p = q*V/p where q is the multiplicity of p in the figure; 0 when p
/// does not appear.
Rational face_count(const VertexFigure& figure, std::int64_t v, int p);

/// Full evaluation: V, E, every F_p, all required to be positive integers.
/// On success the result satisfies Euler's formula exactly.
Feasibility counts(const VertexFigure& figure);

/// Regular case: V = 4p / (2p - qp + 2q) for q p-gons at each vertex;
/// empty when the denominator is not positive.
std::optional<Rational> regular_vertex_count(int p, int q);

/// All (p, q) with p, q >= 3 and (p-2)(q-2) < 4: exactly the five regular
/// polyhedra.
std::vector<std::pair<int, int>> enumerate_regular();

}  // namespace archimedean
