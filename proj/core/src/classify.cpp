#include "archimedean/classify.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "archimedean/counts.hpp"

namespace archimedean {

namespace {

VertexFigure all_triangles(int r) {
  return VertexFigure(std::vector<int>(static_cast<size_t>(r), 3));
}

Classification sporadic(SolidClass cls, std::string name, VertexFigure figure,
                        ProofCase pc) {
  // every boxed result must be arithmetic-feasible; anything else is a bug
  // in the case analysis itself
  if (!is_feasible(counts(figure)))
    throw std::logic_error("case analysis produced infeasible figure " +
                           figure.str());
  Classification c;
  c.cls = cls;
  c.name = std::move(name);
  c.figure = std::move(figure);
  c.cases = {pc};
  return c;
}

Classification family(SolidClass cls, std::string name, int min, ProofCase pc) {
  // spot-check a window of instances
  for (int m = min; m <= min + 8; ++m)
    if (!is_feasible(counts(family_figure(cls, m))))
      throw std::logic_error("family instance infeasible at m = " +
                             std::to_string(m));
  Classification c;
  c.cls = cls;
  c.name = std::move(name);
  c.family_min = min;
  c.cases = {pc};
  return c;
}

/// Sort key: valence first, then the canonical sequence; families sort at
/// their least instance.
VertexFigure sort_figure(const Classification& c) {
  if (c.figure) return *c.figure;
  return family_figure(c.cls, *c.family_min);
}

void sort_rows(std::vector<Classification>& rows) {
  std::sort(rows.begin(), rows.end(),
            [](const Classification& a, const Classification& b) {
              return FigureOrder{}(sort_figure(a), sort_figure(b));
            });
}

}  // namespace

std::string_view to_string(SolidClass c) {
  switch (c) {
    case SolidClass::Platonic: return "platonic";
    case SolidClass::Archimedean: return "archimedean";
    case SolidClass::PrismFamily: return "prism-family";
    case SolidClass::AntiprismFamily: return "antiprism-family";
  }
  throw std::invalid_argument("unknown SolidClass");
}

std::string_view to_string(ProofCase c) {
  switch (c) {
    case ProofCase::R5Triangle: return "r5-triangle";
    case ProofCase::R4Triangle: return "r4-triangle";
    case ProofCase::R3Triangle: return "r3-triangle";
    case ProofCase::R3Square: return "r3-square";
    case ProofCase::R3Pentagon: return "r3-pentagon";
  }
  throw std::invalid_argument("unknown ProofCase");
}

VertexFigure Classification::instantiate(std::optional<int> m) const {
  if (!is_family()) {
    if (m) throw std::invalid_argument("parameter given for sporadic entry");
    return *figure;
  }
  if (!m) throw std::invalid_argument("family entry needs a parameter");
  return family_figure(cls, *m);
}

VertexFigure family_figure(SolidClass family, int m) {
  if (m < 3) throw std::invalid_argument("family parameter must be >= 3");
  if (family == SolidClass::PrismFamily) return VertexFigure{4, 4, m};
  if (family == SolidClass::AntiprismFamily) return VertexFigure{3, 3, 3, m};
  throw std::invalid_argument("not a family class");
}

std::optional<int> family_parameter(SolidClass family,
                                    const VertexFigure& figure) {
  const auto s = figure.sorted_degrees();
  if (family == SolidClass::PrismFamily) {
    if (figure.valence() != 3) return std::nullopt;
    if (figure.multiplicity(4) >= 2)
      return figure.multiplicity(4) == 3 ? 4 : (s[0] == 4 ? s[2] : s[0]);
    return std::nullopt;
  }
  if (family == SolidClass::AntiprismFamily) {
    if (figure.valence() != 4) return std::nullopt;
    if (s[0] == 3 && s[1] == 3 && s[2] == 3) return s[3];
    return std::nullopt;
  }
  throw std::invalid_argument("not a family class");
}

int max_valence() {
  // With every degree >= 3 the denominator is largest when all degrees are
  // exactly 3, where it equals 1 - r/6: positive at r = 5, zero at r = 6,
  // negative beyond. Checked exactly rather than assumed.
  if (!(figure_denominator(all_triangles(5)) == Rational(1, 6)))
    throw std::logic_error("valence bound: r = 5 boundary value wrong");
  if (!figure_denominator(all_triangles(6)).is_zero())
    throw std::logic_error("valence bound: r = 6 should be flat");
  if (!figure_denominator(all_triangles(7)).is_negative())
    throw std::logic_error("valence bound: r = 7 should be hyperbolic");
  return 5;
}

std::vector<Classification> enumerate_case_r5() {
  // No figure with all degrees >= 4 survives: the best such candidate is
  // all squares, already negative.
  if (!figure_denominator(VertexFigure{4, 4, 4, 4, 4}).is_negative())
    throw std::logic_error("r5: all-quadrilateral subcase not impossible");

  // Triangle present. Scan weakly increasing tails; with two entries >= 4
  // the degree-sum bound already fails (the mixed-bound cut), so survivors
  // have a single non-triangle entry, capped by the denominator sign.
  std::vector<Classification> out;
  for (int p2 = 3; p2 <= 8; ++p2)
    for (int p3 = p2; p3 <= 8; ++p3)
      for (int p4 = p3; p4 <= 8; ++p4)
        for (int p5 = p4; p5 <= 8; ++p5) {
          if (p4 >= 4) continue;  // mixed-bound cut: two entries >= 4
          const VertexFigure fig{3, p2, p3, p4, p5};
          if (!figure_denominator(fig).is_positive()) continue;
          if (p5 == 3)
            out.push_back(sporadic(SolidClass::Platonic, "icosahedron", fig,
                                   ProofCase::R5Triangle));
          else if (p5 == 4)
            out.push_back(sporadic(SolidClass::Archimedean, "snub cube", fig,
                                   ProofCase::R5Triangle));
          else if (p5 == 5)
            out.push_back(sporadic(SolidClass::Archimedean, "snub dodecahedron",
                                   fig, ProofCase::R5Triangle));
          else
            throw std::logic_error("r5: unexpected survivor " + fig.str());
        }
  sort_rows(out);
  return out;
}

std::vector<std::pair<int, int>> r4_inequality_pairs() {
  std::vector<std::pair<int, int>> pairs;
  for (int p = 3; p <= 12; ++p)
    for (int q = 3; q <= 5; ++q)
      if ((p - 3) * (2 * q - 3) < 9) pairs.emplace_back(p, q);
  return pairs;
}

std::vector<Classification> enumerate_case_r4() {
  // All degrees >= 4 is impossible: the extreme case has denominator zero
  // and every other candidate is below it.
  if (!figure_denominator(VertexFigure{4, 4, 4, 4}).is_zero() ||
      !figure_denominator(VertexFigure{4, 4, 4, 5}).is_negative())
    throw std::logic_error("r4: all-quadrilateral subcase not impossible");

  // Triangle present: the adjacency argument forces the two faces next to
  // the triangle to be equal, so the figure is 3.p.q.p. The inequality
  // (p-3)(2q-3) < 9 bounds everything except the p = 3 column, which
  // continues for every q as the antiprism family.
  std::vector<Classification> out;
  for (const auto& [p, q] : r4_inequality_pairs()) {
    const VertexFigure fig{3, p, q, p};
    if (p == 3) continue;  // antiprism column, emitted as the family below
    if (p == 4 && q == 3)
      out.push_back(sporadic(SolidClass::Archimedean, "cuboctahedron", fig,
                             ProofCase::R4Triangle));
    else if (p == 4 && q == 4)
      out.push_back(sporadic(SolidClass::Archimedean,
                             "small rhombicuboctahedron", fig,
                             ProofCase::R4Triangle));
    else if (p == 4 && q == 5)
      out.push_back(sporadic(SolidClass::Archimedean,
                             "small rhombicosidodecahedron", fig,
                             ProofCase::R4Triangle));
    else if (p == 5 && q == 3)
      out.push_back(sporadic(SolidClass::Archimedean, "icosidodecahedron", fig,
                             ProofCase::R4Triangle));
    else
      throw std::logic_error("r4: unexpected inequality pair");
  }
  // p = 3: figure 3.3.q.3; q = 3 is the octahedron, q >= 4 the antiprisms
  out.push_back(sporadic(SolidClass::Platonic, "octahedron",
                         VertexFigure{3, 3, 3, 3}, ProofCase::R4Triangle));
  out.push_back(family(SolidClass::AntiprismFamily, "antiprism", 4,
                       ProofCase::R4Triangle));
  sort_rows(out);
  return out;
}

std::vector<Classification> enumerate_case_r3() {
  // Some degree must be 3, 4 or 5: three hexagons already tile flat.
  if (!figure_denominator(VertexFigure{6, 6, 6}).is_zero())
    throw std::logic_error("r3: hexagon boundary not flat");

  std::vector<Classification> out;

  // Smallest degree 3: the other two faces are forced equal, their common
  // degree p is bounded by 2/p > 1/6 and must be even unless p = 3.
  for (int p = 3; p <= 14; ++p) {
    if (!(Rational(2, p) > Rational(1, 6))) continue;
    if (p != 3 && p % 2 != 0) continue;  // parity argument
    const VertexFigure fig{3, p, p};
    switch (p) {
      case 3:
        out.push_back(sporadic(SolidClass::Platonic, "tetrahedron", fig,
                               ProofCase::R3Triangle));
        break;
      case 4:
        // prism family instance m = 3; folded into the family on merge
        out.push_back(sporadic(SolidClass::PrismFamily, "triangular prism",
                               fig, ProofCase::R3Triangle));
        break;
      case 6:
        out.push_back(sporadic(SolidClass::Archimedean, "truncated tetrahedron",
                               fig, ProofCase::R3Triangle));
        break;
      case 8:
        out.push_back(sporadic(SolidClass::Archimedean, "truncated cube", fig,
                               ProofCase::R3Triangle));
        break;
      case 10:
        out.push_back(sporadic(SolidClass::Archimedean,
                               "truncated dodecahedron", fig,
                               ProofCase::R3Triangle));
        break;
      default:
        throw std::logic_error("r3 triangle: unexpected survivor " + fig.str());
    }
  }

  // Smallest degree exactly 4: both other degrees even, bounded by
  // (p2-4)(p3-4) < 16; the p2 = 4 line is the prism family (admitted for
  // every m >= 4, odd included -- the boxed family, not the evenness
  // derivation, is what the classification states).
  for (int p2 = 6; p2 <= 12; p2 += 2)
    for (int p3 = p2; p3 <= 12; p3 += 2) {
      if (!((p2 - 4) * (p3 - 4) < 16)) continue;
      const VertexFigure fig{4, p2, p3};
      if (p2 == 6 && p3 == 6)
        out.push_back(sporadic(SolidClass::Archimedean, "truncated octahedron",
                               fig, ProofCase::R3Square));
      else if (p2 == 6 && p3 == 8)
        out.push_back(sporadic(SolidClass::Archimedean,
                               "great rhombicuboctahedron", fig,
                               ProofCase::R3Square));
      else if (p2 == 6 && p3 == 10)
        out.push_back(sporadic(SolidClass::Archimedean,
                               "great rhombicosidodecahedron", fig,
                               ProofCase::R3Square));
      else
        throw std::logic_error("r3 square: unexpected survivor " + fig.str());
    }
  out.push_back(sporadic(SolidClass::Platonic, "cube", VertexFigure{4, 4, 4},
                         ProofCase::R3Square));
  out.push_back(
      family(SolidClass::PrismFamily, "prism", 4, ProofCase::R3Square));

  // Smallest degree exactly 5: the other two are equal with 2/p > 3/10.
  for (int p = 5; p <= 8; ++p) {
    if (!(Rational(2, p) > Rational(3, 10))) continue;
    const VertexFigure fig{5, p, p};
    if (p == 5)
      out.push_back(sporadic(SolidClass::Platonic, "dodecahedron", fig,
                             ProofCase::R3Pentagon));
    else if (p == 6)
      out.push_back(sporadic(SolidClass::Archimedean, "truncated icosahedron",
                             fig, ProofCase::R3Pentagon));
    else
      throw std::logic_error("r3 pentagon: unexpected survivor " + fig.str());
  }

  sort_rows(out);
  return out;
}

std::vector<Classification> enumerate_all() {
  std::vector<Classification> raw;
  for (auto&& rows :
       {enumerate_case_r5(), enumerate_case_r4(), enumerate_case_r3()})
    raw.insert(raw.end(), rows.begin(), rows.end());

  // fold family rows and family instances (the triangular prism) together;
  // sporadic figures must be produced by exactly one case
  std::map<SolidClass, Classification> families;
  std::map<VertexFigure, Classification> sporadics;
  for (auto& row : raw) {
    if (row.cls == SolidClass::PrismFamily ||
        row.cls == SolidClass::AntiprismFamily) {
      auto [it, inserted] = families.try_emplace(row.cls, row);
      Classification& f = it->second;
      if (inserted) {
        if (!f.is_family()) {
          // instance row seen first: promote to a family row
          f.family_min = *family_parameter(f.cls, *f.figure);
          f.figure.reset();
          f.name = f.cls == SolidClass::PrismFamily ? "prism" : "antiprism";
        }
        continue;
      }
      const int m = row.is_family() ? *row.family_min
                                    : *family_parameter(row.cls, *row.figure);
      f.family_min = std::min(*f.family_min, m);
      for (ProofCase pc : row.cases)
        if (std::find(f.cases.begin(), f.cases.end(), pc) == f.cases.end())
          f.cases.push_back(pc);
    } else {
      auto [it, inserted] = sporadics.try_emplace(*row.figure, row);
      if (!inserted)
        throw std::logic_error("duplicate classification for figure " +
                               row.figure->str());
    }
  }

  std::vector<Classification> out;
  for (auto& [fig, row] : sporadics) out.push_back(std::move(row));
  for (auto& [cls, row] : families) out.push_back(std::move(row));
  sort_rows(out);

  int platonic = 0, archimedean = 0, fam = 0;
  for (const auto& row : out) {
    platonic += row.cls == SolidClass::Platonic;
    archimedean += row.cls == SolidClass::Archimedean;
    fam += row.is_family();
  }
  if (platonic != 5 || archimedean != 13 || fam != 2 || out.size() != 20)
    throw std::logic_error("classification does not total 5 + 13 + 2");
  return out;
}

}  // namespace archimedean
