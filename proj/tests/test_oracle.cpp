#include <doctest.h>

#include <algorithm>
#include <set>

#include <archimedean/classify.hpp>
#include <archimedean/oracle.hpp>

using namespace archimedean;

namespace {

// The spurious set at p_max = 12, computed by an independent brute-force
// sweep (exact fractions, necklace enumeration) before this module was
// written: 74 feasible figures, 36 realized, these 38 left over. Order is
// (valence, lexicographic).
struct Expected {
  std::vector<int> degrees;
  SpuriousFilter filter;
};
const std::vector<Expected> kSpurious12 = {
    {{3, 3, 6}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 4, 12}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 6, 9}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 6, 12}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 8, 12}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 9, 9}, SpuriousFilter::R3TriangleParity},
    {{3, 9, 12}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 10, 12}, SpuriousFilter::R3TriangleEqualPair},
    {{3, 11, 11}, SpuriousFilter::R3TriangleParity},
    {{3, 11, 12}, SpuriousFilter::R3TriangleEqualPair},
    {{4, 5, 10}, SpuriousFilter::R3SquareEvenness},
    {{4, 5, 12}, SpuriousFilter::R3SquareEvenness},
    {{4, 6, 9}, SpuriousFilter::R3SquareEvenness},
    {{4, 6, 11}, SpuriousFilter::R3SquareEvenness},
    {{4, 7, 7}, SpuriousFilter::R3SquareEvenness},
    {{4, 7, 8}, SpuriousFilter::R3SquareEvenness},
    {{4, 7, 9}, SpuriousFilter::R3SquareEvenness},
    {{5, 5, 6}, SpuriousFilter::R3PentagonEqualPair},
    {{5, 5, 8}, SpuriousFilter::R3PentagonEqualPair},
    {{5, 5, 9}, SpuriousFilter::R3PentagonEqualPair},
    {{5, 6, 7}, SpuriousFilter::R3PentagonEqualPair},
    {{3, 3, 4, 4}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 4, 6}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 4, 8}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 4, 9}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 4, 10}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 4, 11}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 5, 5}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 5, 6}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 3, 5, 7}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 4, 3, 6}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 4, 3, 8}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 4, 3, 9}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 4, 3, 10}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 4, 3, 11}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 4, 4, 5}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 5, 3, 6}, SpuriousFilter::R4TriangleNeighbors},
    {{3, 5, 3, 7}, SpuriousFilter::R4TriangleNeighbors},
};

}  // namespace

TEST_CASE("arithmetic_feasible") {
  const auto tc = arithmetic_feasible(VertexFigure{3, 8, 8});
  REQUIRE(is_feasible(tc));
  CHECK(feasible_counts(tc)->vertices == 24);
  CHECK(feasible_counts(tc)->edges == 36);
  CHECK(feasible_counts(tc)->faces == 14);

  // 3.9.9 is the point of the whole exercise: arithmetic alone admits it
  const auto f399 = arithmetic_feasible(VertexFigure{3, 9, 9});
  REQUIRE(is_feasible(f399));
  CHECK(feasible_counts(f399)->vertices == 36);

  const auto f377 = arithmetic_feasible(VertexFigure{3, 7, 7});
  REQUIRE_FALSE(is_feasible(f377));
  CHECK(infeasible_reason(f377)->kind == InfeasibleKind::NonIntegralCount);

  CHECK_THROWS_AS(arithmetic_feasible(VertexFigure{3, 3, 3, 3, 3, 3}),
                  std::invalid_argument);
}

TEST_CASE("oracle_enumerate sweeps cyclic orders") {
  CHECK_THROWS_AS(oracle_enumerate(4), std::invalid_argument);

  const auto figs12 = oracle_enumerate(12);
  CHECK(figs12.size() == 74);
  const std::set<VertexFigure> set12(figs12.begin(), figs12.end());
  CHECK(set12.count(VertexFigure{3, 4, 5, 4}));
  CHECK(set12.count(VertexFigure{3, 4, 4, 5}));  // distinct cyclic order
  CHECK(set12.count(VertexFigure{3, 3, 3, 3, 5}));
  CHECK_FALSE(set12.count(VertexFigure{3, 6, 3, 6}));  // flat
  CHECK_FALSE(set12.count(VertexFigure{3, 7, 7}));     // non-integral

  const auto figs5 = oracle_enumerate(5);
  CHECK(std::find(figs5.begin(), figs5.end(), VertexFigure{3, 3, 3, 3, 5}) !=
        figs5.end());

  // sorted by (valence, sequence) and duplicate-free
  CHECK(std::is_sorted(figs12.begin(), figs12.end(),
                       [](const auto& a, const auto& b) {
                         return FigureOrder{}(a, b);
                       }));
  CHECK(set12.size() == figs12.size());
  CHECK(oracle_enumerate(12) == figs12);
}

TEST_CASE("killing filters are local conditions on the cycle") {
  CHECK(killing_filter(VertexFigure{3, 4, 4, 5}) ==
        SpuriousFilter::R4TriangleNeighbors);
  CHECK_FALSE(killing_filter(VertexFigure{3, 4, 5, 4}).has_value());
  CHECK(killing_filter(VertexFigure{3, 9, 9}) ==
        SpuriousFilter::R3TriangleParity);
  CHECK(killing_filter(VertexFigure{3, 3, 6}) ==
        SpuriousFilter::R3TriangleEqualPair);
  CHECK(killing_filter(VertexFigure{4, 6, 9}) ==
        SpuriousFilter::R3SquareEvenness);
  CHECK_FALSE(killing_filter(VertexFigure{4, 4, 7}).has_value());  // prism
  CHECK(killing_filter(VertexFigure{5, 5, 6}) ==
        SpuriousFilter::R3PentagonEqualPair);
  CHECK_FALSE(killing_filter(VertexFigure{5, 6, 6}).has_value());
  CHECK_FALSE(killing_filter(VertexFigure{3, 3, 3, 3, 4}).has_value());
}

TEST_CASE("oracle_diff at p_max = 12 reproduces the brute-force baseline") {
  CHECK_THROWS_AS(oracle_diff(11), std::invalid_argument);

  const auto rep = oracle_diff(12);
  CHECK(rep.p_max == 12);
  CHECK(rep.feasible.size() == 74);
  CHECK(rep.realized.size() == 36);
  CHECK(rep.complete());

  REQUIRE(rep.spurious.size() == kSpurious12.size());
  for (size_t i = 0; i < kSpurious12.size(); ++i) {
    CHECK(rep.spurious[i].figure == VertexFigure(kSpurious12[i].degrees));
    CHECK(rep.spurious[i].killed_by == kSpurious12[i].filter);
  }

  // realized ⊆ feasible and spurious ∩ realized = ∅
  const std::set<VertexFigure> feasible(rep.feasible.begin(),
                                        rep.feasible.end());
  const std::set<VertexFigure> realized(rep.realized.begin(),
                                        rep.realized.end());
  for (const auto& fig : rep.realized) CHECK(feasible.count(fig));
  for (const auto& s : rep.spurious) {
    CHECK(feasible.count(s.figure));
    CHECK_FALSE(realized.count(s.figure));
  }
  CHECK(rep.realized.size() + rep.spurious.size() == rep.feasible.size());
}

TEST_CASE("completeness holds for every sweep bound up to 30") {
  const auto base = oracle_diff(12);
  std::set<VertexFigure> base_spurious;
  for (const auto& s : base.spurious) base_spurious.insert(s.figure);

  for (int p_max = 13; p_max <= 30; ++p_max) {
    const auto rep = oracle_diff(p_max);
    CHECK(rep.complete());
    CHECK(rep.realized.size() + rep.spurious.size() == rep.feasible.size());

    // growth beyond 12 comes only from new r = 3 figures; the bounded
    // inequalities close off r = 4 and r = 5 for good
    for (const auto& s : rep.spurious)
      if (!base_spurious.count(s.figure)) CHECK(s.figure.valence() == 3);
  }

  const auto rep20 = oracle_diff(20);
  CHECK(rep20.feasible.size() == 106);
  CHECK(rep20.realized.size() == 52);
  CHECK(rep20.spurious.size() == 54);

  const auto rep30 = oracle_diff(30);
  CHECK(rep30.feasible.size() == 137);
  CHECK(rep30.realized.size() == 72);
  CHECK(rep30.spurious.size() == 65);
}

TEST_CASE("the pruned sweep agrees with a direct full enumeration") {
  // second route: canonicalize every raw tuple and filter, no pruning
  std::set<VertexFigure> direct;
  for (int r = 3; r <= 5; ++r) {
    std::vector<int> tup(static_cast<size_t>(r), 3);
    while (true) {
      const VertexFigure fig(tup);
      if (is_feasible(counts(fig))) direct.insert(fig);
      int i = r - 1;
      while (i >= 0 && tup[static_cast<size_t>(i)] == 8) {
        tup[static_cast<size_t>(i)] = 3;
        --i;
      }
      if (i < 0) break;
      ++tup[static_cast<size_t>(i)];
    }
  }
  const auto swept = oracle_enumerate(8);
  CHECK(std::set<VertexFigure>(swept.begin(), swept.end()) == direct);
  CHECK(swept.size() == direct.size());
}

TEST_CASE("every classified figure is arithmetic-feasible, families included") {
  for (const auto& row : enumerate_all()) {
    if (row.is_family()) {
      for (int m = *row.family_min; m <= *row.family_min + 20; ++m)
        CHECK(is_feasible(arithmetic_feasible(family_figure(row.cls, m))));
    } else {
      CHECK(is_feasible(arithmetic_feasible(*row.figure)));
    }
  }
}
