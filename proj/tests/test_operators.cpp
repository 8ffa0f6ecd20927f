#include <doctest.h>

#include <vector>

#include <archimedean/analyze.hpp>
#include <archimedean/operators.hpp>
#include <archimedean/realize.hpp>

using namespace archimedean;

namespace {

std::vector<PolyhedralMap> all_bases() {
  std::vector<PolyhedralMap> bases;
  for (const char* name : {"tetrahedron", "cube", "octahedron", "dodecahedron",
                           "icosahedron"})
    bases.push_back(platonic_seed(name));
  for (int n = 3; n <= 12; ++n) {
    bases.push_back(prism(n));
    bases.push_back(antiprism(n));
  }
  return bases;
}

void expect(const PolyhedralMap& m, int v, int e, int f,
            const VertexFigure& fig) {
  CHECK(m.vertex_count() == v);
  CHECK(m.edge_count() == e);
  CHECK(m.face_count() == f);
  const auto rep = analyze(m);
  CHECK(rep.euler_ok);
  CHECK(rep.lemma1_ok);
  CHECK(rep.uniform);
  CHECK(rep.figure() == fig);
}

}  // namespace

TEST_CASE("operator count laws hold on every seed and family member") {
  for (const auto& m : all_bases()) {
    const int v = m.vertex_count(), e = m.edge_count(), f = m.face_count();

    const auto t = truncate(m);
    CHECK(t.vertex_count() == 2 * e);
    CHECK(t.edge_count() == 3 * e);
    CHECK(t.face_count() == f + v);

    const auto a = ambo(m);
    CHECK(a.vertex_count() == e);
    CHECK(a.edge_count() == 2 * e);
    CHECK(a.face_count() == f + v);

    const auto x = expand(m);
    CHECK(x.vertex_count() == 2 * e);
    CHECK(x.edge_count() == 4 * e);
    CHECK(x.face_count() == f + v + e);

    const auto b = bevel(m);
    CHECK(b.vertex_count() == 4 * e);
    CHECK(b.edge_count() == 6 * e);
    CHECK(b.face_count() == f + v + e);

    const auto s = snub(m);
    CHECK(s.vertex_count() == 2 * e);
    CHECK(s.edge_count() == 5 * e);
    CHECK(s.face_count() == f + v + 2 * e);

    // every derived map is again a sphere map with the balance identity
    // and coherent per-degree bookkeeping
    for (const PolyhedralMap* derived : {&t, &a, &x, &b, &s}) {
      const auto rep = analyze(*derived);
      CHECK(rep.euler_ok);
      CHECK(rep.lemma1_ok);
      CHECK(counts_consistent(rep.counts));
    }
  }
}

TEST_CASE("truncate") {
  expect(truncate(platonic_seed("cube")), 24, 36, 14, VertexFigure{3, 8, 8});
  expect(truncate(platonic_seed("icosahedron")), 60, 90, 32,
         VertexFigure{5, 6, 6});
  expect(truncate(platonic_seed("tetrahedron")), 12, 18, 8,
         VertexFigure{3, 6, 6});

  const auto rep = analyze(truncate(platonic_seed("icosahedron")));
  CHECK(rep.counts.face_counts.at(5) == 12);
  CHECK(rep.counts.face_counts.at(6) == 20);
}

TEST_CASE("ambo") {
  expect(ambo(platonic_seed("cube")), 12, 24, 14, VertexFigure{3, 4, 3, 4});
  expect(ambo(platonic_seed("dodecahedron")), 30, 60, 32,
         VertexFigure{3, 5, 3, 5});
  // classical coincidence: the rectified tetrahedron is the octahedron
  expect(ambo(platonic_seed("tetrahedron")), 6, 12, 8,
         VertexFigure{3, 3, 3, 3});
}

TEST_CASE("expand") {
  expect(expand(platonic_seed("cube")), 24, 48, 26, VertexFigure{3, 4, 4, 4});
  expect(expand(platonic_seed("dodecahedron")), 60, 120, 62,
         VertexFigure{3, 4, 5, 4});
  // expanded tetrahedron is the cuboctahedron
  expect(expand(platonic_seed("tetrahedron")), 12, 24, 14,
         VertexFigure{3, 4, 3, 4});
}

TEST_CASE("bevel") {
  expect(bevel(platonic_seed("cube")), 48, 72, 26, VertexFigure{4, 6, 8});
  expect(bevel(platonic_seed("dodecahedron")), 120, 180, 62,
         VertexFigure{4, 6, 10});
  // beveled tetrahedron is the truncated octahedron
  expect(bevel(platonic_seed("tetrahedron")), 24, 36, 14,
         VertexFigure{4, 6, 6});
}

TEST_CASE("bevel output is 3-valent, even-faced and bipartite") {
  for (const auto& m : all_bases()) {
    const auto b = bevel(m);
    const auto rep = analyze(b);
    for (int v = 0; v < b.vertex_count(); ++v)
      CHECK(b.vertex_degree(v) == 3);
    for (int f = 0; f < b.face_count(); ++f)
      CHECK(b.face_size(f) % 2 == 0);
    CHECK(rep.bipartite);
  }
}

TEST_CASE("snub") {
  const auto sc = snub(platonic_seed("cube"));
  expect(sc, 24, 60, 38, VertexFigure{3, 3, 3, 3, 4});
  const auto sc_rep = analyze(sc);
  CHECK(sc_rep.counts.face_counts.at(3) == 32);
  CHECK(sc_rep.counts.face_counts.at(4) == 6);

  const auto sd = snub(platonic_seed("dodecahedron"));
  expect(sd, 60, 150, 92, VertexFigure{3, 3, 3, 3, 5});
  const auto sd_rep = analyze(sd);
  CHECK(sd_rep.counts.face_counts.at(3) == 80);
  CHECK(sd_rep.counts.face_counts.at(5) == 12);

  // snub tetrahedron is the icosahedron
  expect(snub(platonic_seed("tetrahedron")), 12, 30, 20,
         VertexFigure{3, 3, 3, 3, 3});

  // snub of a p-regular seed always has figure 3.3.3.3.p
  expect(snub(platonic_seed("octahedron")), 24, 60, 38,
         VertexFigure{3, 3, 3, 3, 4});
  expect(snub(platonic_seed("icosahedron")), 60, 150, 92,
         VertexFigure{3, 3, 3, 3, 5});
}

TEST_CASE("prisms and antiprisms") {
  expect(prism(3), 6, 9, 5, VertexFigure{3, 4, 4});
  expect(prism(4), 8, 12, 6, VertexFigure{4, 4, 4});  // the cube
  expect(prism(7), 14, 21, 9, VertexFigure{4, 4, 7});
  expect(antiprism(3), 6, 12, 8, VertexFigure{3, 3, 3, 3});  // the octahedron
  expect(antiprism(4), 8, 16, 10, VertexFigure{3, 3, 3, 4});
  expect(antiprism(6), 12, 24, 14, VertexFigure{3, 3, 3, 6});
  CHECK_THROWS_AS(prism(2), std::invalid_argument);
  CHECK_THROWS_AS(antiprism(2), std::invalid_argument);
}

TEST_CASE("analyze reads figures and bipartiteness off the rotation") {
  const auto cubocta = analyze(ambo(platonic_seed("cube")));
  CHECK(cubocta.uniform);
  CHECK(cubocta.figure() == VertexFigure{3, 4, 3, 4});
  CHECK_FALSE(cubocta.bipartite);  // odd faces force odd cycles

  CHECK(analyze(bevel(platonic_seed("cube"))).bipartite);

  const auto p5 = analyze(prism(5));
  CHECK(p5.uniform);
  CHECK(p5.figure() == VertexFigure{4, 4, 5});
  CHECK_FALSE(p5.bipartite);
  CHECK(analyze(prism(6)).bipartite);

  CHECK(analyze(platonic_seed("cube")).counts.valence_counts.at(3) == 8);
}

TEST_CASE("realize dispatches over the whole catalog") {
  const auto td = analyze(realize("truncated dodecahedron"));
  CHECK(td.counts.vertices == 60);
  CHECK(td.counts.edges == 90);
  CHECK(td.counts.faces == 32);
  CHECK(td.counts.face_counts.at(3) == 20);
  CHECK(td.counts.face_counts.at(10) == 12);

  const auto grc = analyze(realize("great-rhombicuboctahedron"));
  CHECK(grc.counts.vertices == 48);
  CHECK(grc.counts.edges == 72);
  CHECK(grc.counts.faces == 26);

  const auto anti5 = analyze(realize("antiprism", 5));
  CHECK(anti5.counts.vertices == 10);
  CHECK(anti5.counts.edges == 20);
  CHECK(anti5.counts.faces == 12);

  CHECK_THROWS_AS(realize("snub cuboid"), std::invalid_argument);
  CHECK_THROWS_AS(realize("prism"), std::logic_error);
  CHECK_THROWS_AS(realize("prism", 2), std::invalid_argument);
  CHECK_THROWS_AS(realize("cube", 5), std::invalid_argument);

  for (const auto& entry : reference_catalog()) {
    if (entry.is_family()) continue;
    const auto rep = analyze(realize(entry));
    CHECK(rep.uniform);
    CHECK(rep.figure() == *entry.figure);
    CHECK(rep.counts.vertices == entry.counts->vertices);
    CHECK(rep.counts.edges == entry.counts->edges);
    CHECK(rep.counts.faces == entry.counts->faces);
    CHECK(rep.counts.face_counts == entry.counts->face_counts);
    CHECK(rep.euler_ok);
    CHECK(rep.lemma1_ok);
  }
}
