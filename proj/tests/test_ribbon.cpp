#include <doctest.h>

#include "lvr/errors.hpp"
#include "lvr/ribbon.hpp"

using namespace lvr;

namespace {

RibbonGraph build_graph(std::vector<RibbonVertex> vertices, const std::vector<std::pair<int, int>>& pairs) {
  // assemble through the enumerator by filtering on the requested matching
  RibbonGraph chosen;
  bool found = false;
  enumerate_matchings(vertices, [&](const RibbonGraph& g) {
    if (found) return;
    for (auto [a, b] : pairs)
      if (g.matching[static_cast<std::size_t>(a)] != b) return;
    chosen = g;
    found = true;
  });
  REQUIRE(found);
  return chosen;
}

}  // namespace

TEST_CASE("labeled matching counts") {
  CHECK(enumerate_ribbon_graphs_fixed(2, 1, 0).size() == 2);
  CHECK(enumerate_ribbon_graphs_fixed(3, 1, 0).size() == 6);
  auto empty = enumerate_ribbon_graphs_fixed(2, 0, 0);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].dart_count() == 0);
  CHECK_THROWS_AS(enumerate_ribbon_graphs_fixed(2, 10, 0), CapError);
  CHECK_THROWS_AS(enumerate_ribbon_graphs_fixed(1, 1, 0), DomainError);
}

TEST_CASE("euler characteristic of the basic maps") {
  // planar self-matchings of one quartic vertex: chi = 1 - 2 + 3 = 2
  for (const auto& g : enumerate_ribbon_graphs_fixed(2, 1, 0)) {
    CHECK(g.face_count() == 3);
    CHECK(g.euler_characteristic() == 2);
  }

  // twisted self-matching needs a non-alternating word: Tr M M Mdag Mdag
  RibbonVertex twisted;
  twisted.kind = RibbonVertexKind::Interaction;
  twisted.word = {HalfEdge::M, HalfEdge::M, HalfEdge::Mdag, HalfEdge::Mdag};
  RibbonGraph t = build_graph({twisted}, {{0, 2}, {1, 3}});
  CHECK(t.face_count() == 1);
  CHECK(t.euler_characteristic() == 0);

  // two-vertex ladder at p=2: chi = 2
  bool found_planar_ladder = false;
  enumerate_matchings({interaction_vertex(2), interaction_vertex(2)}, [&](const RibbonGraph& g) {
    bool cross = true;  // all edges between the two vertices
    for (int d = 0; d < g.dart_count(); ++d)
      cross = cross && (g.dart_vertex[static_cast<std::size_t>(d)] !=
                        g.dart_vertex[static_cast<std::size_t>(g.matching[static_cast<std::size_t>(d)])]);
    if (cross && g.euler_characteristic() == 2) found_planar_ladder = true;
  });
  CHECK(found_planar_ladder);
}

TEST_CASE("connected vacuum graphs have even chi at most 2") {
  for (int p : {2, 3})
    for (int v = 1; p * v <= 6; ++v)
      for (const auto& g : enumerate_ribbon_graphs_fixed(p, v, 0)) {
        if (!g.connected()) continue;
        int chi = g.euler_characteristic();
        CHECK(chi <= 2);
        CHECK(chi % 2 == 0);
      }
}

TEST_CASE("disconnected graphs refuse an euler characteristic") {
  bool saw_disconnected = false;
  enumerate_matchings({interaction_vertex(2), interaction_vertex(2)}, [&](const RibbonGraph& g) {
    if (g.connected()) return;
    saw_disconnected = true;
    CHECK_THROWS_AS(g.euler_characteristic(), DomainError);
  });
  CHECK(saw_disconnected);
}

TEST_CASE("faces partition the corners, with cilia") {
  const int p = 2;
  for (int v = 0; v <= 2; ++v)
    for (int cilia = 0; cilia <= 2; ++cilia) {
      if (v + cilia == 0) continue;
      for (const auto& g : enumerate_ribbon_graphs_fixed(p, v, cilia)) {
        std::size_t corners = 0;
        for (const auto& f : g.faces) corners += f.size();
        CHECK(corners == static_cast<std::size_t>(2 * p * v + 2 * cilia));

        // broken faces are exactly the ciliated ones, and J/Jdag marks come
        // in one pair per cilium corner
        auto per_face = g.cilia_per_face();
        int total_cilia = 0;
        for (int c : per_face) total_cilia += c;
        CHECK(total_cilia == cilia);
        CHECK(g.broken_face_count() <= cilia);
      }
    }
}

TEST_CASE("stream enumeration respects the edge bound") {
  int count = 0;
  enumerate_ribbon_graphs(2, 4, 0, [&](const RibbonGraph& g) {
    CHECK(g.edge_count() <= 4);
    ++count;
  });
  // v=0: 1 graph, v=1: 2 matchings, v=2: 24 matchings
  CHECK(count == 1 + 2 + 24);
}
