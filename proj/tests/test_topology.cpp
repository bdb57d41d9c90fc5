#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "multiwheel/families.hpp"
#include "multiwheel/isomorphism.hpp"
#include "multiwheel/planarity.hpp"

using namespace mw;

TEST_CASE("planarity decisions on known graphs") {
  CHECK(is_planar(complete_graph(4)).planar);
  CHECK(is_planar(base_graph().graph).planar);
  CHECK(is_planar(octahedron()).planar);
  CHECK(is_planar(fixtures::cube_graph()).planar);
  CHECK_FALSE(is_planar(complete_graph(5)).planar);
  CHECK_FALSE(is_planar(complete_bipartite(3, 3)).planar);
  CHECK_FALSE(is_planar(mycielski(cycle_graph(5))).planar);
  CHECK_FALSE(is_planar(fixtures::petersen_graph()).planar);
}

TEST_CASE("disconnected graphs get a decision but no face list") {
  SumResult two_k4 = sum_mod_two(complete_graph(4), complete_graph(4), {});
  PlanarityResult result = is_planar(two_k4.graph);
  CHECK(result.planar);
  CHECK_FALSE(result.embedding.has_value());

  SumResult with_k5 = sum_mod_two(complete_graph(5), complete_graph(4), {});
  PlanarityResult bad = is_planar(with_k5.graph);
  CHECK_FALSE(bad.planar);
  REQUIRE(bad.witness.has_value());
  CHECK(verify_kuratowski(with_k5.graph, *bad.witness));
}

TEST_CASE("planarity decision agrees with the subdivision brute force") {
  for (const auto& [name, g] : fixtures::planarity_corpus()) {
    if (g.vertex_count() > 10) continue;
    CHECK_MESSAGE(is_planar(g).planar == fixtures::brute_is_planar(g), name);
  }
}

TEST_CASE("returned embeddings validate with Euler characteristic 2") {
  for (const auto& [name, g] : fixtures::planarity_corpus()) {
    PlanarityResult result = is_planar(g);
    if (!result.planar || !g.connected()) continue;
    REQUIRE_MESSAGE(result.embedding.has_value(), name);
    EmbeddingSummary summary = validate_embedding(*result.embedding);
    CHECK_MESSAGE(summary.euler_characteristic == 2, name);
    // face lengths sum to twice the edge count
    long total = 0;
    for (const auto& face : result.embedding->faces)
      if (face.size() > 1) total += static_cast<long>(face.size());
    CHECK(total == 2L * g.edge_count());
  }
}

TEST_CASE("K4 embedding has four triangular faces") {
  PlanarityResult result = is_planar(complete_graph(4));
  REQUIRE(result.embedding.has_value());
  EmbeddingSummary summary = validate_embedding(*result.embedding);
  CHECK(summary.euler_characteristic == 2);
  CHECK(summary.face_lengths == std::map<int, int>{{3, 4}});
}

TEST_CASE("kuratowski witnesses revalidate") {
  for (const Graph& g :
       {complete_graph(5), complete_bipartite(3, 3), mycielski(cycle_graph(5)),
        fixtures::petersen_graph(), nonplanar_counterexample().graph}) {
    PlanarityResult result = is_planar(g);
    REQUIRE_FALSE(result.planar);
    REQUIRE(result.witness.has_value());
    CHECK(verify_kuratowski(g, *result.witness));
  }
  SUBCASE("a tampered witness fails") {
    PlanarityResult result = is_planar(complete_graph(5));
    KuratowskiWitness witness = *result.witness;
    witness.paths[0] = {witness.branch_vertices[0], witness.branch_vertices[2]};
    // endpoint no longer matches the pattern edge
    CHECK_FALSE(verify_kuratowski(complete_graph(5), witness));
  }
}

TEST_CASE("embedding validation rejects broken certificates") {
  GrotzschClassGraph built = grotzsch_class(1);
  SUBCASE("duplicated face breaks edge multiplicity") {
    Embedding bad = built.embedding;
    bad.faces.push_back(bad.faces.front());
    CHECK_THROWS_AS(validate_embedding(bad), certificate_error);
  }
  SUBCASE("walking a non-edge is rejected") {
    Embedding bad = built.embedding;
    bad.faces.back()[0] = bad.faces.back()[2];
    CHECK_THROWS_AS(validate_embedding(bad), certificate_error);
  }
  SUBCASE("missing face breaks edge multiplicity") {
    Embedding bad = built.embedding;
    bad.faces.pop_back();
    CHECK_THROWS_AS(validate_embedding(bad), certificate_error);
  }
}

TEST_CASE("projective quadrangulation certificates") {
  SUBCASE("grotzsch members certify") {
    for (int q = 1; q <= 3; ++q) {
      GrotzschClassGraph built = grotzsch_class(q);
      CHECK(certify_projective_quadrangulation(built.embedding));
      EmbeddingSummary summary = validate_embedding(built.embedding);
      CHECK(summary.euler_characteristic == 1);
      CHECK(summary.face_lengths ==
            std::map<int, int>{{4, 2 * (2 * q + 1)}});
    }
  }
  SUBCASE("a spherical embedding of the same graph does not certify") {
    Graph base = base_graph().graph;
    PlanarityResult planar = is_planar(base);
    REQUIRE(planar.embedding.has_value());
    CHECK_FALSE(certify_projective_quadrangulation(*planar.embedding));
    CHECK(certify_projective_quadrangulation(grotzsch_class(1).embedding));
  }
  SUBCASE("K4's planar embedding does not certify") {
    CHECK_FALSE(certify_projective_quadrangulation(
        *is_planar(complete_graph(4)).embedding));
  }
}

TEST_CASE("edge quadrilateral condition") {
  SUBCASE("C4 has one square through each edge, which is not enough") {
    QuadrilateralCondition cond = edge_quadrilateral_condition(cycle_graph(4));
    CHECK_FALSE(cond.every_edge_in_two);
    for (auto [edge, count] : cond.four_cycles_through) CHECK(count == 1);
  }
  SUBCASE("grotzsch members pass") {
    for (int q = 1; q <= 3; ++q)
      CHECK(edge_quadrilateral_condition(grotzsch_class(q).graph)
                .every_edge_in_two);
  }
  SUBCASE("the five-section plane multiwheel fails at a 3-4 degree edge") {
    MultiwheelSpec spec{{{1, SectionType::RimRim},
                         {1, SectionType::RimRim},
                         {1, SectionType::RimRim},
                         {1, SectionType::RimRim},
                         {1, SectionType::RimRim}}};
    Graph w15 = plane_multiwheel(spec).graph;
    QuadrilateralCondition cond = edge_quadrilateral_condition(w15);
    CHECK_FALSE(cond.every_edge_in_two);
    bool found = false;
    for (auto [edge, count] : cond.four_cycles_through) {
      if (count >= 2) continue;
      int a = w15.degree(edge.u), b = w15.degree(edge.v);
      if (std::min(a, b) == 3 && std::max(a, b) == 4) found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("planar duals") {
  SUBCASE("octahedron and cube are dual") {
    PlanarityResult planar = is_planar(octahedron());
    REQUIRE(planar.embedding.has_value());
    DualResult dual = planar_dual(*planar.embedding);
    CHECK_FALSE(dual.collapsed);
    CHECK(is_isomorphic(dual.graph, fixtures::cube_graph()));
  }
  SUBCASE("K4 is self-dual") {
    DualResult dual = planar_dual(*is_planar(complete_graph(4)).embedding);
    CHECK(is_isomorphic(dual.graph, complete_graph(4)));
  }
  SUBCASE("the base graph is self-dual in the plane") {
    Graph base = base_graph().graph;
    DualResult dual = planar_dual(*is_planar(base).embedding);
    CHECK(is_isomorphic(dual.graph, base));
  }
  SUBCASE("dual of the dual returns to the primal") {
    for (const Graph& g :
         {octahedron(), complete_graph(4), base_graph().graph}) {
      DualResult dual = planar_dual(*is_planar(g).embedding);
      DualResult back = planar_dual(*is_planar(dual.graph).embedding);
      CHECK(is_isomorphic(back.graph, g));
    }
  }
  SUBCASE("non-spherical embeddings rejected") {
    CHECK_THROWS_AS(planar_dual(grotzsch_class(2).embedding),
                    std::invalid_argument);
  }
}
