#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fixtures.hpp"
#include "multiwheel/families.hpp"
#include "multiwheel/serialize.hpp"

using namespace mw;

TEST_CASE("graph6 known encodings") {
  // reference strings from the published format
  CHECK(to_graph6(complete_graph(4)) == "C~");
  CHECK(to_graph6(cycle_graph(5)) == "Dhc");
  CHECK(to_graph6(complete_graph(5)) == "D~{");
  CHECK(to_graph6(Graph::from_edges(0, {})) == "?");
}

TEST_CASE("graph6 round trips across the corpus") {
  for (const auto& [name, g] : fixtures::planarity_corpus()) {
    Graph back = from_graph6(to_graph6(g));
    CHECK_MESSAGE(back == g, name);
  }
}

TEST_CASE("graph6 rejects malformed input") {
  CHECK_THROWS_AS(from_graph6(""), std::invalid_argument);
  CHECK_THROWS_AS(from_graph6("C"), std::invalid_argument);     // truncated
  CHECK_THROWS_AS(from_graph6("C~~~"), std::invalid_argument);  // trailing
}

TEST_CASE("json round trips keep labels") {
  Graph base = base_graph().graph;
  Graph back = graph_from_json(graph_to_json(base));
  CHECK(back == base);
  for (int v = 0; v < base.vertex_count(); ++v)
    CHECK(back.role(v) == base.role(v));
}

TEST_CASE("json rejects malformed documents") {
  CHECK_THROWS_AS(graph_from_json(nlohmann::json::object()),
                  std::invalid_argument);
  nlohmann::json sparse;
  sparse["vertices"] = {0, 2};
  sparse["edges"] = nlohmann::json::array();
  CHECK_THROWS_AS(graph_from_json(sparse), std::invalid_argument);
}

TEST_CASE("dot export marks ghosts dashed and colors roles") {
  BaseGraph base = base_graph();
  SumReplay rep = replay(base.configuration);
  std::string dot = to_dot(base.graph, rep.annihilated_edges);
  CHECK(dot.find("style=dashed") != std::string::npos);
  CHECK(dot.find("gold") != std::string::npos);    // central hub
  CHECK(dot.find("orange") != std::string::npos);  // section hubs
}
