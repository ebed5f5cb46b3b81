#include <random>

#include <gtest/gtest.h>

#include "raagmcg/defining_graph.hpp"
#include "support.hpp"

using namespace raagmcg;

namespace {

ErrorCode code_of(const GraphSpec& spec) {
  auto e = validate(spec);
  return e ? e->code() : ErrorCode::Parse;
}

}  // namespace

TEST(DefiningGraph, PentagonIsValid) {
  const auto g = pentagon_graph();
  EXPECT_EQ(g->size(), 5u);
  EXPECT_EQ(g->edge_count(), 5u);
  EXPECT_FALSE(validate(g->spec()).has_value());
}

TEST(DefiningGraph, RejectsMalformedSpecs) {
  EXPECT_EQ(code_of({{"a", "a"}, {}}), ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of({{"a", ""}, {}}), ErrorCode::EmptyLabel);
  EXPECT_EQ(code_of({{"a", "b"}, {{"a", "a"}}}), ErrorCode::SelfLoop);
  EXPECT_EQ(code_of({{"a", "b"}, {{"a", "z"}}}), ErrorCode::DanglingEdge);
  EXPECT_THROW(DefiningGraph::create({{"a", "a"}, {}}), Error);
}

TEST(DefiningGraph, ComplementOfPentagonIsPentagram) {
  const auto g = pentagon_graph();
  const auto c = g->complement();
  EXPECT_EQ(c->edge_count(), 5u);
  const auto id = [&](const char* s) { return g->index(s); };
  EXPECT_TRUE(c->adjacent(id("a"), id("c")));
  EXPECT_TRUE(c->adjacent(id("c"), id("e")));
  EXPECT_TRUE(c->adjacent(id("e"), id("b")));
  EXPECT_TRUE(c->adjacent(id("b"), id("d")));
  EXPECT_TRUE(c->adjacent(id("d"), id("a")));
  EXPECT_FALSE(c->adjacent(id("a"), id("b")));
  EXPECT_EQ(c->components(c->all_vertices()).size(), 1u);
}

TEST(DefiningGraph, ComponentsOfCommutingPairInComplement) {
  const auto g = pentagon_graph();
  const auto parts = g->complement()->components(g->vertex_set({"a", "b"}));
  ASSERT_EQ(parts.size(), 2u);
  EXPECT_EQ(parts[0], g->vertex_set({"a"}));
  EXPECT_EQ(parts[1], g->vertex_set({"b"}));
  EXPECT_TRUE(g->components({}).empty());
}

TEST(DefiningGraph, Star) {
  const auto g = pentagon_graph();
  EXPECT_EQ(g->star(g->index("a")), g->vertex_set({"a", "b", "e"}));
  EXPECT_THROW(g->index("z"), Error);
}

TEST(DefiningGraph, JsonRoundTrip) {
  const auto g = pentagon_graph();
  const auto back = graph_from_json(to_json(*g));
  EXPECT_EQ(*g, *back);
}

TEST(DefiningGraph, DotMentionsEveryEdge) {
  const auto dot = to_dot(*pentagon_graph());
  EXPECT_NE(dot.find("graph"), std::string::npos);
  EXPECT_NE(dot.find("\"a\" -- \"b\""), std::string::npos);
  std::size_t edges = 0;
  for (auto pos = dot.find("--"); pos != std::string::npos; pos = dot.find("--", pos + 2)) {
    ++edges;
  }
  EXPECT_EQ(edges, 5u);
}

TEST(DefiningGraphProperty, ComplementInvolutionAndStarSymmetry) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = testsupport::random_graph(rng, 1, 8);
    const auto cc = g->complement()->complement();
    EXPECT_EQ(*g, *cc);
    for (VertexId u = 0; u < g->size(); ++u) {
      for (VertexId v = 0; v < g->size(); ++v) {
        EXPECT_EQ(g->star(u).contains(v), g->star(v).contains(u));
      }
    }
  }
}
