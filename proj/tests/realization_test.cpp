#include <random>

#include <gtest/gtest.h>

#include "raagmcg/realization.hpp"
#include "support.hpp"

using namespace raagmcg;

namespace {

CurveId curve(const Realization& r, const std::string& name) {
  const auto& cs = r.curves();
  return static_cast<CurveId>(std::find(cs.begin(), cs.end(), name) - cs.begin());
}

}  // namespace

TEST(Realization, StandardPentagon) {
  const auto g = pentagon_graph();
  const auto r = build_standard_realization(g);
  EXPECT_EQ(r.subsurfaces().size(), 5u);
  EXPECT_EQ(r.curves().size(), 10u);
  const CurveSet expected{curve(r, "tau_a"), curve(r, "gamma_a"), curve(r, "gamma_c"),
                          curve(r, "gamma_d")};
  EXPECT_EQ(r.subsurface(g->index("a")).intersects, expected);
  EXPECT_FALSE(validate_realization(r).has_value());
}

TEST(Realization, Fill) {
  const auto g = pentagon_graph();
  const auto r = build_standard_realization(g);
  const auto all = fill(r, g->all_vertices());
  EXPECT_EQ(all.components.size(), 1u);
  EXPECT_TRUE(all.fills_ambient);
  EXPECT_TRUE(all.uncovered_curves.empty());

  const auto a = fill(r, g->vertex_set({"a"}));
  EXPECT_EQ(a.components.size(), 1u);
  EXPECT_FALSE(a.fills_ambient);
  EXPECT_TRUE(a.uncovered_curves.contains(curve(r, "tau_b")));

  const auto ab = fill(r, g->vertex_set({"a", "b"}));
  EXPECT_EQ(ab.components.size(), 2u);
  EXPECT_FALSE(ab.fills_ambient);

  const auto ace = fill(r, g->vertex_set({"a", "c", "e"}));
  EXPECT_FALSE(ace.fills_ambient);
  EXPECT_TRUE(ace.uncovered_curves.contains(curve(r, "tau_b")));
  EXPECT_TRUE(ace.uncovered_curves.contains(curve(r, "tau_d")));
  EXPECT_THROW(fill(r, {7}), Error);
}

TEST(Realization, DetectsDisjointnessMismatch) {
  const auto g = pentagon_graph();
  auto j = to_json(build_standard_realization(g));
  // Make X_a and X_c disjoint although a, c do not commute.
  nlohmann::json plain = nlohmann::json::parse(j.dump());
  for (auto& s : plain["subsurfaces"]) {
    if (s["vertex"] == "a") {
      s["intersects"] = {"gamma_a", "tau_a"};
      s["contains"] = {"gamma_a", "tau_a"};
    }
    if (s["vertex"] == "c") {
      s["intersects"] = {"gamma_c", "tau_c"};
      s["contains"] = {"gamma_c", "tau_c"};
    }
  }
  const auto bad = realization_from_json(plain);
  const auto e = validate_realization(bad);
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->code(), ErrorCode::DisjointnessMismatch);
}

TEST(Realization, DetectsNesting) {
  GraphSpec spec{{"a", "b"}, {}};
  const auto g = DefiningGraph::create(spec);
  nlohmann::json j = {
      {"graph", nlohmann::json::parse(to_json(*g).dump())},
      {"curves", {"x", "y"}},
      {"subsurfaces",
       {{{"vertex", "a"}, {"intersects", {"x"}}},
        {{"vertex", "b"}, {"intersects", {"x", "y"}}}}}};
  const auto e = validate_realization(realization_from_json(j));
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->code(), ErrorCode::NestingDetected);
}

TEST(Realization, StructuralErrors) {
  const auto g = pentagon_graph();
  EXPECT_THROW(Realization(g, "S", {"x"}, {}), Error);
  try {
    Realization(g, "S", {"x"}, {});
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidRealization);
  }
}

TEST(Realization, JsonRoundTrip) {
  const auto r = build_standard_realization(pentagon_graph());
  const auto back = realization_from_json(nlohmann::json::parse(to_json(r).dump()));
  EXPECT_EQ(to_json(back).dump(), to_json(r).dump());
}

TEST(RealizationProperty, StandardRealizationIsNiceAndFillIsMonotone) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const auto g = testsupport::random_graph(rng, 1, 8);
    const auto r = build_standard_realization(g);
    const auto e = validate_realization(r);
    EXPECT_FALSE(e.has_value()) << (e ? e->what() : "");
    VertexSet subset;
    std::size_t uncovered = r.curves().size();
    for (VertexId v = 0; v < g->size(); ++v) {
      subset.insert(v);
      const auto f = fill(r, subset);
      EXPECT_LE(f.uncovered_curves.size(), uncovered);
      uncovered = f.uncovered_curves.size();
    }
    EXPECT_TRUE(fill(r, g->all_vertices()).fills_ambient);
  }
}
