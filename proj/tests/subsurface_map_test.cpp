#include <random>

#include <gtest/gtest.h>

#include "raagmcg/subsurface_map.hpp"
#include "support.hpp"

using namespace raagmcg;

namespace {

GraphPtr pentagon() {
  static const GraphPtr g = pentagon_graph();
  return g;
}

Word w(const char* text) { return parse_word(pentagon(), text); }

}  // namespace

TEST(SubsurfaceMap, XSigmaOfAc) {
  const auto x = x_sigma(w("a c"));
  ASSERT_EQ(x.size(), 2u);
  EXPECT_TRUE(x[0].subsurface.prefix.empty());
  EXPECT_EQ(x[0].subsurface.base, pentagon()->index("a"));
  EXPECT_EQ(format(x[1].subsurface.prefix), "a");
  EXPECT_EQ(x[1].subsurface.base, pentagon()->index("c"));
}

TEST(SubsurfaceMap, StarCosetEquality) {
  const auto b = pentagon()->index("b");
  EXPECT_TRUE(same_subsurface({w("a"), b}, {w(""), b}));
  EXPECT_FALSE(same_subsurface({w("c"), pentagon()->index("a")}, {w(""), pentagon()->index("a")}));
  EXPECT_FALSE(same_subsurface({w(""), b}, {w(""), pentagon()->index("a")}));
}

TEST(SubsurfaceMap, WellDefinedAndInjective) {
  for (const char* s : {"a b", "a c e", "a c e b d", "a c a", "a^2 b^-1 c"}) {
    EXPECT_FALSE(check_well_defined(w(s)).has_value()) << s;
    EXPECT_FALSE(check_injective_order(w(s)).has_value()) << s;
  }
  const auto x = x_sigma(w("a c a"));
  EXPECT_FALSE(same_subsurface(x[0].subsurface, x[2].subsurface));
}

TEST(SubsurfaceMap, Certificate) {
  const auto cert = make_certificate(w("a^2 c^-1"), default_constants(*pentagon()));
  ASSERT_EQ(cert.entries.size(), 2u);
  EXPECT_EQ(cert.entries[0].bound, 84);
  EXPECT_EQ(cert.entries[1].bound, 42);
  EXPECT_EQ(cert.total, 126);
  EXPECT_EQ(to_string(cert.constants.K), "42");
  EXPECT_EQ(to_string(cert.constants.C), "84");
  ASSERT_EQ(cert.templates.size(), 3u);
  EXPECT_EQ(cert.templates[0], "d_MM >= (126 - 10)/2");
}

TEST(SubsurfaceMap, RejectsSmallK) {
  auto c = default_constants(*pentagon());
  c.K = 15;
  c.C = 30;
  const auto e = validate(c, *pentagon());
  ASSERT_TRUE(e.has_value());
  EXPECT_EQ(e->code(), ErrorCode::InvalidConstants);
  EXPECT_THROW(make_certificate(w("a"), c), Error);
  const auto derived = make_constants(*pentagon(), -15, 5, 2, 10);
  EXPECT_TRUE(validate(derived, *pentagon()).has_value());
}

TEST(SubsurfaceMapProperty, ShiftCommutesWithXSigma) {
  // sigma's block-2 copy in sigma^2 maps to phi(sigma) applied to the
  // block-1 image: prefix sigma * u, same base.
  std::mt19937 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = testsupport::random_graph(rng, 3, 6);
    if (g->complement()->edge_count() == 0) {
      continue;
    }
    const auto sigma = testsupport::random_cyclically_reduced(rng, g, 4, true);
    const auto x1 = x_sigma(sigma);
    const auto x2 = x_sigma(power(sigma, 2));
    const auto shift = shift_map(sigma, 1, 2);
    for (const auto& m : x1) {
      const auto target = shift(m.syllable);
      const auto it = std::find_if(x2.begin(), x2.end(),
                                   [&](const MappedSyllable& y) { return y.syllable == target; });
      ASSERT_NE(it, x2.end());
      const MappedSubsurface moved{multiply(sigma, m.subsurface.prefix), m.subsurface.base};
      EXPECT_TRUE(same_subsurface(it->subsurface, moved)) << format(sigma);
    }
  }
}
