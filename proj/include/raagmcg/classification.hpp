#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "raagmcg/rational.hpp"
#include "raagmcg/realization.hpp"
#include "raagmcg/syllables.hpp"

namespace raagmcg {

enum class ThurstonType { Identity, PseudoAnosov, Reducible };

std::string_view to_string(ThurstonType t);

struct ComponentReport {
  VertexSet generators;
  bool fills_ambient = false;
  /// The syllables of the reduced word whose generators lie in this
  /// component; the subwords of different components commute.
  Word subword;
};

struct ClassificationReport {
  Word input;
  Word reduced;
  Word conjugator;
  /// Number of distinct generators in the reduced word.
  std::size_t r = 0;
  /// phi(sigma) is pseudo-Anosov on each of these.
  std::vector<ComponentReport> components;
  ThurstonType overall = ThurstonType::Identity;
  /// 1/(2r+1) when overall is pseudo-Anosov.
  std::optional<Rational> translation_bound;
  std::vector<std::string> assumptions;
};

/// Cyclically reduces sigma, splits its support along the components of the
/// complement graph and fills each component in `realization`.
ClassificationReport classify(const Word& sigma, const Realization& realization);

/// Lower bound 1/(2r+1) on the translation length of phi(sigma) on the curve
/// complex of S. Throws NotFilling unless phi(sigma) is pseudo-Anosov.
Rational translation_length_bound(const Word& sigma, const Realization& realization);

nlohmann::ordered_json to_json(const ClassificationReport& report);

enum class LemmaStatus { Pass, Fail, PreconditionUnmet, Inconclusive, Vacuous };

std::string_view to_string(LemmaStatus s);

struct LemmaResult {
  std::string lemma;
  LemmaStatus status = LemmaStatus::Vacuous;
  std::string detail;
};

struct LemmaReport {
  Word sigma;
  std::vector<LemmaResult> results;

  const LemmaResult& result(std::string_view lemma) const;
};

/// Brute-force checks of the four lemmas behind the pseudo-Anosov criterion,
/// for sigma cyclically reduced with connected complement graph on its
/// support:
///   fill        every reference curve meets some X^sigma image
///   power       sigma^n is minimal for n = 2, 3, 4 (move-graph oracle)
///   base_shift  s precedes sigma_{1,2}(s) in syl(sigma^2)
///   compare     s precedes sigma_{1,r+1}(t) in syl(sigma^{r+1}) for all s, t
/// A lemma whose standing assumption fails is reported PreconditionUnmet; a
/// power check whose search exceeds `search_budget` is Inconclusive.
LemmaReport verify_lemmas(const Word& sigma, const Realization& realization,
                          std::size_t search_budget = kDefaultCap);

nlohmann::ordered_json to_json(const LemmaReport& report);

}  // namespace raagmcg
