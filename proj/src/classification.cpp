#include "raagmcg/classification.hpp"

#include <algorithm>

#include "raagmcg/oracle.hpp"
#include "raagmcg/subsurface_map.hpp"

namespace raagmcg {

std::string_view to_string(ThurstonType t) {
  switch (t) {
    case ThurstonType::Identity: return "identity";
    case ThurstonType::PseudoAnosov: return "pseudo_anosov";
    case ThurstonType::Reducible: return "reducible";
  }
  return "unknown";
}

std::string_view to_string(LemmaStatus s) {
  switch (s) {
    case LemmaStatus::Pass: return "pass";
    case LemmaStatus::Fail: return "fail";
    case LemmaStatus::PreconditionUnmet: return "precondition_unmet";
    case LemmaStatus::Inconclusive: return "inconclusive";
    case LemmaStatus::Vacuous: return "vacuous_pass";
  }
  return "unknown";
}

namespace {

Word restrict_to(const Word& word, const VertexSet& generators) {
  std::vector<Syllable> out;
  for (const auto& s : word.syllables()) {
    if (generators.contains(s.generator)) {
      out.push_back(s);
    }
  }
  return normalize(Word(word.graph_ptr(), std::move(out)));
}

void require_graph(const Word& sigma, const Realization& realization) {
  if (sigma.graph_ptr() != realization.graph_ptr() && !(sigma.graph() == realization.graph())) {
    throw Error(ErrorCode::GraphMismatch, "word and realization use different graphs");
  }
}

}  // namespace

ClassificationReport classify(const Word& sigma, const Realization& realization) {
  require_graph(sigma, realization);
  auto [reduced, conjugator] = cyclically_reduce(sigma);
  ClassificationReport report{sigma, reduced, conjugator, 0, {}, ThurstonType::Identity, {}, {}};
  report.assumptions = {"tau_X(f_i) >= C for all i", "realization is nice"};
  const auto support = reduced.support();
  report.r = support.size();
  if (reduced.empty()) {
    return report;
  }
  for (auto& part : fill(realization, support).components) {
    const bool fills = fill(realization, part).fills_ambient;
    auto subword = restrict_to(reduced, part);
    report.components.push_back({std::move(part), fills, std::move(subword)});
  }
  if (report.components.size() == 1 && report.components.front().fills_ambient) {
    report.overall = ThurstonType::PseudoAnosov;
    report.translation_bound = Rational(1, 2 * static_cast<long long>(report.r) + 1);
  } else {
    report.overall = ThurstonType::Reducible;
  }
  return report;
}

Rational translation_length_bound(const Word& sigma, const Realization& realization) {
  const auto report = classify(sigma, realization);
  if (report.overall != ThurstonType::PseudoAnosov) {
    throw Error(ErrorCode::NotFilling, "phi(" + format(normalize(sigma)) +
                                           ") is not pseudo-Anosov: its support does not fill");
  }
  return *report.translation_bound;
}

nlohmann::ordered_json to_json(const ClassificationReport& report) {
  const auto& g = report.reduced.graph();
  nlohmann::ordered_json j;
  j["input"] = format(report.input);
  j["reduced"] = format(report.reduced);
  j["conjugator"] = format(report.conjugator);
  j["r"] = report.r;
  auto comps = nlohmann::ordered_json::array();
  for (const auto& c : report.components) {
    nlohmann::ordered_json e;
    auto gens = nlohmann::ordered_json::array();
    for (auto v : c.generators) {
      gens.push_back(g.label(v));
    }
    e["generators"] = std::move(gens);
    e["fills_ambient"] = c.fills_ambient;
    e["type"] = "pseudo_anosov_on_component";
    e["subword"] = format(c.subword);
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  j["overall"] = to_string(report.overall);
  j["translation_bound"] =
      report.translation_bound ? nlohmann::ordered_json(to_string(*report.translation_bound))
                               : nlohmann::ordered_json(nullptr);
  j["assumptions"] = report.assumptions;
  return j;
}

const LemmaResult& LemmaReport::result(std::string_view lemma) const {
  auto it = std::find_if(results.begin(), results.end(),
                         [&](const LemmaResult& r) { return r.lemma == lemma; });
  if (it == results.end()) {
    throw std::out_of_range("no lemma named " + std::string(lemma));
  }
  return *it;
}

namespace {

LemmaResult check_fill(const Word& word, const Realization& realization) {
  LemmaResult res{"fill", LemmaStatus::Pass, ""};
  const auto base = fill(realization, word.support());
  if (!base.fills_ambient) {
    res.status = LemmaStatus::PreconditionUnmet;
    res.detail = "X_v for v in the support leave " + std::to_string(base.uncovered_curves.size()) +
                 " reference curve(s) uncovered, e.g. " +
                 realization.curves()[*base.uncovered_curves.begin()];
    return res;
  }
  // phi(u) fixes every curve that no generator of u meets, so such a curve
  // meets phi(u)(X_j) exactly when it meets X_j.
  const auto images = x_sigma(word);
  for (CurveId c = 0; c < realization.curves().size(); ++c) {
    const bool covered = std::any_of(images.begin(), images.end(), [&](const MappedSyllable& m) {
      const auto prefix_support = m.subsurface.prefix.support();
      return realization.meets(m.subsurface.base, c) &&
             std::none_of(prefix_support.begin(), prefix_support.end(),
                          [&](VertexId g) { return realization.meets(g, c); });
    });
    if (!covered) {
      res.status = LemmaStatus::Fail;
      res.detail = "curve " + realization.curves()[c] + " misses every image subsurface";
      return res;
    }
  }
  res.detail = "all " + std::to_string(realization.curves().size()) + " reference curves covered";
  return res;
}

LemmaResult check_power(const Word& word, std::size_t budget) {
  LemmaResult res{"power", LemmaStatus::Pass, ""};
  const auto k = word.syllable_count();
  for (std::size_t n = 2; n <= 4; ++n) {
    try {
      const auto best = oracle_min_syllables(repeat(word, n), budget);
      if (best != n * k) {
        res.status = LemmaStatus::Fail;
        res.detail = "sigma^" + std::to_string(n) + " reduces to " + std::to_string(best) +
                     " syllables, expected " + std::to_string(n * k);
        return res;
      }
    } catch (const Error& e) {
      if (e.code() != ErrorCode::SearchBudgetExceeded) {
        throw;
      }
      res.status = LemmaStatus::Inconclusive;
      res.detail = "oracle budget exceeded at n = " + std::to_string(n);
      return res;
    }
  }
  res.detail = "sigma^n minimal for n = 2, 3, 4";
  return res;
}

LemmaResult check_base_shift(const Word& word) {
  LemmaResult res{"base_shift", LemmaStatus::Pass, ""};
  const auto shift = shift_map(word, 1, 2);
  const auto order = syllable_order(repeat(word, 2));
  for (const auto& s : syl(word)) {
    if (!order.precedes(s, shift(s))) {
      res.status = LemmaStatus::Fail;
      res.detail = format(word.graph(), s) + " does not precede its shift in sigma^2";
      return res;
    }
  }
  return res;
}

LemmaResult check_compare(const Word& word) {
  LemmaResult res{"compare", LemmaStatus::Pass, ""};
  const auto r = word.support().size();
  const auto shift = shift_map(word, 1, r + 1);
  const auto order = syllable_order(repeat(word, r + 1));
  const auto ids = syl(word);
  for (const auto& s : ids) {
    for (const auto& t : ids) {
      if (!order.precedes(s, shift(t))) {
        res.status = LemmaStatus::Fail;
        res.detail = format(word.graph(), s) + " does not precede the shift of " +
                     format(word.graph(), t) + " in sigma^" + std::to_string(r + 1);
        return res;
      }
    }
  }
  return res;
}

}  // namespace

LemmaReport verify_lemmas(const Word& sigma, const Realization& realization,
                          std::size_t search_budget) {
  require_graph(sigma, realization);
  const auto word = normalize(sigma);
  LemmaReport report{word, {}};
  const std::vector<std::string> names{"fill", "power", "base_shift", "compare"};
  auto all = [&](LemmaStatus status, const std::string& detail) {
    for (const auto& n : names) {
      report.results.push_back({n, status, detail});
    }
    return report;
  };
  if (word.empty()) {
    return all(LemmaStatus::Vacuous, "identity element");
  }
  if (!is_cyclically_reduced(word)) {
    return all(LemmaStatus::PreconditionUnmet, "sigma is not cyclically reduced");
  }
  const auto support = word.support();
  std::string structural;
  if (support.size() < 2) {
    structural = "sigma uses a single generator";
  } else if (word.graph().complement()->components(support).size() != 1) {
    structural = "complement graph on the support is disconnected";
  }
  report.results.push_back(check_fill(word, realization));
  if (!structural.empty()) {
    for (std::size_t i = 1; i < names.size(); ++i) {
      report.results.push_back({names[i], LemmaStatus::PreconditionUnmet, structural});
    }
    return report;
  }
  report.results.push_back(check_power(word, search_budget));
  auto guarded = [&](const std::string& name, auto check) {
    try {
      report.results.push_back(check(word));
    } catch (const Error& e) {
      report.results.push_back({name, LemmaStatus::Fail, e.what()});
    }
  };
  guarded("base_shift", check_base_shift);
  guarded("compare", check_compare);
  return report;
}

nlohmann::ordered_json to_json(const LemmaReport& report) {
  nlohmann::ordered_json j;
  j["sigma"] = format(report.sigma);
  auto rows = nlohmann::ordered_json::array();
  for (const auto& r : report.results) {
    nlohmann::ordered_json e;
    e["lemma"] = r.lemma;
    e["status"] = to_string(r.status);
    e["detail"] = r.detail;
    rows.push_back(std::move(e));
  }
  j["results"] = std::move(rows);
  return j;
}

}  // namespace raagmcg
