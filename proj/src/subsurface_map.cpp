#include "raagmcg/subsurface_map.hpp"

#include <algorithm>

namespace raagmcg {

bool same_subsurface(const MappedSubsurface& a, const MappedSubsurface& b) {
  if (a.base != b.base) {
    return false;
  }
  const auto& g = a.prefix.graph();
  return in_special_subgroup(multiply(invert(a.prefix), b.prefix), g.star(a.base));
}

bool disjoint_in_model(const MappedSubsurface& a, const MappedSubsurface& b) {
  const auto& g = a.prefix.graph();
  if (!g.adjacent(a.base, b.base)) {
    return false;
  }
  return in_special_product(multiply(invert(a.prefix), b.prefix), g.star(a.base),
                            g.star(b.base));
}

std::vector<MappedSyllable> x_of_word(const Word& minimal_word) {
  const auto ids = label_syllables(minimal_word);
  std::vector<MappedSyllable> out;
  out.reserve(ids.size());
  Word prefix(minimal_word.graph_ptr());
  for (std::size_t i = 0; i < ids.size(); ++i) {
    out.push_back({ids[i], MappedSubsurface{prefix, minimal_word[i].generator}});
    prefix = multiply(prefix, Word(minimal_word.graph_ptr(), {minimal_word[i]}));
  }
  return out;
}

std::vector<MappedSyllable> x_sigma(const Word& sigma) { return x_of_word(normalize(sigma)); }

std::optional<Counterexample> check_well_defined(const Word& sigma, std::size_t cap) {
  const auto canonical = x_sigma(sigma);
  std::map<SyllableId, const MappedSubsurface*> by_id;
  for (const auto& m : canonical) {
    by_id.emplace(m.syllable, &m.subsurface);
  }
  for (const auto& w : min_set(sigma, cap)) {
    for (const auto& m : x_of_word(w)) {
      auto it = by_id.find(m.syllable);
      if (it == by_id.end()) {
        return Counterexample{"syllable " + format(w.graph(), m.syllable) + " of '" + format(w) +
                              "' is missing from the canonical word"};
      }
      if (!same_subsurface(*it->second, m.subsurface)) {
        return Counterexample{"syllable " + format(w.graph(), m.syllable) + " maps to prefix '" +
                              format(m.subsurface.prefix) + "' in '" + format(w) +
                              "' but to prefix '" + format(it->second->prefix) +
                              "' in the canonical word"};
      }
    }
  }
  return std::nullopt;
}

std::optional<Counterexample> check_injective_order(const Word& sigma) {
  const auto image = x_sigma(sigma);
  const auto order = syllable_order(sigma);
  const auto& g = sigma.graph();
  for (std::size_t i = 0; i < image.size(); ++i) {
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      const auto& a = image[i];
      const auto& b = image[j];
      if (same_subsurface(a.subsurface, b.subsurface)) {
        return Counterexample{"syllables " + format(g, a.syllable) + " and " +
                              format(g, b.syllable) + " map to the same subsurface"};
      }
      const bool comparable = order.precedes(i, j) || order.precedes(j, i);
      if (!comparable && !disjoint_in_model(a.subsurface, b.subsurface)) {
        return Counterexample{"incomparable syllables " + format(g, a.syllable) + " and " +
                              format(g, b.syllable) + " map to subsurfaces not known disjoint"};
      }
    }
  }
  return std::nullopt;
}

Constants make_constants(const DefiningGraph& graph, Rational K0, Rational D, Rational A,
                         Rational B) {
  Constants c;
  c.K0 = std::move(K0);
  c.D = std::move(D);
  c.K = c.K0 + 20 + 2 * c.D;
  c.C = 2 * c.K;
  c.A = std::move(A);
  c.B = std::move(B);
  for (VertexId v = 0; v < graph.size(); ++v) {
    c.tau[v] = c.C;
  }
  return c;
}

Constants default_constants(const DefiningGraph& graph) {
  return make_constants(graph, 10, 6, 2, 10);
}

std::optional<Error> validate(const Constants& c, const DefiningGraph& graph) {
  auto invalid = [](const std::string& reason) {
    return Error(ErrorCode::InvalidConstants, reason);
  };
  if (c.K < 20) {
    return invalid("K = " + to_string(c.K) + " violates K >= 20");
  }
  if (c.K0 <= 0) {
    return invalid("K0 must be positive");
  }
  if (c.D < 0) {
    return invalid("D must be nonnegative");
  }
  if (c.K != c.K0 + 20 + 2 * c.D) {
    return invalid("K = " + to_string(c.K) + " differs from K0 + 20 + 2D = " +
                   to_string(c.K0 + 20 + 2 * c.D));
  }
  if (c.C != 2 * c.K) {
    return invalid("C = " + to_string(c.C) + " differs from 2K = " + to_string(2 * c.K));
  }
  if (c.A < 1) {
    return invalid("A must be at least 1");
  }
  if (c.B < 0) {
    return invalid("B must be nonnegative");
  }
  for (VertexId v = 0; v < graph.size(); ++v) {
    auto it = c.tau.find(v);
    if (it == c.tau.end()) {
      return invalid("no translation length given for " + graph.label(v));
    }
    if (it->second < c.C) {
      return invalid("tau(" + graph.label(v) + ") = " + to_string(it->second) +
                     " is below C = " + to_string(c.C));
    }
  }
  return std::nullopt;
}

nlohmann::ordered_json to_json(const Constants& c, const DefiningGraph& graph) {
  nlohmann::ordered_json j;
  j["K0"] = to_json_number(c.K0);
  j["D"] = to_json_number(c.D);
  j["K"] = to_json_number(c.K);
  j["C"] = to_json_number(c.C);
  j["A"] = to_json_number(c.A);
  j["B"] = to_json_number(c.B);
  nlohmann::ordered_json tau;
  for (const auto& [v, t] : c.tau) {
    tau[graph.label(v)] = to_json_number(t);
  }
  j["tau"] = std::move(tau);
  j["note"] = "model parameters, not derived from any surface";
  return j;
}

Certificate make_certificate(const Word& sigma, const Constants& constants) {
  if (auto err = validate(constants, sigma.graph())) {
    throw *err;
  }
  Certificate cert{normalize(sigma), constants, {}, 0, {}};
  for (auto& m : x_sigma(sigma)) {
    Rational bound = constants.K * Rational(boost::multiprecision::abs(m.syllable.exponent));
    cert.total += bound;
    cert.entries.push_back({m.syllable, std::move(m.subsurface), std::move(bound)});
  }
  const auto rhs = "(" + to_string(cert.total) + " - " + to_string(constants.B) + ")/" +
                   to_string(constants.A);
  cert.templates = {"d_MM >= " + rhs, "d_WP >= " + rhs, "d_T >= " + rhs};
  return cert;
}

nlohmann::ordered_json to_json(const Certificate& cert) {
  const auto& g = cert.sigma.graph();
  nlohmann::ordered_json j;
  j["sigma"] = format(cert.sigma);
  j["constants"] = to_json(cert.constants, g);
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : cert.entries) {
    nlohmann::ordered_json row;
    row["syllable"] = format(g, e.syllable);
    row["prefix"] = format(e.subsurface.prefix);
    row["base"] = g.label(e.subsurface.base);
    row["bound"] = to_json_number(e.bound);
    entries.push_back(std::move(row));
  }
  j["entries"] = std::move(entries);
  j["total"] = to_json_number(cert.total);
  j["templates"] = cert.templates;
  return j;
}

}  // namespace raagmcg
