#include "raagmcg/syllables.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace raagmcg {

std::string format(const DefiningGraph& graph, const SyllableId& id) {
  return graph.label(id.generator) + "^" + id.exponent.str() + "#" + std::to_string(id.occurrence);
}

std::vector<SyllableId> label_syllables(const Word& minimal_word) {
  std::map<Syllable, std::size_t> seen;
  std::vector<SyllableId> out;
  out.reserve(minimal_word.syllable_count());
  for (const auto& s : minimal_word.syllables()) {
    const auto rank = ++seen[s];
    out.push_back({s.generator, s.exponent, rank});
  }
  return out;
}

std::vector<SyllableId> syl(const Word& sigma) { return label_syllables(normalize(sigma)); }

SyllableOrder::SyllableOrder(std::vector<SyllableId> elements, std::vector<bool> relation)
    : elements_(std::move(elements)), relation_(std::move(relation)) {
  if (relation_.size() != elements_.size() * elements_.size()) {
    throw std::invalid_argument("relation matrix does not match element count");
  }
}

std::optional<std::size_t> SyllableOrder::index_of(const SyllableId& id) const {
  auto it = std::find(elements_.begin(), elements_.end(), id);
  if (it == elements_.end()) {
    return std::nullopt;
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

bool SyllableOrder::precedes(const SyllableId& s, const SyllableId& t) const {
  auto i = index_of(s);
  auto j = index_of(t);
  if (!i || !j) {
    throw std::out_of_range("syllable not in this order");
  }
  return precedes(*i, *j);
}

std::vector<std::pair<std::size_t, std::size_t>> SyllableOrder::pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < size(); ++i) {
    for (std::size_t j = 0; j < size(); ++j) {
      if (precedes(i, j)) {
        out.emplace_back(i, j);
      }
    }
  }
  return out;
}

std::vector<std::pair<std::size_t, std::size_t>> SyllableOrder::covering_pairs() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (const auto& [i, j] : pairs()) {
    bool covered = true;
    for (std::size_t k = 0; k < size() && covered; ++k) {
      if (precedes(i, k) && precedes(k, j)) {
        covered = false;
      }
    }
    if (covered) {
      out.emplace_back(i, j);
    }
  }
  return out;
}

SyllableOrder syllable_order(const Word& sigma) {
  const auto word = normalize(sigma);
  const auto& g = word.graph();
  const auto k = word.syllable_count();
  std::vector<bool> rel(k * k, false);
  // Positions are a linear extension, so a single forward sweep closes the
  // dependency relation transitively.
  for (std::size_t j = 0; j < k; ++j) {
    for (std::size_t m = 0; m < j; ++m) {
      if (g.adjacent(word[m].generator, word[j].generator)) {
        continue;
      }
      rel[m * k + j] = true;
      for (std::size_t i = 0; i < m; ++i) {
        if (rel[i * k + m]) {
          rel[i * k + j] = true;
        }
      }
    }
  }
  return SyllableOrder(label_syllables(word), std::move(rel));
}

std::string to_dot(const SyllableOrder& order, const DefiningGraph& graph) {
  std::ostringstream os;
  os << "digraph \"syllable_order\" {\n";
  for (const auto& e : order.elements()) {
    os << "  " << dot_quote(format(graph, e)) << ";\n";
  }
  for (const auto& [i, j] : order.covering_pairs()) {
    os << "  " << dot_quote(format(graph, order.elements()[i])) << " -> "
       << dot_quote(format(graph, order.elements()[j])) << ";\n";
  }
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const SyllableOrder& order, const DefiningGraph& graph) {
  nlohmann::ordered_json j;
  auto elements = nlohmann::ordered_json::array();
  for (const auto& e : order.elements()) {
    elements.push_back(format(graph, e));
  }
  auto covers = nlohmann::ordered_json::array();
  for (const auto& [a, b] : order.covering_pairs()) {
    covers.push_back({format(graph, order.elements()[a]), format(graph, order.elements()[b])});
  }
  j["elements"] = std::move(elements);
  j["covers"] = std::move(covers);
  return j;
}

ShiftMap::ShiftMap(std::size_t from_power, std::size_t to_power,
                   std::map<SyllableId, SyllableId> table)
    : from_(from_power), to_(to_power), table_(std::move(table)) {}

ShiftMap shift_map(const Word& sigma, std::size_t m, std::size_t n) {
  if (m < 1 || m >= n) {
    throw Error(ErrorCode::InvalidShiftRange,
                "shift map needs 1 <= m < n, got m=" + std::to_string(m) +
                    " n=" + std::to_string(n));
  }
  const auto word = normalize(sigma);
  if (word.support().size() < 2) {
    throw Error(ErrorCode::SingleGenerator,
                "shift maps are undefined when sigma uses fewer than two generators");
  }
  if (!is_cyclically_reduced(word)) {
    throw Error(ErrorCode::NotCyclicallyReduced, "sigma '" + format(word) + "' is not cyclically reduced");
  }
  const auto k = word.syllable_count();
  if (normalize(repeat(word, n)).syllable_count() != n * k) {
    throw Error(ErrorCode::PowerNotMinimal,
                "sigma^" + std::to_string(n) + " is shorter than " + std::to_string(n) +
                    " copies of sigma");
  }
  std::map<Syllable, std::size_t> count;
  for (const auto& s : word.syllables()) {
    ++count[s];
  }
  std::map<SyllableId, SyllableId> table;
  for (const auto& id : syl(repeat(word, m))) {
    const auto per_block = count.at(Syllable{id.generator, id.exponent});
    table.emplace(id, SyllableId{id.generator, id.exponent, id.occurrence + (n - m) * per_block});
  }
  return ShiftMap(m, n, std::move(table));
}

CyclicReduction cyclically_reduce(const Word& sigma) {
  const auto& graph = sigma.graph_ptr();
  Word current = normalize(sigma);
  Word conjugator(graph);
  bool improved = true;
  while (improved && !current.empty()) {
    improved = false;
    const auto order = syllable_order(current);
    const auto k = order.size();
    for (std::size_t i = 0; i < k && !improved; ++i) {
      bool is_first = true;
      bool is_last = true;
      for (std::size_t j = 0; j < k; ++j) {
        is_first = is_first && !order.precedes(j, i);
        is_last = is_last && !order.precedes(i, j);
      }
      const auto& id = order.elements()[i];
      const Word x(graph, {Syllable{id.generator, id.exponent}});
      const Word x_inv(graph, {Syllable{id.generator, -id.exponent}});
      if (is_first) {
        // x^-e sigma x^e, i.e. rotate the leading syllable to the back
        auto candidate = normalize(concatenate(concatenate(x_inv, current), x));
        if (candidate.syllable_count() < current.syllable_count()) {
          conjugator = multiply(conjugator, x);
          current = std::move(candidate);
          improved = true;
          continue;
        }
      }
      if (is_last) {
        auto candidate = normalize(concatenate(concatenate(x, current), x_inv));
        if (candidate.syllable_count() < current.syllable_count()) {
          conjugator = multiply(conjugator, x_inv);
          current = std::move(candidate);
          improved = true;
        }
      }
    }
  }
  return {std::move(current), std::move(conjugator)};
}

bool is_cyclically_reduced(const Word& sigma) {
  return cyclically_reduce(sigma).reduced.syllable_count() == normalize(sigma).syllable_count();
}

bool in_special_product(const Word& u, const VertexSet& left, const VertexSet& right) {
  const auto order = syllable_order(u);
  const auto& ids = order.elements();
  std::vector<bool> peeled(ids.size(), false);
  for (std::size_t j = 0; j < ids.size(); ++j) {
    bool ok = left.contains(ids[j].generator);
    for (std::size_t i = 0; ok && i < j; ++i) {
      if (order.precedes(i, j) && !peeled[i]) {
        ok = false;
      }
    }
    peeled[j] = ok;
    if (!ok && !right.contains(ids[j].generator)) {
      return false;
    }
  }
  return true;
}

}  // namespace raagmcg
