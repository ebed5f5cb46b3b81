#include "raagmcg/word.hpp"

#include <algorithm>
#include <deque>
#include <regex>
#include <set>
#include <sstream>

namespace raagmcg {

namespace {

void require_same_graph(const Word& u, const Word& v) {
  if (u.graph_ptr() != v.graph_ptr() && !(u.graph() == v.graph())) {
    throw Error(ErrorCode::GraphMismatch, "words are over different defining graphs");
  }
}

std::string key_of(const std::vector<Syllable>& syllables) {
  std::string key;
  for (const auto& s : syllables) {
    key += std::to_string(s.generator);
    key += ':';
    key += s.exponent.str();
    key += ';';
  }
  return key;
}

std::vector<Syllable> reduce(const DefiningGraph& g, std::span<const Syllable> input) {
  std::vector<Syllable> out;
  out.reserve(input.size());
  for (const auto& s : input) {
    if (s.exponent == 0) {
      continue;
    }
    bool merged = false;
    for (std::size_t i = out.size(); i-- > 0;) {
      if (out[i].generator == s.generator) {
        out[i].exponent += s.exponent;
        if (out[i].exponent == 0) {
          out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
        }
        merged = true;
        break;
      }
      if (!g.adjacent(out[i].generator, s.generator)) {
        break;
      }
    }
    if (!merged) {
      out.push_back(s);
    }
  }
  return out;
}

std::vector<Syllable> layer_sort(const DefiningGraph& g, std::vector<Syllable> word) {
  std::vector<std::size_t> layer(word.size(), 0);
  for (std::size_t i = 0; i < word.size(); ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      if (!g.adjacent(word[j].generator, word[i].generator)) {
        layer[i] = std::max(layer[i], layer[j] + 1);
      }
    }
  }
  std::vector<std::size_t> order(word.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    order[i] = i;
  }
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (layer[a] != layer[b]) {
      return layer[a] < layer[b];
    }
    return word[a].generator < word[b].generator;
  });
  std::vector<Syllable> out;
  out.reserve(word.size());
  for (auto i : order) {
    out.push_back(std::move(word[i]));
  }
  return out;
}

}  // namespace

Word::Word(GraphPtr graph) : graph_(std::move(graph)) {}

Word::Word(GraphPtr graph, std::vector<Syllable> syllables)
    : graph_(std::move(graph)), syllables_(std::move(syllables)) {
  for (const auto& s : syllables_) {
    if (s.generator >= graph_->size()) {
      throw Error(ErrorCode::UnknownVertex,
                  "generator index " + std::to_string(s.generator) + " out of range");
    }
  }
}

Exponent Word::letter_length() const {
  Exponent total = 0;
  for (const auto& s : syllables_) {
    total += boost::multiprecision::abs(s.exponent);
  }
  return total;
}

VertexSet Word::support() const {
  VertexSet out;
  for (const auto& s : syllables_) {
    if (s.exponent != 0) {
      out.insert(s.generator);
    }
  }
  return out;
}

bool operator==(const Word& a, const Word& b) {
  return (a.graph_ == b.graph_ || *a.graph_ == *b.graph_) && a.syllables_ == b.syllables_;
}

Word parse_word(const GraphPtr& graph, std::string_view text) {
  static const std::regex exponent_re("[+-]?[0-9]+");
  std::vector<Syllable> out;
  std::istringstream in{std::string(text)};
  std::string token;
  while (in >> token) {
    std::string name = token;
    Exponent e = 1;
    if (auto caret = token.find('^'); caret != std::string::npos) {
      name = token.substr(0, caret);
      auto digits = token.substr(caret + 1);
      if (!std::regex_match(digits, exponent_re)) {
        throw Error(ErrorCode::Parse, "bad exponent in token '" + token + "'");
      }
      if (digits.front() == '+') {
        digits.erase(0, 1);
      }
      e = Exponent(digits);
    }
    if (name.empty()) {
      throw Error(ErrorCode::Parse, "missing generator name in token '" + token + "'");
    }
    const auto v = graph->index(name);
    if (e != 0) {
      out.push_back({v, e});
    }
  }
  return Word(graph, std::move(out));
}

std::string format(const DefiningGraph& graph, const Syllable& s) {
  if (s.exponent == 1) {
    return graph.label(s.generator);
  }
  return graph.label(s.generator) + "^" + s.exponent.str();
}

std::string format(const Word& w) {
  std::string out;
  for (const auto& s : w.syllables()) {
    if (!out.empty()) {
      out += ' ';
    }
    out += format(w.graph(), s);
  }
  return out;
}

Word apply_move(const Word& w, MoveSpec move) {
  const auto& syl = w.syllables();
  const auto i = move.position;
  auto fail = [&](const std::string& reason) {
    return Error(ErrorCode::MoveNotApplicable,
                 "move " + std::to_string(static_cast<int>(move.type)) + " at position " +
                     std::to_string(i) + ": " + reason);
  };
  if (i >= syl.size()) {
    throw fail("position out of range");
  }
  std::vector<Syllable> out(syl.begin(), syl.end());
  switch (move.type) {
    case MoveType::RemoveZero:
      if (syl[i].exponent != 0) {
        throw fail("exponent is nonzero");
      }
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i));
      break;
    case MoveType::Merge:
      if (i + 1 >= syl.size()) {
        throw fail("no following syllable");
      }
      if (syl[i].generator != syl[i + 1].generator) {
        throw fail("generators differ");
      }
      out[i].exponent += out[i + 1].exponent;
      out.erase(out.begin() + static_cast<std::ptrdiff_t>(i + 1));
      break;
    case MoveType::Swap:
      if (i + 1 >= syl.size()) {
        throw fail("no following syllable");
      }
      if (!w.graph().commute(syl[i].generator, syl[i + 1].generator)) {
        throw fail("generators " + w.graph().label(syl[i].generator) + " and " +
                   w.graph().label(syl[i + 1].generator) + " do not commute");
      }
      std::swap(out[i], out[i + 1]);
      break;
  }
  return Word(w.graph_ptr(), std::move(out));
}

Word normalize(const Word& w) {
  return Word(w.graph_ptr(), layer_sort(w.graph(), reduce(w.graph(), w.syllables())));
}

bool is_minimal(const Word& w) {
  return normalize(w).syllable_count() == w.syllable_count();
}

std::vector<Word> min_set(const Word& sigma, std::size_t cap) {
  const auto& g = sigma.graph();
  const auto start = normalize(sigma);
  std::vector<Syllable> first(start.syllables().begin(), start.syllables().end());
  std::set<std::string> seen{key_of(first)};
  std::vector<std::vector<Syllable>> found{first};
  std::deque<std::size_t> frontier{0};
  if (found.size() > cap) {
    throw Error(ErrorCode::CapExceeded, "Min(sigma) exceeds cap " + std::to_string(cap));
  }
  while (!frontier.empty()) {
    const auto current = found[frontier.front()];
    frontier.pop_front();
    for (std::size_t i = 0; i + 1 < current.size(); ++i) {
      if (!g.adjacent(current[i].generator, current[i + 1].generator)) {
        continue;
      }
      auto next = current;
      std::swap(next[i], next[i + 1]);
      if (seen.insert(key_of(next)).second) {
        found.push_back(std::move(next));
        if (found.size() > cap) {
          throw Error(ErrorCode::CapExceeded, "Min(sigma) exceeds cap " + std::to_string(cap));
        }
        frontier.push_back(found.size() - 1);
      }
    }
  }
  std::sort(found.begin(), found.end());
  std::vector<Word> out;
  out.reserve(found.size());
  for (auto& f : found) {
    out.emplace_back(sigma.graph_ptr(), std::move(f));
  }
  return out;
}

Word concatenate(const Word& u, const Word& v) {
  require_same_graph(u, v);
  std::vector<Syllable> out(u.syllables().begin(), u.syllables().end());
  out.insert(out.end(), v.syllables().begin(), v.syllables().end());
  return Word(u.graph_ptr(), std::move(out));
}

Word repeat(const Word& w, std::size_t n) {
  std::vector<Syllable> out;
  out.reserve(w.syllable_count() * n);
  for (std::size_t k = 0; k < n; ++k) {
    out.insert(out.end(), w.syllables().begin(), w.syllables().end());
  }
  return Word(w.graph_ptr(), std::move(out));
}

Word multiply(const Word& u, const Word& v) { return normalize(concatenate(u, v)); }

Word invert(const Word& u) {
  std::vector<Syllable> out;
  out.reserve(u.syllable_count());
  for (auto it = u.syllables().rbegin(); it != u.syllables().rend(); ++it) {
    out.push_back({it->generator, -it->exponent});
  }
  return normalize(Word(u.graph_ptr(), std::move(out)));
}

Word power(const Word& u, const Exponent& n) {
  Word base = n < 0 ? invert(u) : normalize(u);
  Exponent remaining = boost::multiprecision::abs(n);
  Word result(u.graph_ptr());
  while (remaining > 0) {
    if ((remaining & 1) != 0) {
      result = multiply(result, base);
    }
    remaining >>= 1;
    if (remaining > 0) {
      base = multiply(base, base);
    }
  }
  return result;
}

bool equal(const Word& u, const Word& v) {
  require_same_graph(u, v);
  const auto nu = normalize(u);
  const auto nv = normalize(v);
  return std::ranges::equal(nu.syllables(), nv.syllables());
}

bool in_special_subgroup(const Word& u, const VertexSet& generators) {
  const Word n = normalize(u);
  for (const auto& s : n.syllables()) {
    if (!generators.contains(s.generator)) {
      return false;
    }
  }
  return true;
}

}  // namespace raagmcg
