#include "support.hpp"

#include <deque>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "raagmcg/syllables.hpp"

namespace testsupport {

PlainWord to_plain(const raagmcg::Word& w) {
  PlainWord out;
  for (const auto& s : w.syllables()) {
    out.emplace_back(w.graph().label(s.generator), s.exponent.convert_to<long long>());
  }
  return out;
}

CommutationTable::CommutationTable(const raagmcg::GraphSpec& spec) {
  for (const auto& [u, v] : spec.edges) {
    edges_.emplace(u, v);
    edges_.emplace(v, u);
  }
}

bool CommutationTable::commute(const std::string& x, const std::string& y) const {
  return x == y || edges_.contains({x, y});
}

std::set<PlainWord> naive_min_set(const raagmcg::GraphSpec& spec, const PlainWord& w,
                                  std::size_t budget) {
  const CommutationTable table(spec);
  std::set<PlainWord> seen{w};
  std::deque<PlainWord> queue{w};
  auto visit = [&](PlainWord next) {
    if (seen.insert(next).second) {
      queue.push_back(std::move(next));
    }
  };
  while (!queue.empty()) {
    if (seen.size() > budget) {
      return {};
    }
    const PlainWord cur = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < cur.size(); ++i) {
      if (cur[i].second == 0) {
        PlainWord next = cur;
        next.erase(next.begin() + static_cast<std::ptrdiff_t>(i));
        visit(std::move(next));
      }
      if (i + 1 < cur.size()) {
        if (cur[i].first == cur[i + 1].first) {
          PlainWord next = cur;
          next[i].second += next[i + 1].second;
          next.erase(next.begin() + static_cast<std::ptrdiff_t>(i) + 1);
          visit(std::move(next));
        } else if (table.commute(cur[i].first, cur[i + 1].first)) {
          PlainWord next = cur;
          std::swap(next[i], next[i + 1]);
          visit(std::move(next));
        }
      }
    }
  }
  std::size_t best = w.size();
  for (const auto& v : seen) {
    best = std::min(best, v.size());
  }
  std::set<PlainWord> out;
  for (const auto& v : seen) {
    if (v.size() == best) {
      out.insert(v);
    }
  }
  return out;
}

std::vector<PlainId> plain_ids(const PlainWord& w) {
  std::map<PlainSyllable, std::size_t> seen;
  std::vector<PlainId> out;
  for (const auto& s : w) {
    out.emplace_back(s.first, s.second, ++seen[s]);
  }
  return out;
}

std::set<std::pair<PlainId, PlainId>> naive_positional_order(const std::set<PlainWord>& words) {
  std::set<std::pair<PlainId, PlainId>> result;
  bool first = true;
  for (const auto& w : words) {
    const auto ids = plain_ids(w);
    std::set<std::pair<PlainId, PlainId>> here;
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = i + 1; j < ids.size(); ++j) {
        here.emplace(ids[i], ids[j]);
      }
    }
    if (first) {
      result = std::move(here);
      first = false;
    } else {
      std::set<std::pair<PlainId, PlainId>> kept;
      for (const auto& p : result) {
        if (here.contains(p)) {
          kept.insert(p);
        }
      }
      result = std::move(kept);
    }
  }
  return result;
}

std::size_t min_conjugate_syllables(const raagmcg::Word& sigma, std::size_t max_letters) {
  using raagmcg::Syllable;
  using raagmcg::Word;
  const auto& g = sigma.graph_ptr();
  std::vector<Syllable> alphabet;
  for (raagmcg::VertexId v = 0; v < g->size(); ++v) {
    alphabet.push_back({v, 1});
    alphabet.push_back({v, -1});
  }
  std::size_t best = raagmcg::normalize(sigma).syllable_count();
  std::vector<Word> layer{Word(g)};
  for (std::size_t len = 1; len <= max_letters; ++len) {
    std::vector<Word> next;
    for (const auto& c : layer) {
      for (const auto& a : alphabet) {
        std::vector<Syllable> syl(c.syllables().begin(), c.syllables().end());
        syl.push_back(a);
        Word cw(g, std::move(syl));
        const Word conj = raagmcg::multiply(raagmcg::multiply(cw, sigma), raagmcg::invert(cw));
        best = std::min(best, conj.syllable_count());
        next.push_back(std::move(cw));
      }
    }
    layer = std::move(next);
  }
  return best;
}

std::vector<std::string> letters(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) {
    out.emplace_back(1, static_cast<char>('a' + i));
  }
  return out;
}

raagmcg::GraphPtr random_graph(std::mt19937& rng, std::size_t min_vertices,
                               std::size_t max_vertices, double edge_probability) {
  std::uniform_int_distribution<std::size_t> size(min_vertices, max_vertices);
  std::bernoulli_distribution edge(edge_probability);
  raagmcg::GraphSpec spec;
  spec.vertices = letters(size(rng));
  for (std::size_t i = 0; i < spec.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < spec.vertices.size(); ++j) {
      if (edge(rng)) {
        spec.edges.emplace_back(spec.vertices[i], spec.vertices[j]);
      }
    }
  }
  return raagmcg::DefiningGraph::create(spec);
}

raagmcg::Word random_word(std::mt19937& rng, const raagmcg::GraphPtr& graph,
                          std::size_t min_syllables, std::size_t max_syllables) {
  static constexpr long long kExponents[] = {-2, -1, 1, 2};
  std::uniform_int_distribution<std::size_t> count(min_syllables, max_syllables);
  std::uniform_int_distribution<std::size_t> gen(0, graph->size() - 1);
  std::uniform_int_distribution<std::size_t> exp(0, 3);
  std::vector<raagmcg::Syllable> syl;
  const std::size_t k = count(rng);
  for (std::size_t i = 0; i < k; ++i) {
    syl.push_back({gen(rng), kExponents[exp(rng)]});
  }
  return raagmcg::Word(graph, std::move(syl));
}

bool complement_connected_on_support(const raagmcg::Word& w) {
  const auto support = w.support();
  return support.size() >= 2 && w.graph().complement()->components(support).size() == 1;
}

raagmcg::Word random_cyclically_reduced(std::mt19937& rng, const raagmcg::GraphPtr& graph,
                                        std::size_t max_syllables, bool require_connected) {
  if (require_connected && graph->complement()->edge_count() == 0) {
    throw std::invalid_argument("random_cyclically_reduced: complement graph has no edges");
  }
  for (int attempt = 0; attempt < 100000; ++attempt) {
    const auto w = random_word(rng, graph, 1, max_syllables + 2);
    auto reduced = raagmcg::cyclically_reduce(w).reduced;
    if (reduced.empty() || reduced.syllable_count() > max_syllables) {
      continue;
    }
    if (require_connected && !complement_connected_on_support(reduced)) {
      continue;
    }
    return reduced;
  }
  throw std::runtime_error("random_cyclically_reduced: no sample found");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot open " + path);
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace testsupport
