#pragma once

#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "raagmcg/defining_graph.hpp"
#include "raagmcg/realization.hpp"
#include "raagmcg/word.hpp"

namespace testsupport {

// Words as plain (label, exponent) lists, so the naive routines below share
// no code with the library.
using PlainSyllable = std::pair<std::string, long long>;
using PlainWord = std::vector<PlainSyllable>;

PlainWord to_plain(const raagmcg::Word& w);

class CommutationTable {
 public:
  explicit CommutationTable(const raagmcg::GraphSpec& spec);
  bool commute(const std::string& x, const std::string& y) const;

 private:
  std::set<std::pair<std::string, std::string>> edges_;
};

// Every word reachable from `w` by moves (1)-(3) that has the fewest
// syllables among reachable words. Returns an empty set if more than
// `budget` words are visited.
std::set<PlainWord> naive_min_set(const raagmcg::GraphSpec& spec, const PlainWord& w,
                                  std::size_t budget = 200000);

// (label, exponent, occurrence)
using PlainId = std::tuple<std::string, long long, std::size_t>;
std::vector<PlainId> plain_ids(const PlainWord& w);

// s before t in every word of `words`.
std::set<std::pair<PlainId, PlainId>> naive_positional_order(const std::set<PlainWord>& words);

// Fewest syllables of c sigma c^-1 over all words c of at most `max_letters`
// letters.
std::size_t min_conjugate_syllables(const raagmcg::Word& sigma, std::size_t max_letters);

std::vector<std::string> letters(std::size_t n);
raagmcg::GraphPtr random_graph(std::mt19937& rng, std::size_t min_vertices,
                               std::size_t max_vertices, double edge_probability = 0.4);

// Syllable count uniform in [min_syllables, max_syllables]; exponents drawn
// from {-2, -1, 1, 2}. Consecutive syllables may share a generator.
raagmcg::Word random_word(std::mt19937& rng, const raagmcg::GraphPtr& graph,
                          std::size_t min_syllables, std::size_t max_syllables);

bool complement_connected_on_support(const raagmcg::Word& w);

// Draws random words and cyclically reduces them until one has between 1 and
// `max_syllables` syllables (and, when asked, at least two generators with a
// connected complement graph on its support).
raagmcg::Word random_cyclically_reduced(std::mt19937& rng, const raagmcg::GraphPtr& graph,
                                        std::size_t max_syllables, bool require_connected);

std::string read_file(const std::string& path);

}  // namespace testsupport
