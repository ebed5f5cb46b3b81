#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "raagmcg/word.hpp"

namespace raagmcg {

/// Identity of a syllable of sigma that is stable across Min(sigma): the
/// (generator, exponent) pair plus its rank among equal syllables, counted
/// from 1 left to right. Equal syllables never pass each other under
/// commutation moves, so the rank is the same in every minimal word.
struct SyllableId {
  VertexId generator = 0;
  Exponent exponent = 1;
  std::size_t occurrence = 1;

  friend bool operator==(const SyllableId& a, const SyllableId& b) {
    return a.generator == b.generator && a.exponent == b.exponent &&
           a.occurrence == b.occurrence;
  }
  friend bool operator<(const SyllableId& a, const SyllableId& b) {
    if (a.generator != b.generator) {
      return a.generator < b.generator;
    }
    if (a.exponent != b.exponent) {
      return a.exponent < b.exponent;
    }
    return a.occurrence < b.occurrence;
  }
};

/// "a^2#1"
std::string format(const DefiningGraph& graph, const SyllableId& id);

/// Labels the syllables of a literal minimal word, in its own order.
std::vector<SyllableId> label_syllables(const Word& minimal_word);

/// syl(sigma), listed in the order of the canonical word.
std::vector<SyllableId> syl(const Word& sigma);

/// Strict partial order on syl(sigma): s precedes t iff s comes before t in
/// every word of Min(sigma).
class SyllableOrder {
 public:
  SyllableOrder(std::vector<SyllableId> elements, std::vector<bool> relation);

  const std::vector<SyllableId>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool precedes(std::size_t i, std::size_t j) const { return relation_[i * size() + j]; }
  /// Throws std::out_of_range if either id is absent.
  bool precedes(const SyllableId& s, const SyllableId& t) const;
  std::optional<std::size_t> index_of(const SyllableId& id) const;

  /// All related pairs (i, j) with i before j, as element indices.
  std::vector<std::pair<std::size_t, std::size_t>> pairs() const;
  /// Covering pairs: the Hasse diagram (transitive reduction).
  std::vector<std::pair<std::size_t, std::size_t>> covering_pairs() const;

 private:
  std::vector<SyllableId> elements_;
  std::vector<bool> relation_;
};

/// Computes the order without enumerating Min(sigma): in the canonical word,
/// s precedes t iff a chain of pairwise non-commuting syllables leads from s
/// to t. Linear extensions of that dependency order are exactly the words of
/// Min(sigma), so the two descriptions agree.
SyllableOrder syllable_order(const Word& sigma);

std::string to_dot(const SyllableOrder& order, const DefiningGraph& graph);
/// {"elements":[...], "covers":[[from,to],...]}
nlohmann::ordered_json to_json(const SyllableOrder& order, const DefiningGraph& graph);

/// sigma_{m,n}: syl(sigma^m) -> syl(sigma^n), shifting every syllable forward
/// by n - m blocks.
class ShiftMap {
 public:
  ShiftMap(std::size_t from_power, std::size_t to_power, std::map<SyllableId, SyllableId> table);

  std::size_t from_power() const { return from_; }
  std::size_t to_power() const { return to_; }
  const std::map<SyllableId, SyllableId>& table() const { return table_; }
  /// Throws std::out_of_range when `s` is not in syl(sigma^m).
  const SyllableId& operator()(const SyllableId& s) const { return table_.at(s); }

 private:
  std::size_t from_;
  std::size_t to_;
  std::map<SyllableId, SyllableId> table_;
};

/// Requires 1 <= m < n (InvalidShiftRange), at least two generators in the
/// support (SingleGenerator), sigma cyclically reduced (NotCyclicallyReduced)
/// and sigma^n of n times sigma's syllable count (PowerNotMinimal). The block-j
/// copy of (g, e, q) is (g, e, q + (j - 1) * #{(g, e) in sigma}).
ShiftMap shift_map(const Word& sigma, std::size_t m, std::size_t n);

struct CyclicReduction {
  Word reduced;
  /// sigma = conjugator * reduced * conjugator^-1
  Word conjugator;
};

/// Repeatedly conjugates by a syllable that can be moved to the front (or the
/// inverse of one that can be moved to the back) of a minimal word whenever
/// that lowers the syllable count, until no such move helps. The candidate
/// syllables are the minimal (maximal) elements of syllable_order, i.e. the
/// first (last) syllables over all of Min(sigma).
CyclicReduction cyclically_reduce(const Word& sigma);

bool is_cyclically_reduced(const Word& sigma);

/// Membership of u in the product set <left> <right>. Peels off the largest
/// left factor of u lying in <left> (the syllables with generators in `left`
/// all of whose predecessors under the syllable order are peeled too) and
/// tests the remaining syllables against `right`.
bool in_special_product(const Word& u, const VertexSet& left, const VertexSet& right);

}  // namespace raagmcg
