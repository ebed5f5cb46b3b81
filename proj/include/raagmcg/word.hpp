#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "raagmcg/defining_graph.hpp"

namespace raagmcg {

using Exponent = boost::multiprecision::cpp_int;

inline constexpr std::size_t kDefaultCap = 100000;

/// x^e with x a generator. A zero exponent is representable so that move (1)
/// has something to act on; normalized words never contain one.
struct Syllable {
  VertexId generator = 0;
  Exponent exponent = 1;

  friend bool operator==(const Syllable& a, const Syllable& b) {
    return a.generator == b.generator && a.exponent == b.exponent;
  }
  friend bool operator<(const Syllable& a, const Syllable& b) {
    if (a.generator != b.generator) {
      return a.generator < b.generator;
    }
    return a.exponent < b.exponent;
  }
};

/// A word x_1^{e_1} ... x_k^{e_k} over the generators of a defining graph.
/// Holds the syllable sequence literally; nothing is normalized implicitly.
class Word {
 public:
  explicit Word(GraphPtr graph);
  /// Throws UnknownVertex if a generator is outside the graph.
  Word(GraphPtr graph, std::vector<Syllable> syllables);

  const GraphPtr& graph_ptr() const { return graph_; }
  const DefiningGraph& graph() const { return *graph_; }

  std::span<const Syllable> syllables() const { return syllables_; }
  const Syllable& operator[](std::size_t i) const { return syllables_[i]; }
  std::size_t syllable_count() const { return syllables_.size(); }
  bool empty() const { return syllables_.empty(); }

  /// Sum of |e_i|: the word length in the standard generators.
  Exponent letter_length() const;
  /// Generators that occur with nonzero exponent.
  VertexSet support() const;

  /// Literal syllable-by-syllable equality (not group equality; see equal()).
  friend bool operator==(const Word& a, const Word& b);

 private:
  GraphPtr graph_;
  std::vector<Syllable> syllables_;
};

/// Parses whitespace-separated tokens `name` or `name^k` (k may be negative).
/// Zero-exponent syllables are dropped (move 1). Throws ParseError or
/// UnknownVertex.
Word parse_word(const GraphPtr& graph, std::string_view text);

/// Inverse of parse_word: "a^2 c^-1 b"; exponent 1 is left implicit.
std::string format(const Word& w);
std::string format(const DefiningGraph& graph, const Syllable& s);

enum class MoveType { RemoveZero = 1, Merge = 2, Swap = 3 };

/// A single rewriting move. `position` is the zero-based index of the
/// syllable acted on (the left one of the pair for Merge and Swap).
struct MoveSpec {
  MoveType type;
  std::size_t position;
};

/// Applies one move. Throws MoveNotApplicable if the side condition fails:
/// e_i = 0 for RemoveZero, x_i = x_{i+1} for Merge, [x_i, x_{i+1}] = 1 for Swap.
Word apply_move(const Word& w, MoveSpec move);

/// Canonical minimal-syllable representative of the element w represents.
///
/// Reduction is a single left-to-right pass: each incoming syllable x^e is
/// slid leftwards past syllables whose generators commute with x; if it meets
/// an x-syllable the two merge (move 2) and a zero result is deleted (move 1).
/// Deleting a syllable never exposes a new merge (any generator separated from
/// its partner only by the deleted x-syllable commutes with x), so the output
/// is minimal. The pass performs at most one merge per input syllable, which
/// bounds the work and gives termination.
///
/// The minimal word is then laid out in left-greedy layers: each syllable
/// is moved as far left as commutation allows (its layer is one more than the
/// deepest earlier syllable it does not commute with) and syllables in the
/// same layer are ordered by vertex order. Every element of Min(sigma) is a
/// linear extension of the same dependency order, so this layout is unique.
Word normalize(const Word& w);

/// True iff w already has the minimal number of syllables.
bool is_minimal(const Word& w);

/// Every word in Min(sigma): the closure of normalize(sigma) under swaps of
/// adjacent commuting syllables. Sorted lexicographically by syllable.
/// Throws CapExceeded once more than `cap` words are found.
std::vector<Word> min_set(const Word& sigma, std::size_t cap = kDefaultCap);

/// Literal concatenation with no normalization.
Word concatenate(const Word& u, const Word& v);
/// Literal n-fold concatenation, n >= 0.
Word repeat(const Word& w, std::size_t n);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
/// Normalized n-th power; negative n inverts, zero gives the identity.
Word power(const Word& u, const Exponent& n);

/// Group equality: canonical forms coincide. Throws GraphMismatch when the
/// words live over different graphs.
bool equal(const Word& u, const Word& v);

/// Membership of u in the special subgroup generated by T.
bool in_special_subgroup(const Word& u, const VertexSet& generators);

}  // namespace raagmcg
