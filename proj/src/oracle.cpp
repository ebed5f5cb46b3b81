#include "raagmcg/oracle.hpp"

#include <deque>
#include <unordered_set>

namespace raagmcg {

namespace {

std::string key_of(const Word& w) {
  std::string key;
  for (const auto& s : w.syllables()) {
    key += std::to_string(s.generator);
    key += ':';
    key += s.exponent.str();
    key += ';';
  }
  return key;
}

bool applicable(const Word& w, MoveSpec m) {
  const auto& s = w.syllables();
  switch (m.type) {
    case MoveType::RemoveZero:
      return s[m.position].exponent == 0;
    case MoveType::Merge:
      return m.position + 1 < s.size() && s[m.position].generator == s[m.position + 1].generator;
    case MoveType::Swap:
      return m.position + 1 < s.size() &&
             w.graph().commute(s[m.position].generator, s[m.position + 1].generator);
  }
  return false;
}

}  // namespace

std::size_t oracle_min_syllables(const Word& w, std::size_t budget) {
  std::unordered_set<std::string> seen{key_of(w)};
  std::deque<Word> queue{w};
  std::size_t best = w.syllable_count();
  while (!queue.empty()) {
    Word current = std::move(queue.front());
    queue.pop_front();
    best = std::min(best, current.syllable_count());
    for (std::size_t i = 0; i < current.syllable_count(); ++i) {
      for (auto type : {MoveType::RemoveZero, MoveType::Merge, MoveType::Swap}) {
        const MoveSpec move{type, i};
        if (!applicable(current, move)) {
          continue;
        }
        Word next = apply_move(current, move);
        if (seen.insert(key_of(next)).second) {
          if (seen.size() > budget) {
            throw Error(ErrorCode::SearchBudgetExceeded,
                        "move-graph search exceeded budget " + std::to_string(budget));
          }
          queue.push_back(std::move(next));
        }
      }
    }
  }
  return best;
}

}  // namespace raagmcg
