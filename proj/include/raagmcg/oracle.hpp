#pragma once

#include <cstddef>

#include "raagmcg/word.hpp"

namespace raagmcg {

/// Ground truth for syllable minimality: breadth-first search over every word
/// reachable from `w` by moves (1)-(3), returning the fewest syllables seen.
/// Shares nothing with normalize() beyond apply_move's side conditions.
/// Throws SearchBudgetExceeded once more than `budget` distinct words have
/// been visited.
std::size_t oracle_min_syllables(const Word& w, std::size_t budget = kDefaultCap);

}  // namespace raagmcg
