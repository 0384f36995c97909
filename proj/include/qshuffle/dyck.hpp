#pragma once

#include <string>
#include <vector>

#include "qshuffle/word.hpp"

namespace qshuffle {

// Balanced up/down sequence with nonnegative prefix heights; textual form
// uses 'U' and 'D'.
class DyckPath {
public:
    DyckPath() = default;
    // Validates balance and nonnegativity; throws MalformedPath.
    explicit DyckPath(std::string steps);

    const std::string& steps() const { return steps_; }
    int semilength() const { return static_cast<int>(steps_.size()) / 2; }

    friend bool operator==(const DyckPath&, const DyckPath&) = default;
    friend bool operator<(const DyckPath& a, const DyckPath& b) { return a.steps_ < b.steps_; }

private:
    std::string steps_;
};

// All Dyck paths of semilength n, lexicographic by step string.
std::vector<DyckPath> enumerate_dyck_paths(int n);

// Three-step encoding of a basis word (i1 = 0, i_j >= 0, i_{m+1} <= i_m + 1):
// split into maximal strictly increasing runs; each run of length d climbs d
// steps and then descends to the first index of the next run; the tail
// descends to height zero.
DyckPath dyck_from_word(const ShuffleWord& w);

// Inverse: each maximal ascent of length d starting at height h contributes
// the run (h, h+1, ..., h+d-1).
ShuffleWord word_from_dyck(const DyckPath& p);

}  // namespace qshuffle
