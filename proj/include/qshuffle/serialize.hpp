#pragma once

#include <string>

#include "qshuffle/combinatorics.hpp"
#include "qshuffle/ideal.hpp"
#include "qshuffle/word.hpp"

namespace qshuffle {

// JSON wire formats used by the CLI and fixtures.
//
//   combo:   object mapping word strings ("0,1,2") to coefficient strings
//   subset:  array of [a, b] integer pairs
//   tree:    nested arrays, [left, right] per node with null for an absent
//            child; the empty tree is null
//   report:  per-condition pass/fail with the sampling parameters

std::string combo_to_json(const WordCombo& c);
WordCombo combo_from_json(const std::string& text);

std::string subset_to_json(const GridSubset& s);
GridSubset subset_from_json(const std::string& text);

std::string tree_to_json(const TreePtr& t);
TreePtr tree_from_json(const std::string& text);

std::string report_to_json(const MultiplicityReport& r);

}  // namespace qshuffle
