#pragma once

#include <map>
#include <string>
#include <vector>

#include "qshuffle/element.hpp"

namespace qshuffle {

// A monomial z^{i1} * ... * z^{ik} in the degree-1 generators, stored as its
// exponent list. Exponents may be negative.
using ShuffleWord = std::vector<int>;

// Finite linear combination of same-length words.
class WordCombo {
public:
    using TermMap = std::map<ShuffleWord, ParamRat>;

    WordCombo() = default;
    explicit WordCombo(const ShuffleWord& w) { terms_[w] = ParamRat(1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    void add(const ShuffleWord& w, const ParamRat& c);
    WordCombo& operator+=(const WordCombo& o);
    WordCombo& operator*=(const ParamRat& c);

    friend bool operator==(const WordCombo& a, const WordCombo& b) {
        return a.terms_ == b.terms_;
    }

private:
    TermMap terms_;
};

// Word serialization: comma-separated integers, empty string for the unit.
std::string word_to_string(const ShuffleWord& w);
ShuffleWord word_from_string(const std::string& s);

// Normal-form condition: i_{m+1} <= i_m + 1 at every adjacent pair.
bool is_normal(const ShuffleWord& w);
// First position (0-based, left element of the pair) violating the condition,
// or -1 when normal.
int first_violation(const ShuffleWord& w);

// The quadratic relation instance
//   q1 q2 (z^m z^n + z^{n+2} z^{m-2}) + z^n z^m + z^{m-2} z^{n+2}
//   - (q1 + q2)(z^{m-1} z^{n+1} + z^{n+1} z^{m-1})
// computed through shuffle_product. Always the zero element of degree 2.
SElement relation_element(int m, int n, ProductNorm norm = ProductNorm::alt_average);

// Rewrites the violating adjacent pair at `position` using the quadratic
// relation, leaving other letters fixed. Throws NotApplicable if the pair is
// already normal there. Every output word is normal at that position or has
// a strictly smaller adjacent gap.
WordCombo rewrite_step(const ShuffleWord& w, int position);

struct NormalFormOptions {
    long step_budget = 1'000'000;
    // When the budget trips, fall back to solving the fixed-(length, degree)
    // linear system over the normal words instead of failing.
    bool linear_fallback = true;
    ProductNorm norm = ProductNorm::alt_average;
};

// Iterated rewriting to normal form; deterministic (first word in canonical
// order, leftmost violating position). Throws Divergence if the budget is
// exhausted and the fallback is disabled.
WordCombo normal_form(const WordCombo& c, const NormalFormOptions& opts = {});

// Left-to-right iterated *-product of the letters.
SElement word_to_element(const ShuffleWord& w, ProductNorm norm = ProductNorm::alt_average);
SElement combo_to_element(const WordCombo& c, ProductNorm norm = ProductNorm::alt_average);

// Value of the word's element at a point through the full alternation sum
// over S_k, without symbolic expansion. Independent of the shuffle-coset
// product path, which makes it the natural cross-check for it.
Rational eval_word(const ShuffleWord& w, const Point& p, const EvalContext& ctx,
                   ProductNorm norm = ProductNorm::alt_average);
Rational eval_combo(const WordCombo& c, const Point& p, const EvalContext& ctx,
                    ProductNorm norm = ProductNorm::alt_average);

// All words with i1 = 0, i_j >= 0, i_{m+1} <= i_m + 1, in lexicographic
// order. Their count is the n-th Catalan number.
std::vector<ShuffleWord> enumerate_vbasis(int n);
bool is_vbasis_word(const ShuffleWord& w);

// Rank over Q(q1, q2) of the numerator coefficient matrix of the words'
// elements. Full rank certifies linear independence.
int independence_rank(const std::vector<ShuffleWord>& words,
                      ProductNorm norm = ProductNorm::alt_average);

}  // namespace qshuffle
