#include "qshuffle/word.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "qshuffle/linalg.hpp"

namespace qshuffle {

void WordCombo::add(const ShuffleWord& w, const ParamRat& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

WordCombo& WordCombo::operator+=(const WordCombo& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

WordCombo& WordCombo::operator*=(const ParamRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, coeff] : terms_) coeff *= c;
    return *this;
}

std::string word_to_string(const ShuffleWord& w) {
    std::ostringstream os;
    for (size_t i = 0; i < w.size(); ++i) {
        if (i) os << ",";
        os << w[i];
    }
    return os.str();
}

ShuffleWord word_from_string(const std::string& s) {
    ShuffleWord w;
    if (s.empty()) return w;
    std::istringstream is(s);
    std::string item;
    while (std::getline(is, item, ',')) {
        try {
            size_t used = 0;
            int v = std::stoi(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            w.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("word_from_string: bad integer \"" + item + "\"");
        }
    }
    return w;
}

bool is_normal(const ShuffleWord& w) { return first_violation(w) < 0; }

int first_violation(const ShuffleWord& w) {
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (w[i + 1] > w[i] + 1) return static_cast<int>(i);
    return -1;
}

SElement relation_element(int m, int n, ProductNorm norm) {
    auto prod = [&](int a, int b) {
        return shuffle_product(SElement::power(a), SElement::power(b), norm);
    };
    ParamRat p = ParamRat::q1() * ParamRat::q2();
    ParamRat s = ParamRat::q1() + ParamRat::q2();
    SElement r = prod(m, n) + prod(n + 2, m - 2);
    r *= p;
    r += prod(n, m);
    r += prod(m - 2, n + 2);
    SElement mid = prod(m - 1, n + 1) + prod(n + 1, m - 1);
    mid *= s;
    r -= mid;
    return r;
}

WordCombo rewrite_step(const ShuffleWord& w, int position) {
    if (position < 0 || position + 1 >= static_cast<int>(w.size()))
        throw NotApplicable("rewrite_step: position out of range");
    const int u = w[position], v = w[position + 1];
    if (v <= u + 1) throw NotApplicable("rewrite_step: pair already normal");

    ParamRat p = ParamRat::q1() * ParamRat::q2();
    ParamRat s = ParamRat::q1() + ParamRat::q2();

    // Replacement pairs with coefficients for z^u z^v, v >= u+2.
    std::vector<std::pair<std::pair<int, int>, ParamRat>> repl;
    if (v == u + 2) {
        // z^u z^{u+2} = -q1 q2 z^{u+2} z^u + (q1+q2) z^{u+1} z^{u+1}
        repl = {{{u + 2, u}, -p}, {{u + 1, u + 1}, s}};
    } else {
        // z^u z^v = -z^{v-2} z^{u+2} - q1 q2 (z^v z^u + z^{u+2} z^{v-2})
        //           + (q1+q2)(z^{v-1} z^{u+1} + z^{u+1} z^{v-1})
        repl = {{{v - 2, u + 2}, ParamRat(-1)},
                {{v, u}, -p},
                {{u + 2, v - 2}, -p},
                {{v - 1, u + 1}, s},
                {{u + 1, v - 1}, s}};
    }

    WordCombo out;
    ShuffleWord t = w;
    for (const auto& [pair, coeff] : repl) {
        t[position] = pair.first;
        t[position + 1] = pair.second;
        out.add(t, coeff);
    }
    return out;
}

namespace {

// Guaranteed-correct normal form through linear algebra: expresses the
// element of a word combo in the basis of normal words of the same length,
// total degree, and letter range.
WordCombo normal_form_by_solving(const WordCombo& c, ProductNorm norm) {
    if (c.is_zero()) return c;
    const size_t len = c.terms().begin()->first.size();
    if (len == 0) return c;
    int lo = c.terms().begin()->first[0], hi = lo, degree = 0;
    for (int x : c.terms().begin()->first) degree += x;
    for (const auto& [w, coeff] : c.terms()) {
        int d = 0;
        for (int x : w) d += x;
        if (d != degree || w.size() != len)
            throw Divergence("normal_form: mixed length or degree in fallback");
        for (int x : w) {
            lo = std::min(lo, x);
            hi = std::max(hi, x);
        }
    }

    // Rewriting never moves a letter outside [lo, hi], so the normal words
    // with letters in that window span the element.
    std::vector<ShuffleWord> candidates;
    ShuffleWord cur(len);
    auto rec = [&](auto&& self, size_t idx, int remaining) -> void {
        if (idx == len) {
            if (remaining == 0) candidates.push_back(cur);
            return;
        }
        int lo_here = lo, hi_here = idx == 0 ? hi : std::min(hi, cur[idx - 1] + 1);
        for (int x = lo_here; x <= hi_here; ++x) {
            // Degree feasibility bounds for the rest.
            int rest = static_cast<int>(len - idx - 1);
            int min_rest = rest * lo;
            // After choosing x, later letters are capped by x+1, x+2, ...
            int max_rest = 0;
            for (int j = 1; j <= rest; ++j) max_rest += std::min(hi, x + j);
            if (remaining - x < min_rest || remaining - x > max_rest) continue;
            cur[idx] = x;
            self(self, idx + 1, remaining - x);
        }
    };
    if (len > 0)
        rec(rec, 0, degree);
    else
        candidates.push_back({});

    // Column space: numerator coefficient vectors of the candidates.
    SElement target = combo_to_element(c, norm);
    std::vector<SElement> cols;
    cols.reserve(candidates.size());
    std::set<LaurentPoly::Exp> support;
    for (const auto& w : candidates) {
        cols.push_back(word_to_element(w, norm));
        for (const auto& [e, coeff] : cols.back().numerator().terms()) support.insert(e);
    }
    for (const auto& [e, coeff] : target.numerator().terms()) support.insert(e);

    std::vector<LaurentPoly::Exp> rows(support.begin(), support.end());
    Matrix<ParamRat> m(rows.size(), std::vector<ParamRat>(cols.size(), ParamRat(0)));
    std::vector<ParamRat> rhs(rows.size(), ParamRat(0));
    for (size_t r = 0; r < rows.size(); ++r) {
        for (size_t j = 0; j < cols.size(); ++j) {
            auto it = cols[j].numerator().terms().find(rows[r]);
            if (it != cols[j].numerator().terms().end()) m[r][j] = it->second;
        }
        auto it = target.numerator().terms().find(rows[r]);
        if (it != target.numerator().terms().end()) rhs[r] = it->second;
    }
    std::vector<ParamRat> x;
    if (!solve_linear(m, rhs, x))
        throw Divergence("normal_form: fallback system inconsistent");
    WordCombo out;
    for (size_t j = 0; j < cols.size(); ++j) out.add(candidates[j], x[j]);
    return out;
}

}  // namespace

WordCombo normal_form(const WordCombo& c, const NormalFormOptions& opts) {
    WordCombo cur = c;
    long steps = 0;
    for (;;) {
        // First word in canonical order with a violation; leftmost position.
        const ShuffleWord* bad = nullptr;
        int pos = -1;
        for (const auto& [w, coeff] : cur.terms()) {
            int p = first_violation(w);
            if (p >= 0) {
                bad = &w;
                pos = p;
                break;
            }
        }
        if (!bad) return cur;
        if (++steps > opts.step_budget) {
            if (opts.linear_fallback) return normal_form_by_solving(c, opts.norm);
            throw Divergence("normal_form: step budget exhausted");
        }
        ShuffleWord w = *bad;
        ParamRat coeff = cur.terms().at(w);
        WordCombo replacement = rewrite_step(w, pos);
        replacement *= coeff;
        cur.add(w, -coeff);
        cur += replacement;
    }
}

SElement word_to_element(const ShuffleWord& w, ProductNorm norm) {
    SElement acc = SElement::unit();
    for (int k : w) acc = shuffle_product(acc, SElement::power(k), norm);
    return acc;
}

SElement combo_to_element(const WordCombo& c, ProductNorm norm) {
    if (c.is_zero()) return SElement::unit();  // zero of arity 0
    const int len = static_cast<int>(c.terms().begin()->first.size());
    SElement acc = SElement::from_numerator_unchecked(LaurentPoly(len));
    for (const auto& [w, coeff] : c.terms()) {
        SElement e = word_to_element(w, norm);
        e *= coeff;
        acc += e;
    }
    return acc;
}

Rational eval_word(const ShuffleWord& w, const Point& p, const EvalContext& ctx,
                   ProductNorm norm) {
    const int k = static_cast<int>(w.size());
    if (p.arity() != k) throw ArityMismatch("eval_word: point arity mismatch");
    if (k == 0) return Rational(1);
    p.require_distinct();

    std::vector<int> perm(k);
    for (int i = 0; i < k; ++i) perm[i] = i;
    Rational acc(0), kfact(1);
    for (int i = 2; i <= k; ++i) kfact *= Rational(i);
    do {
        int inversions = 0;
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (perm[i] > perm[j]) ++inversions;
        Rational term(1);
        for (int i = 0; i < k; ++i) term *= p[perm[i]].pow(w[i]);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                Rational x = p[perm[i]], y = p[perm[j]];
                Rational d = x - y;
                term *= (x - ctx.q1() * y) * (x - ctx.q2() * y) / (d * d);
            }
        acc += inversions % 2 ? -term : term;
    } while (std::next_permutation(perm.begin(), perm.end()));

    return norm == ProductNorm::alt_average ? acc / kfact : acc;
}

Rational eval_combo(const WordCombo& c, const Point& p, const EvalContext& ctx,
                    ProductNorm norm) {
    Rational acc(0);
    for (const auto& [w, coeff] : c.terms())
        acc += param_eval(coeff, ctx) * eval_word(w, p, ctx, norm);
    return acc;
}

std::vector<ShuffleWord> enumerate_vbasis(int n) {
    std::vector<ShuffleWord> out;
    if (n <= 0) return out;
    ShuffleWord cur(n);
    cur[0] = 0;
    auto rec = [&](auto&& self, int idx) -> void {
        if (idx == n) {
            out.push_back(cur);
            return;
        }
        for (int x = 0; x <= cur[idx - 1] + 1; ++x) {
            cur[idx] = x;
            self(self, idx + 1);
        }
    };
    rec(rec, 1);
    return out;
}

bool is_vbasis_word(const ShuffleWord& w) {
    if (w.empty() || w[0] != 0) return false;
    for (int x : w)
        if (x < 0) return false;
    return is_normal(w);
}

int independence_rank(const std::vector<ShuffleWord>& words, ProductNorm norm) {
    if (words.empty()) return 0;
    const size_t len = words[0].size();
    for (const auto& w : words)
        if (w.size() != len) throw ArityMismatch("independence_rank: words of unequal length");

    std::vector<SElement> elems;
    std::set<LaurentPoly::Exp> support;
    for (const auto& w : words) {
        elems.push_back(word_to_element(w, norm));
        for (const auto& [e, c] : elems.back().numerator().terms()) support.insert(e);
    }
    std::vector<LaurentPoly::Exp> cols(support.begin(), support.end());
    Matrix<ParamRat> m(elems.size(), std::vector<ParamRat>(cols.size(), ParamRat(0)));
    for (size_t r = 0; r < elems.size(); ++r)
        for (size_t j = 0; j < cols.size(); ++j) {
            auto it = elems[r].numerator().terms().find(cols[j]);
            if (it != elems[r].numerator().terms().end()) m[r][j] = it->second;
        }
    return matrix_rank(std::move(m));
}

}  // namespace qshuffle
