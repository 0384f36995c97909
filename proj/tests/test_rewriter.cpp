#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qshuffle/expr_parse.hpp"
#include "qshuffle/linalg.hpp"
#include "qshuffle/serialize.hpp"
#include "qshuffle/word.hpp"
#include "test_support.hpp"

using namespace qshuffle;
using qshuffle::testing::random_distinct_point;

namespace {

const EvalContext& ctx23() {
    static EvalContext ctx = EvalContext::generic(2, 3);
    return ctx;
}

ParamRat R(const std::string& s) { return parse_param_rat(s); }

}  // namespace

TEST_CASE("quadratic relation vanishes on the window") {
    for (int m = -3; m <= 3; ++m)
        for (int n = -3; n <= 3; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            CHECK(relation_element(m, n).is_zero());
        }
}

TEST_CASE("relation instance (2,0) rearranges to the short rewrite") {
    // z^0 * z^2 = -q1q2 z^2*z^0 + (q1+q2) z^1*z^1
    SElement lhs = shuffle_product(SElement::power(0), SElement::power(2));
    SElement t1 = shuffle_product(SElement::power(2), SElement::power(0));
    t1 *= -(ParamRat::q1() * ParamRat::q2());
    SElement t2 = shuffle_product(SElement::power(1), SElement::power(1));
    t2 *= ParamRat::q1() + ParamRat::q2();
    CHECK(lhs == t1 + t2);
}

TEST_CASE("normality predicate") {
    CHECK(is_normal({0, 1, 2}));
    CHECK_FALSE(is_normal({0, 2}));
    CHECK(is_normal({}));
    CHECK(is_normal({5}));
    CHECK(is_normal({3, -1, 0, 1}));
    CHECK(first_violation({0, 1, 3}) == 1);
    CHECK(first_violation({0, 1, 2}) == -1);
}

TEST_CASE("rewrite step instances") {
    // Short rule.
    WordCombo r02 = rewrite_step({0, 2}, 0);
    WordCombo expected02;
    expected02.add({2, 0}, R("-q1*q2"));
    expected02.add({1, 1}, R("q1 + q2"));
    CHECK(r02 == expected02);

    // Long rule, collected.
    WordCombo r03 = rewrite_step({0, 3}, 0);
    WordCombo expected03;
    expected03.add({1, 2}, R("q1 + q2 - 1"));
    expected03.add({3, 0}, R("-q1*q2"));
    expected03.add({2, 1}, R("q1 + q2 - q1*q2"));
    CHECK(r03 == expected03);

    CHECK_THROWS_AS(rewrite_step({0, 1}, 0), NotApplicable);
    CHECK_THROWS_AS(rewrite_step({0, 2}, 1), NotApplicable);

    // Inner letters stay fixed.
    WordCombo r = rewrite_step({7, 0, 2, -1}, 1);
    for (const auto& [w, c] : r.terms()) {
        CHECK(w[0] == 7);
        CHECK(w[3] == -1);
    }
}

TEST_CASE("rewrite output is normal or strictly closer to normal") {
    Rng rng(67);
    for (int t = 0; t < 40; ++t) {
        int u = rng.uniform(-4, 4);
        int v = u + rng.uniform(2, 6);
        int gap = v - u;
        WordCombo out = rewrite_step({u, v}, 0);
        for (const auto& [w, c] : out.terms()) {
            bool ok = w[1] <= w[0] + 1 || (w[1] - w[0]) < gap;
            CHECK(ok);
        }
    }
}

TEST_CASE("normal form examples and soundness") {
    auto ctx = ctx23();

    WordCombo in{ShuffleWord{0, 2}};
    WordCombo nf = normal_form(in);
    WordCombo expected;
    expected.add({2, 0}, R("-q1*q2"));
    expected.add({1, 1}, R("q1 + q2"));
    CHECK(nf == expected);

    // Fixpoint on normal input.
    CHECK(normal_form(expected) == expected);

    // Length 3, symbolic equality of represented elements.
    WordCombo in3{ShuffleWord{0, 0, 2}};
    WordCombo nf3 = normal_form(in3);
    for (const auto& [w, c] : nf3.terms()) CHECK(is_normal(w));
    CHECK(combo_to_element(nf3) == combo_to_element(in3));

    // Length 4, evaluation equality at 5 random distinct points.
    WordCombo in4{ShuffleWord{1, 3, 0, 2}};
    WordCombo nf4 = normal_form(in4);
    for (const auto& [w, c] : nf4.terms()) CHECK(is_normal(w));
    Rng rng(71);
    for (int t = 0; t < 5; ++t) {
        Point p = random_distinct_point(4, rng);
        CHECK(eval_combo(in4, p, ctx) == eval_combo(nf4, p, ctx));
    }
}

TEST_CASE("normal form over a word sweep stays sound") {
    auto ctx = ctx23();
    Rng rng(73);
    for (int t = 0; t < 12; ++t) {
        ShuffleWord w = {rng.uniform(0, 4), rng.uniform(0, 4), rng.uniform(0, 4)};
        WordCombo in{w};
        WordCombo out = normal_form(in);
        for (const auto& [u, c] : out.terms()) CHECK(is_normal(u));
        CHECK(combo_to_element(out) == combo_to_element(in));
    }
}

TEST_CASE("linear fallback agrees with rewriting") {
    NormalFormOptions fallback;
    fallback.step_budget = 0;  // force the solver path
    for (ShuffleWord w : {ShuffleWord{0, 2}, {0, 3}, {0, 0, 2}, {1, 3, 0}}) {
        WordCombo in{w};
        CHECK(normal_form(in, fallback) == normal_form(in));
    }
}

TEST_CASE("word to element basics") {
    CHECK(word_to_element({}) == SElement::unit());
    CHECK(word_to_element({0, 0}).numerator() ==
          parse_laurent("(1 - q1*q2)/2 * (z1 + z2)", 2));
    // Noncommutativity witness.
    SElement d = word_to_element({0, 1}) - word_to_element({1, 0});
    CHECK_FALSE(d.is_zero());
}

TEST_CASE("basis word enumeration") {
    CHECK(enumerate_vbasis(1) == std::vector<ShuffleWord>{{0}});
    CHECK(enumerate_vbasis(2) == std::vector<ShuffleWord>{{0, 0}, {0, 1}});
    CHECK(enumerate_vbasis(3) ==
          std::vector<ShuffleWord>{{0, 0, 0}, {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {0, 1, 2}});
    // Counts are Catalan numbers; exhaustive filter agrees.
    std::vector<long> catalan = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796};
    for (int n = 1; n <= 10; ++n) {
        auto words = enumerate_vbasis(n);
        CHECK(static_cast<long>(words.size()) == catalan[n]);
        for (const auto& w : words) CHECK(is_vbasis_word(w));
        CHECK(std::is_sorted(words.begin(), words.end()));
    }
}

TEST_CASE("independence ranks") {
    CHECK(independence_rank({{0, 0}, {0, 1}}) == 2);
    CHECK(independence_rank({{0, 1}, {0, 1}}) == 1);
    // The quadratic relation binds these three.
    CHECK(independence_rank({{0, 2}, {2, 0}, {1, 1}}) == 2);
    CHECK_THROWS_AS(independence_rank({{0, 1}, {0, 1, 2}}), ArityMismatch);

    // Specialization cross-check: rank over the field bounds the rank of
    // any rational specialization from above, and a generic point attains it.
    auto ctx = ctx23();
    std::vector<ShuffleWord> words = {{0, 0}, {0, 1}, {1, 1}};
    int symbolic = independence_rank(words);
    Matrix<Rational> m;
    {
        std::set<LaurentPoly::Exp> support;
        std::vector<SElement> elems;
        for (const auto& w : words) {
            elems.push_back(word_to_element(w));
            for (const auto& [e, c] : elems.back().numerator().terms()) support.insert(e);
        }
        for (const auto& el : elems) {
            std::vector<Rational> row;
            for (const auto& e : support) {
                auto it = el.numerator().terms().find(e);
                row.push_back(it == el.numerator().terms().end() ? Rational(0)
                                                                 : param_eval(it->second, ctx));
            }
            m.push_back(row);
        }
    }
    CHECK(matrix_rank(m) == symbolic);
}

TEST_CASE("normal words of fixed degree span with full rank") {
    // Arity 2, total degrees 0..6, nonnegative letters.
    std::vector<ShuffleWord> family;
    for (int d = 0; d <= 6; ++d)
        for (int i1 = 0; i1 <= d; ++i1) {
            int i2 = d - i1;
            if (i2 <= i1 + 1) family.push_back({i1, i2});
        }
    CHECK(independence_rank(family) == static_cast<int>(family.size()));
}

TEST_CASE("ranks of basis-word families at fixed degree, arity 3") {
    std::map<int, std::vector<ShuffleWord>> by_degree;
    for (const auto& w : enumerate_vbasis(3)) {
        int d = 0;
        for (int x : w) d += x;
        by_degree[d].push_back(w);
    }
    for (const auto& [d, family] : by_degree) {
        CAPTURE(d);
        CHECK(independence_rank(family) == static_cast<int>(family.size()));
    }
}

TEST_CASE("word serialization") {
    CHECK(word_to_string({0, -2, 5}) == "0,-2,5");
    CHECK(word_from_string("0,-2,5") == ShuffleWord{0, -2, 5});
    CHECK(word_from_string("") == ShuffleWord{});
    CHECK_THROWS_AS(word_from_string("1,x"), ParseError);
}

TEST_CASE("combo serialization round trips") {
    WordCombo c;
    c.add({0, 2}, parse_param_rat("(1 - q1*q2)/(q1 + q2)"));
    c.add({1, 1}, parse_param_rat("-3/2"));
    WordCombo back = combo_from_json(combo_to_json(c));
    CHECK(back == c);
    CHECK(combo_from_json("{}").is_zero());
    CHECK_THROWS_AS(combo_from_json("[1]"), ParseError);
    CHECK_THROWS_AS(combo_from_json(R"({"0,1":"1","0":"1"})"), ParseError);
}
