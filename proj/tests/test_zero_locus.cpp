#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/combinatorics.hpp"
#include "qshuffle/expr_parse.hpp"
#include "qshuffle/ideal.hpp"
#include "qshuffle/linalg.hpp"
#include "test_support.hpp"

using namespace qshuffle;
using qshuffle::testing::random_distinct_point;

namespace {

const EvalContext& ctx23() {
    static EvalContext ctx = EvalContext::generic(2, 3);
    return ctx;
}

ParamRat R(const std::string& s) { return parse_param_rat(s); }

// The drawn 10-vertex example subset: two vertices with both parents
// present, multiplicity 2^2.
GridSubset example_subset() {
    return GridSubset(
        {{0, 0}, {1, 0}, {0, 1}, {1, 1}, {1, 2}, {2, 2}, {1, 3}, {2, 3}, {3, 3}, {2, 4}});
}

// All root-containing subsets of the triangle a+b <= depth with given size.
std::vector<GridSubset> all_root_subsets(int size, int depth) {
    std::vector<GridVertex> cells;
    for (int a = 0; a <= depth; ++a)
        for (int b = 0; a + b <= depth; ++b)
            if (a + b > 0) cells.push_back({a, b});
    std::vector<GridSubset> out;
    std::vector<int> pick;
    auto rec = [&](auto&& self, size_t from, int remaining) -> void {
        if (remaining == 0) {
            GridSubset s;
            s.insert({0, 0});
            for (int i : pick) s.insert(cells[i]);
            out.push_back(s);
            return;
        }
        for (size_t i = from; i + remaining <= cells.size() + 1 && i < cells.size(); ++i) {
            pick.push_back(static_cast<int>(i));
            self(self, i + 1, remaining - 1);
            pick.pop_back();
        }
    };
    rec(rec, 0, size - 1);
    return out;
}

}  // namespace

TEST_CASE("subset coordinates in canonical order") {
    auto ctx = ctx23();
    GridSubset s({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    Point p = subset_to_point(s, ctx);
    CHECK(p.coords() == std::vector<Rational>{1, 2, 3, 6});

    Point p10 = subset_to_point(example_subset(), ctx);
    CHECK(p10.coords() == std::vector<Rational>{1, 2, 3, 6, 18, 36, 54, 108, 216, 324});

    GridSubset root({{0, 0}});
    CHECK(subset_to_point(root, ctx).coords() == std::vector<Rational>{1});

    // q1 = 4, q2 = 2 passes the positive-pair guard but collides (2,0) with
    // (0, ... ) one level down: 4 = q1 = q2^2.
    auto ctx42 = EvalContext::generic(4, 2);
    GridSubset clash({{0, 0}, {1, 0}, {0, 1}, {0, 2}});
    CHECK_THROWS_AS(subset_to_point(clash, ctx42), CoordinateCollision);
}

TEST_CASE("master summands at the simplest point") {
    auto ctx = ctx23();
    Point p({1, 2, 3, 6});
    for (int c = 0; c < 4; ++c) CHECK(master_summand(c, p, ctx).is_zero());
    // Off-lattice second coordinate: the z2 summand survives.
    // (5 - 1) mu(5, 1) = 4 * (5-2)(5-3)/16 = 3/2.
    Point q({1, 5});
    CHECK(master_summand(0, q, ctx).is_zero());      // z1 - lambda
    CHECK(master_summand(1, q, ctx) == Rational(3, 2));
    CHECK_THROWS_AS(master_summand(0, Point({1, 1}), ctx), DistinctnessViolation);
}

TEST_CASE("common zeros are exactly the parented subsets") {
    auto ctx = ctx23();
    for (int size = 1; size <= 5; ++size) {
        long admissible_seen = 0;
        for (const auto& s : all_root_subsets(size, 4)) {
            bool parented = s.is_admissible();
            CHECK(is_common_zero(s, ctx) == parented);
            CHECK((count_trees(s) > 0) == parented);
            if (parented) ++admissible_seen;
        }
        // The grammar-based stream finds the same family.
        CHECK(admissible_seen == static_cast<long>(admissible_subsets(size).size()));
    }
}

TEST_CASE("example subsets and their relation vectors") {
    GridSubset simple({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto rel = first_order_relations(simple);
    REQUIRE(rel.size() == 1);
    CHECK(rel[0] == RelationVector{{3, ParamRat(1)}});

    auto ex = example_subset();
    auto firsts = first_order_relations(ex);
    REQUIRE(firsts.size() == 2);
    RelationVector v4{{3, R("1")}, {4, R("q2")}, {5, R("q1*q2")}, {6, R("q2^2")}};
    RelationVector v8{{7, R("1")}, {8, R("q1")}, {9, R("q2")}};
    CHECK(firsts[0] == v4);
    CHECK(firsts[1] == v8);

    GridSubset orphan({{0, 0}, {1, 1}});
    CHECK_THROWS_AS(first_order_relations(orphan), NotAdmissible);
}

TEST_CASE("first-order relations match the gradient null space") {
    auto ctx = ctx23();
    // Nested X pair: (1,1) and (2,1) both have two present parents, and the
    // second X vertex hangs below the first.
    GridSubset nested({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}});
    const int n = nested.size();
    Point p = subset_to_point(nested, ctx);

    Rng rng(91);
    Matrix<Rational> rows;
    for (int s = 0; s < 12; ++s) {
        SElement f = SElement::from_numerator_unchecked(random_sparse_symmetric(n - 1, rng));
        std::vector<Rational> grad;
        for (int i = 0; i < n; ++i) grad.push_back(eval_generator(f, p, ctx, {i}));
        rows.push_back(grad);
    }
    auto null_basis = null_space(rows);
    auto firsts = first_order_relations(nested);
    REQUIRE(firsts.size() == 2);
    // The measured null space has exactly the predicted dimension, and every
    // computed relation annihilates every measured gradient.
    CHECK(null_basis.size() == firsts.size());
    for (const auto& v : firsts) {
        for (const auto& row : rows) {
            Rational dot(0);
            for (const auto& [i, c] : v) dot += param_eval(c, ctx) * row[i];
            CHECK(dot == Rational(0));
        }
    }
}

TEST_CASE("second-order relations annihilate the Hessian") {
    auto ctx = ctx23();
    auto ex = example_subset();
    Point p = subset_to_point(ex, ctx);
    auto firsts = first_order_relations(ex);
    auto seconds = second_order_relations(ex);
    REQUIRE(seconds.size() == 1);

    // Leading cross-block coefficients are the products of the two
    // first-order vectors (the printed 12-term pattern).
    const auto& rel = seconds[0].entries;
    for (const auto& [i, vi] : firsts[0])
        for (const auto& [j, wj] : firsts[1]) {
            auto it = rel.find({i, j});
            REQUIRE(it != rel.end());
            CHECK(it->second == vi * wj);
        }

    Rng rng(97);
    for (int t = 0; t < 2; ++t) {
        SElement f = SElement::from_numerator_unchecked(random_sparse_symmetric(9, rng));
        Rational acc(0);
        for (const auto& [ij, c] : rel)
            acc += param_eval(c, ctx) * eval_generator(f, p, ctx, {ij.first, ij.second});
        CHECK(acc.is_zero());

        // The bare outer product misses the correction block and fails.
        Rational bare(0);
        for (const auto& [i, vi] : firsts[0])
            for (const auto& [j, wj] : firsts[1])
                bare += param_eval(vi * wj, ctx) * eval_generator(f, p, ctx, {i, j});
        CHECK_FALSE(bare.is_zero());
    }

    // k <= 1 subsets carry no second-order relations.
    CHECK(second_order_relations(GridSubset({{0, 0}, {1, 0}, {0, 1}, {1, 1}})).empty());
}

TEST_CASE("multiplicity verification counts 2^k conditions") {
    auto ctx = ctx23();

    GridSubset pair({{0, 0}, {1, 0}});
    auto r0 = verify_multiplicity(pair, ctx, 20, 5);
    CHECK(r0.conditions_verified == 1);
    CHECK(r0.expected == 1);
    CHECK(r0.matches_expected);

    GridSubset simple({{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    auto r1 = verify_multiplicity(simple, ctx, 20, 6);
    CHECK(r1.conditions_verified == 2);
    CHECK(r1.expected == 2);
    CHECK(r1.matches_expected);

    GridSubset nested({{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}, {2, 1}});
    auto r2 = verify_multiplicity(nested, ctx, 6, 7);
    CHECK(r2.conditions_verified == 4);
    CHECK(r2.expected == 4);
    CHECK(r2.matches_expected);

    CHECK_THROWS_AS(verify_multiplicity(GridSubset({{0, 0}, {1, 1}}), ctx, 1, 1),
                    NotAdmissible);
}

TEST_CASE("random generators vanish on every admissible point") {
    auto ctx = ctx23();
    Rng rng(101);
    for (int n = 2; n <= 5; ++n) {
        SElement f = SElement::from_numerator_unchecked(random_sparse_symmetric(n - 1, rng));
        for (const auto& [s, mult] : admissible_subsets(n))
            CHECK(eval_generator(f, subset_to_point(s, ctx), ctx).is_zero());
    }
}

TEST_CASE("non-grid points are not common zeros") {
    auto ctx = ctx23();
    Rng rng(103);
    for (int t = 0; t < 50; ++t) {
        int n = rng.uniform(2, 5);
        Point p = random_distinct_point(n, rng, 2, 997);
        bool some_nonzero = false;
        for (int c = 0; c < n && !some_nonzero; ++c)
            some_nonzero = !master_summand(c, p, ctx).is_zero();
        CHECK(some_nonzero);
    }
}

TEST_CASE("torsion products vanish on the cycle point") {
    auto tctx = EvalContext::torsion(2, Rational(1, 4), 2, 1);
    CHECK(torsion_vanishing_smoke(tctx, {Rational(1), Rational(3), Rational(7, 2)}, 8, 9));
    // Generic parameters: at (1, 2, 6) exactly one alternation summand
    // survives, so the product vanishes iff f1(1) f2(2) f3(6) does.
    auto ctx = ctx23();
    Rng rng(107);
    int nonzero = 0;
    for (int t = 0; t < 8; ++t) {
        LaurentPoly f1 = random_univariate(rng), f2 = random_univariate(rng),
                    f3 = random_univariate(rng);
        SElement prod = shuffle_product(
            shuffle_product(SElement::univariate(f1), SElement::univariate(f2)),
            SElement::univariate(f3));
        Rational value = eval_element(prod, Point({1, 2, 6}), ctx);
        Rational witness = f1.eval(Point({1}), ctx) * f2.eval(Point({2}), ctx) *
                           f3.eval(Point({6}), ctx);
        CHECK(value.is_zero() == witness.is_zero());
        if (!value.is_zero()) ++nonzero;
    }
    CHECK(nonzero >= 5);
}
