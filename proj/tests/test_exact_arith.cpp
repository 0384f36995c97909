#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qshuffle/eval_context.hpp"
#include "qshuffle/expr_parse.hpp"
#include "qshuffle/param_rat.hpp"
#include "qshuffle/random.hpp"

using namespace qshuffle;

namespace {

ParamPoly P(const std::string& s) { return parse_param_rat(s).num(); }
ParamRat R(const std::string& s) { return parse_param_rat(s); }

ParamRat random_param_rat(Rng& rng) {
    ParamPoly num, den;
    while (num.is_zero())
        for (int t = 0; t < 3; ++t)
            num.add_term({rng.uniform(0, 2), rng.uniform(0, 2)},
                         Rational(rng.uniform(-4, 4)));
    while (den.is_zero())
        for (int t = 0; t < 2; ++t)
            den.add_term({rng.uniform(0, 2), rng.uniform(0, 2)},
                         Rational(rng.uniform(-4, 4)));
    return ParamRat(num, den);
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4).den() == Integer(2));
    CHECK(Rational(6, -4).num() == Integer(-3));
    CHECK(Rational(2, 3) + Rational(1, 6) == Rational(5, 6));
    CHECK(Rational(1, 3).pow(-2) == Rational(9));
    CHECK(Rational::parse("-22/7") == Rational(-22, 7));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS_AS(Rational::parse("5/0"), DenominatorVanishes);
    CHECK_THROWS_AS(Rational::parse("a"), ParseError);
    CHECK(Rational(22, 7).str() == "22/7");
}

TEST_CASE("param_gcd on constructed common factors") {
    ParamPoly a = P("(q1 - 1)*(q1*q2 - 1)");
    ParamPoly b = P("q1 - 1");
    CHECK(param_gcd(a, b) == P("q1 - 1"));
}

TEST_CASE("param_gcd identity and equal inputs") {
    ParamPoly p = P("3*q1^2*q2 - 6");
    ParamPoly norm = P("q1^2*q2 - 2");
    CHECK(param_gcd(p, ParamPoly()) == norm);
    CHECK(param_gcd(ParamPoly(), p) == norm);
    CHECK(param_gcd(ParamPoly(), ParamPoly()) == ParamPoly());
    // Equal inputs up to sign normalize to the monic leading coefficient.
    CHECK(param_gcd(P("1 - q1*q2"), P("1 - q2*q1")) == P("q1*q2 - 1"));
}

TEST_CASE("param_gcd randomized divisibility") {
    Rng rng(2024);
    for (int t = 0; t < 30; ++t) {
        ParamPoly a, b, c;
        for (int i = 0; i < 2; ++i) {
            a.add_term({rng.uniform(0, 2), rng.uniform(0, 2)}, Rational(rng.uniform(-3, 3)));
            b.add_term({rng.uniform(0, 2), rng.uniform(0, 2)}, Rational(rng.uniform(-3, 3)));
            c.add_term({rng.uniform(0, 1), rng.uniform(0, 1)}, Rational(rng.uniform(-3, 3)));
        }
        if (a.is_zero() || b.is_zero() || c.is_zero()) continue;
        ParamPoly g = param_gcd(a * c, b * c);
        // c divides the gcd; the gcd divides both products.
        CHECK_NOTHROW(divide_exact(g, c.monic()));
        CHECK_NOTHROW(divide_exact(a * c, g));
        CHECK_NOTHROW(divide_exact(b * c, g));
    }
}

TEST_CASE("param_eval examples") {
    auto ctx = EvalContext::generic(2, 3);
    CHECK(param_eval(R("1 - q1*q2"), ctx) == Rational(-5));
    CHECK(param_eval(R("(q1 + q2)/(q1*q2)"), ctx) == Rational(5, 6));
    auto half = EvalContext::torsion(2, Rational(1, 2), 1, 1);
    CHECK_THROWS_AS(param_eval(R("1/(q1*q2 - 1)"), half), DenominatorVanishes);
}

TEST_CASE("param_eval is a ring homomorphism") {
    auto ctx = EvalContext::generic(Rational(5, 3), Rational(-7, 2));
    Rng rng(7);
    for (int t = 0; t < 20; ++t) {
        ParamRat x = random_param_rat(rng), y = random_param_rat(rng);
        if (x.den().eval(ctx.q1(), ctx.q2()).is_zero() ||
            y.den().eval(ctx.q1(), ctx.q2()).is_zero())
            continue;
        CHECK(param_eval(x + y, ctx) == param_eval(x, ctx) + param_eval(y, ctx));
        CHECK(param_eval(x * y, ctx) == param_eval(x, ctx) * param_eval(y, ctx));
    }
}

TEST_CASE("field axioms hold exactly on random fractions") {
    Rng rng(11);
    for (int t = 0; t < 15; ++t) {
        ParamRat x = random_param_rat(rng), y = random_param_rat(rng), z = random_param_rat(rng);
        CHECK((x + y) + z == x + (y + z));
        CHECK((x * y) * z == x * (y * z));
        CHECK(x * (y + z) == x * y + x * z);
        CHECK(x + (-x) == ParamRat(0));
        if (!x.is_zero()) CHECK(x * x.inverse() == ParamRat(1));
    }
}

TEST_CASE("normalization invariants and idempotence") {
    ParamRat x(P("2*q1^2*q2 - 2*q1"), P("4*q1"));
    // gcd removed, denominator monic.
    CHECK(x.den().leading_coeff() == Rational(1));
    CHECK(param_gcd(x.num(), x.den()).is_one());
    ParamRat renorm(x.num(), x.den());
    CHECK(renorm == x);
    // Different representatives of the same fraction normalize identically.
    ParamRat y(P("(2*q1^2*q2 - 2*q1)*(q2 + 1)"), P("4*q1*(q2 + 1)"));
    CHECK(y == x);
}

TEST_CASE("ctx_validate generic and torsion") {
    CHECK_NOTHROW(EvalContext::generic(2, 3));
    // q1=2, q2=1/4 violates genericity exactly at (a,b)=(2,1).
    try {
        EvalContext::generic(2, Rational(1, 4));
        FAIL("expected GenericityViolation");
    } catch (const GenericityViolation& e) {
        CHECK(e.a == 2);
        CHECK(e.b == 1);
    }
    CHECK_NOTHROW(EvalContext::torsion(2, Rational(1, 4), 2, 1));
    // Declared pair must satisfy the identity...
    CHECK_THROWS_AS(EvalContext::torsion(2, 3, 2, 1), GenericityViolation);
    // ...and be minimal: (4,2) is preceded by (2,1).
    CHECK_THROWS_AS(EvalContext::torsion(2, Rational(1, 4), 4, 2), GenericityViolation);
    CHECK_THROWS_AS(EvalContext::generic(0, 3), ZeroCoordinate);
    CHECK_THROWS_AS(EvalContext::generic(2, 3, Rational(0)), ZeroCoordinate);
}

TEST_CASE("guard bound oracle: exhaustive scan agrees") {
    auto ctx = EvalContext::generic(2, 3);
    for (int a = 1; a <= ctx.guard_bound(); ++a)
        for (int b = 1; b <= ctx.guard_bound(); ++b)
            CHECK_FALSE((ctx.q1().pow(a) * ctx.q2().pow(b)).is_one());
}

TEST_CASE("fraction parser round trips") {
    for (const char* s : {"(1 - q1*q2)/(q1 + q2)", "q1^2*q2 - 1/2", "-q1", "0", "7/3",
                          "(q1 - q2)/(q1*q2 - 1)"}) {
        ParamRat v = ParamRat::parse(s);
        CHECK(ParamRat::parse(v.str()) == v);
    }
    CHECK(ParamRat::parse("(1-q1*q2)/(q1+q2)") ==
          ParamRat(P("1 - q1*q2"), P("q1 + q2")));
    CHECK_THROWS_AS(ParamRat::parse("q3"), ParseError);
    CHECK_THROWS_AS(ParamRat::parse("1 +"), ParseError);
    CHECK_THROWS_AS(ParamRat::parse("(1"), ParseError);
}
