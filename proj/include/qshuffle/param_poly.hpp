#pragma once

#include <map>
#include <string>
#include <utility>

#include "qshuffle/rational.hpp"

namespace qshuffle {

// Exponent pair (e1, e2) for q1^e1 * q2^e2.
struct ParamExp {
    int e1 = 0;
    int e2 = 0;

    friend bool operator==(const ParamExp&, const ParamExp&) = default;
};

// Graded-lexicographic order: first by total degree, then by e1.
// This is the canonical term order used for leading terms, printing,
// and the monic normalization of denominators.
struct GrlexLess {
    bool operator()(const ParamExp& a, const ParamExp& b) const {
        int da = a.e1 + a.e2, db = b.e1 + b.e2;
        if (da != db) return da < db;
        if (a.e1 != b.e1) return a.e1 < b.e1;
        return a.e2 < b.e2;
    }
};

// Polynomial in the two parameters q1, q2 with rational coefficients.
// Invariant: no zero coefficients are stored.
class ParamPoly {
public:
    using TermMap = std::map<ParamExp, Rational, GrlexLess>;

    ParamPoly() = default;
    ParamPoly(const Rational& c) {
        if (!c.is_zero()) terms_[{0, 0}] = c;
    }
    ParamPoly(int c) : ParamPoly(Rational(c)) {}

    static ParamPoly monomial(const Rational& c, int e1, int e2) {
        ParamPoly p;
        if (!c.is_zero()) p.terms_[{e1, e2}] = c;
        return p;
    }
    static ParamPoly q1() { return monomial(Rational(1), 1, 0); }
    static ParamPoly q2() { return monomial(Rational(1), 0, 1); }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_one() const {
        return terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0} &&
               terms_.begin()->second.is_one();
    }
    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == ParamExp{0, 0});
    }
    // Constant term (zero if absent).
    Rational constant() const {
        auto it = terms_.find({0, 0});
        return it == terms_.end() ? Rational(0) : it->second;
    }

    int total_degree() const;  // -1 for the zero polynomial

    // Leading term in the graded-lex order. Precondition: nonzero.
    const ParamExp& leading_exp() const { return std::prev(terms_.end())->first; }
    const Rational& leading_coeff() const { return std::prev(terms_.end())->second; }

    void add_term(const ParamExp& e, const Rational& c);

    ParamPoly operator-() const;
    ParamPoly& operator+=(const ParamPoly& o);
    ParamPoly& operator-=(const ParamPoly& o);
    friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
    friend ParamPoly operator-(ParamPoly a, const ParamPoly& b) { return a -= b; }
    friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b);

    ParamPoly& operator*=(const ParamPoly& o) { return *this = *this * o; }
    ParamPoly& operator*=(const Rational& c);

    friend bool operator==(const ParamPoly& a, const ParamPoly& b) {
        return a.terms_ == b.terms_;
    }

    // Scales so the leading coefficient is 1. Zero stays zero.
    ParamPoly monic() const;

    Rational eval(const Rational& q1, const Rational& q2) const;

    // Exact division; throws InexactDivision if the division leaves a
    // remainder (used only where exactness is guaranteed by construction).
    friend ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b);

    std::string str() const;

private:
    TermMap terms_;
};

// Greatest common divisor, normalized to leading coefficient 1.
// gcd(0, 0) = 0 by convention. Computed by a content/primitive-part
// pseudo-remainder recursion viewing polynomials in q2 over Q[q1].
ParamPoly param_gcd(const ParamPoly& p, const ParamPoly& q);

}  // namespace qshuffle
