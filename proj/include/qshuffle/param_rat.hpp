#pragma once

#include <string>

#include "qshuffle/param_poly.hpp"

namespace qshuffle {

class EvalContext;

// Element of the coefficient field Q(q1, q2), kept normalized:
// gcd(num, den) = 1 and den monic under the graded-lex order.
class ParamRat {
public:
    ParamRat() : num_(), den_(1) {}
    ParamRat(const Rational& c) : num_(c), den_(1) {}
    ParamRat(int c) : num_(c), den_(1) {}
    ParamRat(const ParamPoly& p) : num_(p), den_(1) {}
    ParamRat(ParamPoly num, ParamPoly den);

    static ParamRat q1() { return ParamRat(ParamPoly::q1()); }
    static ParamRat q2() { return ParamRat(ParamPoly::q2()); }

    // Parses the fixed textual grammar, e.g. "(1 - q1*q2)/(q1 + q2)".
    static ParamRat parse(const std::string& text);

    const ParamPoly& num() const { return num_; }
    const ParamPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_polynomial() const { return den_.is_one(); }

    ParamRat operator-() const;
    ParamRat& operator+=(const ParamRat& o) { return *this = *this + o; }
    ParamRat& operator-=(const ParamRat& o) { return *this = *this - o; }
    ParamRat& operator*=(const ParamRat& o) { return *this = *this * o; }
    ParamRat& operator/=(const ParamRat& o) { return *this = *this / o; }

    friend ParamRat operator+(const ParamRat& a, const ParamRat& b);
    friend ParamRat operator-(const ParamRat& a, const ParamRat& b);
    friend ParamRat operator*(const ParamRat& a, const ParamRat& b);
    friend ParamRat operator/(const ParamRat& a, const ParamRat& b);

    friend bool operator==(const ParamRat& a, const ParamRat& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    ParamRat inverse() const;
    ParamRat pow(long e) const;

    std::string str() const;

private:
    void normalize();

    ParamPoly num_;
    ParamPoly den_;
};

// Exact value at the context parameters; throws DenominatorVanishes if the
// denominator is zero there.
Rational param_eval(const ParamRat& x, const EvalContext& ctx);

}  // namespace qshuffle
