#include "qshuffle/param_rat.hpp"

#include "qshuffle/eval_context.hpp"

namespace qshuffle {

ParamRat::ParamRat(ParamPoly num, ParamPoly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DenominatorVanishes("ParamRat: zero denominator");
    normalize();
}

void ParamRat::normalize() {
    if (num_.is_zero()) {
        den_ = ParamPoly(1);
        return;
    }
    if (den_.is_one()) return;
    if (den_.is_constant()) {
        num_ *= den_.constant().inverse();
        den_ = ParamPoly(1);
        return;
    }
    ParamPoly g = param_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = divide_exact(num_, g);
        den_ = divide_exact(den_, g);
    }
    Rational lc = den_.leading_coeff();
    if (!lc.is_one()) {
        Rational inv = lc.inverse();
        num_ *= inv;
        den_ *= inv;
    }
}

ParamRat ParamRat::operator-() const {
    ParamRat r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

ParamRat operator+(const ParamRat& a, const ParamRat& b) {
    if (a.is_polynomial() && b.is_polynomial()) {
        ParamRat r;
        r.num_ = a.num_ + b.num_;
        return r;
    }
    return ParamRat(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

ParamRat operator-(const ParamRat& a, const ParamRat& b) {
    if (a.is_polynomial() && b.is_polynomial()) {
        ParamRat r;
        r.num_ = a.num_ - b.num_;
        return r;
    }
    return ParamRat(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

ParamRat operator*(const ParamRat& a, const ParamRat& b) {
    if (a.is_zero() || b.is_zero()) return ParamRat();
    if (a.is_polynomial() && b.is_polynomial()) {
        ParamRat r;
        r.num_ = a.num_ * b.num_;
        return r;
    }
    return ParamRat(a.num_ * b.num_, a.den_ * b.den_);
}

ParamRat operator/(const ParamRat& a, const ParamRat& b) {
    if (b.is_zero()) throw DenominatorVanishes("ParamRat: division by zero");
    return ParamRat(a.num_ * b.den_, a.den_ * b.num_);
}

ParamRat ParamRat::inverse() const {
    if (is_zero()) throw DenominatorVanishes("ParamRat: inverse of zero");
    return ParamRat(den_, num_);
}

ParamRat ParamRat::pow(long e) const {
    if (e == 0) return ParamRat(1);
    ParamRat base = e < 0 ? inverse() : *this;
    long k = e < 0 ? -e : e;
    ParamRat acc(1);
    while (k > 0) {
        if (k & 1) acc *= base;
        base *= base;
        k >>= 1;
    }
    return acc;
}

std::string ParamRat::str() const {
    if (is_polynomial()) return num_.str();
    std::string n = num_.str();
    if (num_.terms().size() > 1) n = "(" + n + ")";
    return n + "/(" + den_.str() + ")";
}

Rational param_eval(const ParamRat& x, const EvalContext& ctx) {
    Rational d = x.den().eval(ctx.q1(), ctx.q2());
    if (d.is_zero())
        throw DenominatorVanishes("param_eval: denominator vanishes at (q1,q2)=(" +
                                  ctx.q1().str() + "," + ctx.q2().str() + ")");
    return x.num().eval(ctx.q1(), ctx.q2()) / d;
}

}  // namespace qshuffle
