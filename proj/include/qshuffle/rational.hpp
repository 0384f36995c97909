#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

#include "qshuffle/errors.hpp"

namespace qshuffle {

using Integer = mpz_class;

// Exact rational number. Thin value wrapper around GMP's mpq_class kept
// permanently canonical: gcd(|num|, den) = 1 and den > 0.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(int n) : v_(n) {}
    Rational(long n) : v_(n) {}
    Rational(long long n) : v_(static_cast<long>(n)) {}
    Rational(const Integer& n) : v_(n) {}

    Rational(const Integer& num, const Integer& den) : v_(num, den) {
        if (den == 0) throw DenominatorVanishes("Rational: zero denominator");
        v_.canonicalize();
    }
    Rational(long num, long den) : Rational(Integer(num), Integer(den)) {}

    explicit Rational(const mpq_class& q) : v_(q) { v_.canonicalize(); }

    // Parses "n", "-n", or "n/d". Throws ParseError on anything else.
    static Rational parse(const std::string& text);

    const Integer num() const { return v_.get_num(); }
    const Integer den() const { return v_.get_den(); }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    Rational operator-() const { return Rational(mpq_class(-v_)); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw DenominatorVanishes("Rational: division by zero");
        v_ /= o.v_;
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.v_ == b.v_;
    }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        int c = cmp(a.v_, b.v_);
        return c < 0   ? std::strong_ordering::less
               : c > 0 ? std::strong_ordering::greater
                       : std::strong_ordering::equal;
    }

    Rational inverse() const {
        if (is_zero()) throw DenominatorVanishes("Rational: inverse of zero");
        return Rational(Integer(v_.get_den()), Integer(v_.get_num()));
    }

    // Integer power, negative exponents allowed for nonzero values.
    Rational pow(long e) const;

    Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    std::string str() const;

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

private:
    mpq_class v_;
};

}  // namespace qshuffle
