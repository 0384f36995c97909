#include "qshuffle/rational.hpp"

#include <cctype>
#include <ostream>

namespace qshuffle {

Rational Rational::parse(const std::string& text) {
    if (text.empty()) throw ParseError("Rational: empty string");
    for (char c : text) {
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '-' && c != '+' && c != '/')
            throw ParseError("Rational: bad character in \"" + text + "\"");
    }
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(text));
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw DenominatorVanishes("Rational: zero denominator");
        return Rational(num, den);
    } catch (const std::invalid_argument&) {
        throw ParseError("Rational: cannot parse \"" + text + "\"");
    }
}

Rational Rational::pow(long e) const {
    if (e == 0) return Rational(1);
    if (is_zero()) {
        if (e < 0) throw DenominatorVanishes("Rational: 0 to negative power");
        return Rational(0);
    }
    bool neg = e < 0;
    unsigned long k = neg ? static_cast<unsigned long>(-e) : static_cast<unsigned long>(e);
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), k);
    mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), k);
    return neg ? Rational(d, n) : Rational(n, d);
}

std::string Rational::str() const {
    std::string s = num().get_str();
    if (!is_integer()) s += "/" + den().get_str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

}  // namespace qshuffle
