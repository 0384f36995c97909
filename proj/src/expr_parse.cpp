#include "qshuffle/expr_parse.hpp"

#include <cctype>

namespace qshuffle {

namespace {

class Parser {
public:
    Parser(const std::string& text, int arity) : text_(text), arity_(arity) {}

    LaurentPoly parse() {
        LaurentPoly v = expr();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return v;
    }

private:
    LaurentPoly expr() {
        LaurentPoly v = term();
        for (;;) {
            skip_ws();
            if (accept('+'))
                v += term();
            else if (accept('-'))
                v -= term();
            else
                return v;
        }
    }

    LaurentPoly term() {
        LaurentPoly v = factor();
        for (;;) {
            skip_ws();
            if (accept('*')) {
                v *= factor();
            } else if (accept('/')) {
                v = divide(v, factor());
            } else {
                return v;
            }
        }
    }

    LaurentPoly factor() {
        skip_ws();
        bool negate = false;
        while (peek() == '-' || peek() == '+') {
            if (get() == '-') negate = !negate;
            skip_ws();
        }
        LaurentPoly v = atom();
        skip_ws();
        if (accept('^')) {
            skip_ws();
            bool eneg = accept('-');
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("exponent expected");
            long e = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) e = e * 10 + (get() - '0');
            v = power(v, eneg ? -e : e);
        }
        if (negate) v = -v;
        return v;
    }

    LaurentPoly atom() {
        skip_ws();
        char c = peek();
        if (c == '(') {
            get();
            LaurentPoly v = expr();
            skip_ws();
            if (!accept(')')) fail("expected ')'");
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            Integer n = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) n = n * 10 + (get() - '0');
            return LaurentPoly::constant(arity_, ParamRat(Rational(n)));
        }
        if (c == 'q') {
            get();
            char d = get();
            if (d == '1') return LaurentPoly::constant(arity_, ParamRat::q1());
            if (d == '2') return LaurentPoly::constant(arity_, ParamRat::q2());
            fail("expected q1 or q2");
        }
        if (c == 'z') {
            get();
            if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("variable index expected");
            int k = 0;
            while (std::isdigit(static_cast<unsigned char>(peek()))) k = k * 10 + (get() - '0');
            if (k < 1 || k > arity_) fail("variable z" + std::to_string(k) + " out of range");
            LaurentPoly::Exp e(arity_, 0);
            e[k - 1] = 1;
            return LaurentPoly::monomial(arity_, e, ParamRat(1));
        }
        fail("unexpected character");
    }

    // Division by a z-free value only.
    LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& b) {
        ParamRat divisor = as_scalar(b);
        if (divisor.is_zero()) fail("division by zero");
        LaurentPoly r = a;
        r *= divisor.inverse();
        return r;
    }

    ParamRat as_scalar(const LaurentPoly& v) {
        if (v.is_zero()) return ParamRat(0);
        if (v.term_count() == 1) {
            const auto& [e, c] = *v.terms().begin();
            bool zfree = true;
            for (int x : e) zfree &= x == 0;
            if (zfree) return c;
        } else {
            ParamRat acc(0);
            for (const auto& [e, c] : v.terms()) {
                for (int x : e)
                    if (x != 0) fail("divisor must not involve z variables");
                acc += c;
            }
            return acc;
        }
        fail("divisor must not involve z variables");
    }

    LaurentPoly power(const LaurentPoly& v, long e) {
        if (e >= 0) {
            LaurentPoly acc = LaurentPoly::constant(arity_, ParamRat(1));
            for (long i = 0; i < e; ++i) acc *= v;
            return acc;
        }
        // Negative power: invertible bases only.
        if (v.term_count() == 1) {
            const auto& [exp, c] = *v.terms().begin();
            LaurentPoly::Exp ne(arity_);
            for (int i = 0; i < arity_; ++i) ne[i] = exp[i] * static_cast<int>(e);
            return LaurentPoly::monomial(arity_, ne, c.pow(e));
        }
        ParamRat s = as_scalar(v);
        if (s.is_zero()) fail("zero to a negative power");
        return LaurentPoly::constant(arity_, s.pow(e));
    }

    [[noreturn]] void fail(const std::string& why) {
        throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + why);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
    char get() { return pos_ < text_.size() ? text_[pos_++] : '\0'; }
    bool accept(char c) {
        if (peek() == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    const std::string& text_;
    int arity_;
    size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(const std::string& text, int arity) {
    return Parser(text, arity).parse();
}

ParamRat parse_param_rat(const std::string& text) {
    LaurentPoly v = parse_laurent(text, 0);
    if (v.is_zero()) return ParamRat(0);
    return v.terms().begin()->second;
}

ParamRat ParamRat::parse(const std::string& text) { return parse_param_rat(text); }

}  // namespace qshuffle
