#include "qshuffle/param_poly.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

namespace qshuffle {

int ParamPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const ParamExp& e = leading_exp();
    return e.e1 + e.e2;
}

void ParamPoly::add_term(const ParamExp& e, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ParamPoly ParamPoly::operator-() const {
    ParamPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

ParamPoly& ParamPoly::operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

ParamPoly& ParamPoly::operator-=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.e1 + eb.e1, ea.e2 + eb.e2}, ca * cb);
    return r;
}

ParamPoly& ParamPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

ParamPoly ParamPoly::monic() const {
    if (is_zero()) return *this;
    ParamPoly r = *this;
    r *= leading_coeff().inverse();
    return r;
}

Rational ParamPoly::eval(const Rational& q1, const Rational& q2) const {
    Rational acc(0);
    for (const auto& [e, c] : terms_) acc += c * q1.pow(e.e1) * q2.pow(e.e2);
    return acc;
}

ParamPoly divide_exact(const ParamPoly& a, const ParamPoly& b) {
    if (b.is_zero()) throw InexactDivision("ParamPoly: division by zero");
    ParamPoly rem = a, quot;
    // Leading-term reduction in the graded-lex order; terminates with zero
    // remainder exactly when b divides a.
    while (!rem.is_zero()) {
        const ParamExp& le = rem.leading_exp();
        const ParamExp& lb = b.leading_exp();
        ParamExp d{le.e1 - lb.e1, le.e2 - lb.e2};
        if (d.e1 < 0 || d.e2 < 0)
            throw InexactDivision("ParamPoly: inexact division");
        Rational c = rem.leading_coeff() / b.leading_coeff();
        ParamPoly t = ParamPoly::monomial(c, d.e1, d.e2);
        quot += t;
        rem -= t * b;
        if (!rem.is_zero() && !GrlexLess{}(rem.leading_exp(), le))
            throw InexactDivision("ParamPoly: inexact division (no progress)");
    }
    return quot;
}

std::string ParamPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Leading terms first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        bool has_vars = e.e1 != 0 || e.e2 != 0;
        if (!a.is_one() || !has_vars) {
            os << a.str();
            if (has_vars) os << "*";
        }
        if (e.e1 != 0) {
            os << "q1";
            if (e.e1 != 1) os << "^" << e.e1;
            if (e.e2 != 0) os << "*";
        }
        if (e.e2 != 0) {
            os << "q2";
            if (e.e2 != 1) os << "^" << e.e2;
        }
    }
    return os.str();
}

namespace {

// --- univariate helpers over Q, used by the bivariate gcd ---------------

// Dense univariate polynomial in q1; index = degree.
using UniPoly = std::vector<Rational>;

void uni_trim(UniPoly& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

bool uni_is_zero(const UniPoly& p) { return p.empty(); }

UniPoly uni_mul(const UniPoly& a, const UniPoly& b) {
    if (a.empty() || b.empty()) return {};
    UniPoly r(a.size() + b.size() - 1, Rational(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    uni_trim(r);
    return r;
}

UniPoly uni_sub(UniPoly a, const UniPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), Rational(0));
    for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    uni_trim(a);
    return a;
}

// Remainder of a by b (b nonzero), ordinary division over Q.
UniPoly uni_rem(UniPoly a, const UniPoly& b) {
    while (a.size() >= b.size() && !a.empty()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    return a;
}

// Exact quotient a / b; throws if not exact.
UniPoly uni_div_exact(UniPoly a, const UniPoly& b) {
    if (uni_is_zero(b)) throw InexactDivision("UniPoly: division by zero");
    if (uni_is_zero(a)) return {};
    if (a.size() < b.size()) throw InexactDivision("UniPoly: inexact division");
    UniPoly q(a.size() - b.size() + 1, Rational(0));
    while (!a.empty() && a.size() >= b.size()) {
        Rational c = a.back() / b.back();
        size_t shift = a.size() - b.size();
        q[shift] = c;
        for (size_t i = 0; i < b.size(); ++i) a[shift + i] -= c * b[i];
        uni_trim(a);
    }
    if (!a.empty()) throw InexactDivision("UniPoly: inexact division");
    uni_trim(q);
    return q;
}

UniPoly uni_monic(UniPoly p) {
    if (p.empty()) return p;
    Rational inv = p.back().inverse();
    for (auto& c : p) c *= inv;
    return p;
}

UniPoly uni_gcd(UniPoly a, UniPoly b) {
    uni_trim(a);
    uni_trim(b);
    while (!uni_is_zero(b)) {
        UniPoly r = uni_rem(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return uni_monic(a);
}

// --- bivariate view: polynomial in q2 with UniPoly (q1) coefficients ----

using BiPoly = std::vector<UniPoly>;  // index = q2-degree

void bi_trim(BiPoly& p) {
    while (!p.empty() && uni_is_zero(p.back())) p.pop_back();
}

BiPoly to_bi(const ParamPoly& p) {
    BiPoly r;
    for (const auto& [e, c] : p.terms()) {
        if (r.size() <= static_cast<size_t>(e.e2)) r.resize(e.e2 + 1);
        UniPoly& u = r[e.e2];
        if (u.size() <= static_cast<size_t>(e.e1)) u.resize(e.e1 + 1, Rational(0));
        u[e.e1] = c;
    }
    for (auto& u : r) uni_trim(u);
    bi_trim(r);
    return r;
}

ParamPoly from_bi(const BiPoly& p) {
    ParamPoly r;
    for (size_t e2 = 0; e2 < p.size(); ++e2)
        for (size_t e1 = 0; e1 < p[e2].size(); ++e1)
            r.add_term({static_cast<int>(e1), static_cast<int>(e2)}, p[e2][e1]);
    return r;
}

// Content: gcd over Q[q1] of all q2-coefficients.
UniPoly bi_content(const BiPoly& p) {
    UniPoly g;
    for (const auto& u : p) {
        g = uni_gcd(g, u);
        if (g.size() == 1) break;  // already a unit
    }
    return g;
}

BiPoly bi_div_content(const BiPoly& p, const UniPoly& c) {
    BiPoly r = p;
    for (auto& u : r) u = uni_div_exact(u, c);
    return r;
}

BiPoly bi_mul_uni(const BiPoly& p, const UniPoly& c) {
    BiPoly r = p;
    for (auto& u : r) u = uni_mul(u, c);
    bi_trim(r);
    return r;
}

BiPoly bi_sub(BiPoly a, const BiPoly& b) {
    if (a.size() < b.size()) a.resize(b.size());
    for (size_t i = 0; i < b.size(); ++i) a[i] = uni_sub(a[i], b[i]);
    bi_trim(a);
    return a;
}

BiPoly bi_shift(const BiPoly& p, size_t k) {
    if (p.empty()) return {};
    BiPoly r(p.size() + k);
    for (size_t i = 0; i < p.size(); ++i) r[i + k] = p[i];
    return r;
}

// Pseudo-remainder of a by b in q2: lc(b)^(deg a - deg b + 1) * a mod b.
BiPoly bi_prem(BiPoly a, const BiPoly& b) {
    const UniPoly& lb = b.back();
    while (!a.empty() && a.size() >= b.size()) {
        UniPoly la = a.back();
        size_t shift = a.size() - b.size();
        // a <- lc(b)*a - la*q2^shift*b
        a = bi_sub(bi_mul_uni(a, lb), bi_mul_uni(bi_shift(b, shift), la));
    }
    return a;
}

}  // namespace

ParamPoly param_gcd(const ParamPoly& p, const ParamPoly& q) {
    if (p.is_zero()) return q.monic();
    if (q.is_zero()) return p.monic();

    BiPoly a = to_bi(p), b = to_bi(q);
    UniPoly ca = bi_content(a), cb = bi_content(b);
    UniPoly cg = uni_gcd(ca, cb);
    a = bi_div_content(a, ca);
    b = bi_div_content(b, cb);

    // Primitive pseudo-remainder sequence in q2.
    if (a.size() < b.size()) std::swap(a, b);
    while (!b.empty()) {
        BiPoly r = bi_prem(a, b);
        if (!r.empty()) r = bi_div_content(r, bi_content(r));
        a = std::move(b);
        b = std::move(r);
    }

    ParamPoly g = from_bi(bi_mul_uni(a, cg));
    return g.monic();
}

}  // namespace qshuffle
