#include "qshuffle/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qshuffle {

Point::Point(std::vector<Rational> coords) : coords_(std::move(coords)) {
    for (const auto& c : coords_)
        if (c.is_zero()) throw ZeroCoordinate("Point: zero coordinate");
}

bool Point::pairwise_distinct() const {
    for (size_t i = 0; i < coords_.size(); ++i)
        for (size_t j = i + 1; j < coords_.size(); ++j)
            if (coords_[i] == coords_[j]) return false;
    return true;
}

void Point::require_distinct() const {
    if (!pairwise_distinct())
        throw DistinctnessViolation("Point: coordinates must be pairwise distinct");
}

LaurentPoly LaurentPoly::constant(int arity, const ParamRat& c) {
    LaurentPoly p(arity);
    p.add_term(Exp(arity, 0), c);
    return p;
}

LaurentPoly LaurentPoly::monomial(int arity, const Exp& e, const ParamRat& c) {
    if (static_cast<int>(e.size()) != arity)
        throw ArityMismatch("LaurentPoly::monomial: exponent length != arity");
    LaurentPoly p(arity);
    p.add_term(e, c);
    return p;
}

LaurentPoly LaurentPoly::var_difference(int arity, int i, int j) {
    LaurentPoly p(arity);
    Exp e(arity, 0);
    e[i] = 1;
    p.add_term(e, ParamRat(1));
    e[i] = 0;
    e[j] = 1;
    p.add_term(e, ParamRat(-1));
    return p;
}

LaurentPoly LaurentPoly::vandermonde(int arity) {
    LaurentPoly p = constant(arity, ParamRat(1));
    for (int i = 0; i < arity; ++i)
        for (int j = i + 1; j < arity; ++j) p *= var_difference(arity, i, j);
    return p;
}

void LaurentPoly::add_term(const Exp& e, const ParamRat& c) {
    if (static_cast<int>(e.size()) != arity_)
        throw ArityMismatch("LaurentPoly::add_term: exponent length != arity");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    if (arity_ != o.arity_) throw ArityMismatch("LaurentPoly: arity mismatch in +");
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    if (arity_ != o.arity_) throw ArityMismatch("LaurentPoly: arity mismatch in -");
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.arity_ != b.arity_) throw ArityMismatch("LaurentPoly: arity mismatch in *");
    LaurentPoly r(a.arity_);
    LaurentPoly::Exp e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (int i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

LaurentPoly& LaurentPoly::operator*=(const ParamRat& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, coeff] : terms_) coeff *= c;
    return *this;
}

LaurentPoly LaurentPoly::permuted(const std::vector<int>& perm) const {
    LaurentPoly r(arity_);
    Exp e(arity_);
    for (const auto& [exp, c] : terms_) {
        for (int i = 0; i < arity_; ++i) e[perm[i]] = exp[i];
        r.add_term(e, c);
    }
    return r;
}

LaurentPoly LaurentPoly::reindexed(int new_arity, const std::vector<int>& slots) const {
    LaurentPoly r(new_arity);
    Exp e(new_arity, 0);
    for (const auto& [exp, c] : terms_) {
        std::fill(e.begin(), e.end(), 0);
        for (int i = 0; i < arity_; ++i) e[slots[i]] = exp[i];
        r.add_term(e, c);
    }
    return r;
}

bool LaurentPoly::is_symmetric() const {
    // Invariance under adjacent transpositions generates the full group.
    std::vector<int> perm(arity_);
    for (int k = 0; k + 1 < arity_; ++k) {
        for (int i = 0; i < arity_; ++i) perm[i] = i;
        std::swap(perm[k], perm[k + 1]);
        if (!(permuted(perm) == *this)) return false;
    }
    return true;
}

LaurentPoly LaurentPoly::symmetrized_monomial(int arity, const Exp& e, const ParamRat& c) {
    LaurentPoly r(arity);
    Exp s = e;
    std::sort(s.begin(), s.end());
    do {
        r.add_term(s, c);
    } while (std::next_permutation(s.begin(), s.end()));
    return r;
}

LaurentPoly LaurentPoly::derivative(int i) const {
    LaurentPoly r(arity_);
    Exp e(arity_);
    for (const auto& [exp, c] : terms_) {
        if (exp[i] == 0) continue;
        e = exp;
        e[i] -= 1;
        r.add_term(e, c * ParamRat(Rational(exp[i])));
    }
    return r;
}

LaurentPoly LaurentPoly::divide_by_var_difference(int i, int j) const {
    if (is_zero()) return *this;
    // View as a polynomial in z_i and run synthetic division with root z_j.
    // Laurent exponents of z_i are first shifted to be nonnegative; the
    // divisor has no z_i^{<0} part, so the shift commutes with division.
    int lo = 0;
    for (const auto& [e, c] : terms_) lo = std::min(lo, e[i]);

    // Bucket coefficients by the (shifted) z_i exponent.
    std::map<int, LaurentPoly> by_deg;
    for (const auto& [e, c] : terms_) {
        Exp rest = e;
        int k = e[i] - lo;
        rest[i] = 0;
        auto [it, inserted] = by_deg.try_emplace(k, arity_);
        it->second.add_term(rest, c);
    }
    int deg = by_deg.rbegin()->first;

    // p = sum_k c_k z_i^k = (z_i - z_j) q + rem, Horner from the top:
    // q_{k-1} = c_k + z_j * q_k with q_deg = 0 beyond the top term.
    LaurentPoly carry(arity_);  // q_k during the sweep
    LaurentPoly quot(arity_);
    Exp zj(arity_, 0);
    zj[j] = 1;
    LaurentPoly zjpoly = monomial(arity_, zj, ParamRat(1));
    auto shifted_in = [&](const LaurentPoly& p, int amount) {
        LaurentPoly t(arity_);
        for (const auto& [e, c] : p.terms()) {
            Exp ne = e;
            ne[i] += amount;
            t.add_term(ne, c);
        }
        return t;
    };
    for (int k = deg; k >= 1; --k) {
        auto it = by_deg.find(k);
        LaurentPoly ck = it == by_deg.end() ? LaurentPoly(arity_) : it->second;
        carry = k == deg ? ck : ck + zjpoly * carry;
        // carry is the coefficient of z_i^{k-1} in the quotient
        quot += shifted_in(carry, (k - 1) + lo);
    }
    auto it0 = by_deg.find(0);
    LaurentPoly rem = it0 == by_deg.end() ? LaurentPoly(arity_) : it0->second;
    rem += zjpoly * carry;
    if (!rem.is_zero())
        throw InexactDivision("LaurentPoly: remainder dividing by (z_i - z_j)");
    return quot;
}

LaurentPoly LaurentPoly::divide_by_vandermonde() const {
    LaurentPoly r = *this;
    for (int i = 0; i < arity_; ++i)
        for (int j = i + 1; j < arity_; ++j) {
            if (r.is_zero()) return r;
            r = r.divide_by_var_difference(i, j);
        }
    return r;
}

bool LaurentPoly::is_homogeneous() const {
    if (terms_.empty()) return true;
    int d = homogeneous_degree();
    for (const auto& [e, c] : terms_) {
        int s = 0;
        for (int x : e) s += x;
        if (s != d) return false;
    }
    return true;
}

int LaurentPoly::homogeneous_degree() const {
    if (terms_.empty()) return 0;
    int s = 0;
    for (int x : terms_.begin()->first) s += x;
    return s;
}

Rational LaurentPoly::eval(const Point& p, const EvalContext& ctx) const {
    if (p.arity() != arity_) throw ArityMismatch("LaurentPoly::eval: point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = param_eval(c, ctx);
        for (int i = 0; i < arity_; ++i)
            if (e[i] != 0) t *= p[i].pow(e[i]);
        acc += t;
    }
    return acc;
}

std::string LaurentPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        std::string cs = c.str();
        bool negated = false;
        if (cs.size() > 1 && cs[0] == '-' && cs.find_first_of("+-", 1) == std::string::npos) {
            negated = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (negated) os << "-";
        } else {
            os << (negated ? " - " : " + ");
        }
        first = false;
        bool composite = cs.find_first_of("+-/") != std::string::npos ||
                         (cs.find('*') != std::string::npos);
        if (composite) cs = "(" + cs + ")";
        bool has_vars = std::any_of(e.begin(), e.end(), [](int x) { return x != 0; });
        bool coeff_printed = false;
        if (!has_vars || cs != "1") {
            os << cs;
            coeff_printed = true;
        }
        for (int i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            if (coeff_printed) os << "*";
            coeff_printed = true;
            os << "z" << (i + 1);
            if (e[i] != 1) os << "^" << e[i];
        }
    }
    return os.str();
}

}  // namespace qshuffle
