#include <algorithm>

#include "qshuffle/element.hpp"

namespace qshuffle {

namespace {

// Degree-2 truncated Taylor expansion in two formal directions u, w attached
// to (possibly equal) variables a, b:
//   value + c10*u + c01*w + c20*u^2 + c11*u*w + c02*w^2.
// Mixed coefficient c11 equals d2f/dz_a dz_b for a != b and d2f/dz_a^2 for
// a == b, so one structure serves every multi-index of order <= 2.
struct Jet {
    Rational c00, c10, c01, c20, c11, c02;

    static Jet constant(const Rational& v) { return {v, 0, 0, 0, 0, 0}; }

    Jet operator*(const Jet& o) const {
        Jet r;
        r.c00 = c00 * o.c00;
        r.c10 = c00 * o.c10 + c10 * o.c00;
        r.c01 = c00 * o.c01 + c01 * o.c00;
        r.c20 = c00 * o.c20 + c10 * o.c10 + c20 * o.c00;
        r.c11 = c00 * o.c11 + c10 * o.c01 + c01 * o.c10 + c11 * o.c00;
        r.c02 = c00 * o.c02 + c01 * o.c01 + c02 * o.c00;
        return r;
    }
    Jet& operator*=(const Jet& o) { return *this = *this * o; }

    Jet& operator+=(const Jet& o) {
        c00 += o.c00;
        c10 += o.c10;
        c01 += o.c01;
        c20 += o.c20;
        c11 += o.c11;
        c02 += o.c02;
        return *this;
    }

    Jet& operator*=(const Rational& s) {
        c00 *= s;
        c10 *= s;
        c01 *= s;
        c20 *= s;
        c11 *= s;
        c02 *= s;
        return *this;
    }

    // 1/u via the geometric series in the higher-order part.
    Jet reciprocal() const {
        if (c00.is_zero())
            throw DistinctnessViolation("Jet: reciprocal of vanishing value");
        Rational i0 = c00.inverse();
        Rational s10 = c10 * i0, s01 = c01 * i0;
        Jet r;
        r.c00 = i0;
        r.c10 = -s10 * i0;
        r.c01 = -s01 * i0;
        r.c20 = (s10 * s10 - c20 * i0) * i0;
        r.c11 = (Rational(2) * s10 * s01 - c11 * i0) * i0;
        r.c02 = (s01 * s01 - c02 * i0) * i0;
        return r;
    }
};

// Jet of the linear form coeff_a*z_a + coeff_b*z_b + const at the point,
// expressed through the two active directions.
Jet linear_jet(const Rational& value, const Rational& da, const Rational& db) {
    return {value, da, db, 0, 0, 0};
}

struct Directions {
    int a = -1;  // global variable of direction u, -1 when inactive
    int b = -1;  // global variable of direction w
};

// Jet of a single variable z_v.
Jet var_jet(const Point& p, const Directions& d, int v) {
    return linear_jet(p[v], Rational(v == d.a ? 1 : 0), Rational(v == d.b ? 1 : 0));
}

// Jet of a sparse Laurent polynomial evaluated on the sub-point with global
// indices `slots` (f's variable i reads p[slots[i]]). One pass over the
// terms yields value and all tracked derivatives.
Jet laurent_jet(const LaurentPoly& f, const Point& p, const EvalContext& ctx,
                const std::vector<int>& slots, const Directions& d) {
    int pos_a = -1, pos_b = -1;
    for (size_t i = 0; i < slots.size(); ++i) {
        if (slots[i] == d.a) pos_a = static_cast<int>(i);
        if (slots[i] == d.b) pos_b = static_cast<int>(i);
    }
    Rational inv_a = pos_a >= 0 ? p[d.a].inverse() : Rational(0);
    Rational inv_b = pos_b >= 0 ? p[d.b].inverse() : Rational(0);

    Jet acc = Jet::constant(Rational(0));
    for (const auto& [e, c] : f.terms()) {
        Rational t = param_eval(c, ctx);
        for (size_t i = 0; i < slots.size(); ++i)
            if (e[i] != 0) t *= p[slots[i]].pow(e[i]);
        Jet jt = Jet::constant(t);
        if (pos_a >= 0 && pos_b >= 0 && d.a == d.b) {
            // Same variable in both directions: f(.., p + u + w, ..).
            long ea = e[pos_a];
            Rational du = Rational(Integer(ea)) * inv_a;
            jt.c10 = t * du;
            jt.c01 = jt.c10;
            Rational second = Rational(Integer(ea * (ea - 1))) * inv_a * inv_a;
            jt.c11 = t * second;
            jt.c20 = jt.c11 / Rational(2);
            jt.c02 = jt.c20;
        } else {
            if (pos_a >= 0) {
                long ea = e[pos_a];
                jt.c10 = t * Rational(Integer(ea)) * inv_a;
                jt.c20 = t * Rational(Integer(ea * (ea - 1))) * inv_a * inv_a / Rational(2);
            }
            if (pos_b >= 0) {
                long eb = e[pos_b];
                jt.c01 = t * Rational(Integer(eb)) * inv_b;
                jt.c02 = t * Rational(Integer(eb * (eb - 1))) * inv_b * inv_b / Rational(2);
            }
            if (pos_a >= 0 && pos_b >= 0) {
                jt.c11 = t * Rational(Integer(e[pos_a])) * Rational(Integer(e[pos_b])) *
                         inv_a * inv_b;
            }
        }
        acc += jt;
    }
    return acc;
}

}  // namespace

GeneratorJet eval_generator_jet(const SElement& f, const Point& p, const EvalContext& ctx,
                                int a, int b, ProductNorm norm) {
    const int n = p.arity();
    if (f.arity() != n - 1)
        throw ArityMismatch("eval_generator: f must have arity n-1 for an n-point");
    if (a < 0 || a >= n || b < 0 || b >= n)
        throw ArityMismatch("eval_generator: derivative index out of range");
    p.require_distinct();

    Directions dirs{a, b};

    const Rational q1v = ctx.q1(), q2v = ctx.q2(), lam = ctx.lambda();

    Jet total = Jet::constant(Rational(0));
    std::vector<int> rest(n - 1);
    for (int c = 0; c < n; ++c) {
        int k = 0;
        for (int i = 0; i < n; ++i)
            if (i != c) rest[k++] = i;

        // F(z_rest) = f(z_rest) / V(z_rest)
        Jet coset = laurent_jet(f.numerator(), p, ctx, rest, dirs);
        Jet vand = Jet::constant(Rational(1));
        for (int i = 0; i < n - 1; ++i)
            for (int j = i + 1; j < n - 1; ++j) {
                Jet diff = var_jet(p, dirs, rest[i]);
                Jet other = var_jet(p, dirs, rest[j]);
                diff.c00 -= other.c00;
                diff.c10 -= other.c10;
                diff.c01 -= other.c01;
                vand *= diff;
            }
        coset *= vand.reciprocal();

        // (z_c - lambda) * prod_i omega(z_c, z_i) / (z_c - z_i)^2
        Jet zc = var_jet(p, dirs, c);
        Jet lead = zc;
        lead.c00 -= lam;
        coset *= lead;
        for (int i = 0; i < n; ++i) {
            if (i == c) continue;
            Jet zi = var_jet(p, dirs, i);
            Jet f1 = linear_jet(zc.c00 - q1v * zi.c00, zc.c10 - q1v * zi.c10,
                                zc.c01 - q1v * zi.c01);
            Jet f2 = linear_jet(zc.c00 - q2v * zi.c00, zc.c10 - q2v * zi.c10,
                                zc.c01 - q2v * zi.c01);
            Jet dd = linear_jet(zc.c00 - zi.c00, zc.c10 - zi.c10, zc.c01 - zi.c01);
            coset *= f1;
            coset *= f2;
            coset *= (dd * dd).reciprocal();
        }

        if (c % 2) coset *= Rational(-1);
        total += coset;
    }
    if (norm == ProductNorm::alt_average) total *= Rational(Integer(1), Integer(n));

    return {total.c00, total.c10, total.c01, total.c11};
}

Rational eval_generator(const SElement& f, const Point& p, const EvalContext& ctx,
                        const std::vector<int>& derivative, ProductNorm norm) {
    if (derivative.size() > 2)
        throw ArityMismatch("eval_generator: derivative order must be <= 2");
    int a = derivative.size() >= 1 ? derivative[0] : 0;
    int b = derivative.size() == 2 ? derivative[1] : a;
    GeneratorJet jet = eval_generator_jet(f, p, ctx, a, b, norm);
    if (derivative.empty()) return jet.value;
    if (derivative.size() == 1) return jet.da;
    return jet.dab;
}

}  // namespace qshuffle
