#include "qshuffle/element.hpp"

#include <algorithm>
#include <numeric>

namespace qshuffle {

SElement SElement::from_numerator(LaurentPoly numerator) {
    if (!numerator.is_symmetric())
        throw ArityMismatch("SElement: numerator is not symmetric");
    return SElement(numerator.arity(), std::move(numerator));
}

SElement SElement::from_numerator_unchecked(LaurentPoly numerator) {
    return SElement(numerator.arity(), std::move(numerator));
}

SElement SElement::unit() {
    return SElement(0, LaurentPoly::constant(0, ParamRat(1)));
}

SElement SElement::power(int k) {
    return SElement(1, LaurentPoly::monomial(1, {k}, ParamRat(1)));
}

SElement SElement::univariate(const LaurentPoly& f) {
    if (f.arity() != 1) throw ArityMismatch("SElement::univariate: arity must be 1");
    return SElement(1, f);
}

SElement SElement::operator-() const { return SElement(arity_, -numerator_); }

SElement& SElement::operator+=(const SElement& o) {
    if (arity_ != o.arity_) throw ArityMismatch("SElement: arity mismatch in +");
    numerator_ += o.numerator_;
    return *this;
}

SElement& SElement::operator-=(const SElement& o) {
    if (arity_ != o.arity_) throw ArityMismatch("SElement: arity mismatch in -");
    numerator_ -= o.numerator_;
    return *this;
}

SElement& SElement::operator*=(const ParamRat& c) {
    numerator_ *= c;
    return *this;
}

LaurentPoly mu_kernel(int arity, int x_index, int y_index) {
    if (x_index == y_index) throw ArityMismatch("mu_kernel: x_index == y_index");
    LaurentPoly::Exp e(arity, 0);
    LaurentPoly a(arity);  // z_x - q1 z_y
    e[x_index] = 1;
    a.add_term(e, ParamRat(1));
    e[x_index] = 0;
    e[y_index] = 1;
    a.add_term(e, -ParamRat::q1());
    LaurentPoly b(arity);  // z_x - q2 z_y
    e[y_index] = 0;
    e[x_index] = 1;
    b.add_term(e, ParamRat(1));
    e[x_index] = 0;
    e[y_index] = 1;
    b.add_term(e, -ParamRat::q2());
    return a * b;
}

namespace {

Rational factorial(int n) {
    Rational r(1);
    for (int i = 2; i <= n; ++i) r *= Rational(i);
    return r;
}

// Vandermonde product restricted to the variables in `slots` (global
// indices, increasing), as a polynomial of the full arity.
LaurentPoly block_vandermonde(int arity, const std::vector<int>& slots) {
    LaurentPoly v = LaurentPoly::constant(arity, ParamRat(1));
    for (size_t a = 0; a < slots.size(); ++a)
        for (size_t b = a + 1; b < slots.size(); ++b)
            v *= LaurentPoly::var_difference(arity, slots[a], slots[b]);
    return v;
}

}  // namespace

SElement shuffle_product(const SElement& f, const SElement& g, ProductNorm norm) {
    const int n = f.arity(), m = g.arity(), N = n + m;
    if (n == 0 || m == 0) {
        // The empty block contributes no kernel factors; the product is the
        // plain numerator product (a scalar times the other numerator).
        const LaurentPoly& scalar = n == 0 ? f.numerator() : g.numerator();
        const SElement& other = n == 0 ? g : f;
        ParamRat c = scalar.is_zero() ? ParamRat(0) : scalar.terms().begin()->second;
        SElement r = other;
        r *= c;
        return r;
    }

    LaurentPoly acc(N);
    std::vector<int> first(n), second(m);
    // Iterate over all n-subsets S of {0..N-1} (the first block): all
    // distinct arrangements of the 0/1 selector mask.
    std::vector<int> mask(N, 0);
    std::fill(mask.end() - n, mask.end(), 1);
    do {
        int fi = 0, si = 0, inversions = 0;
        for (int i = 0; i < N; ++i) {
            if (mask[i]) {
                inversions += i - fi;
                first[fi++] = i;
            } else {
                second[si++] = i;
            }
        }
        LaurentPoly term = f.numerator().reindexed(N, first);
        term *= g.numerator().reindexed(N, second);
        term *= block_vandermonde(N, first);
        term *= block_vandermonde(N, second);
        for (int i : first)
            for (int j : second) term *= mu_kernel(N, i, j);
        if (inversions % 2) term = -term;
        acc += term;
    } while (std::next_permutation(mask.begin(), mask.end()));

    if (norm == ProductNorm::alt_average)
        acc *= ParamRat(factorial(n) * factorial(m) / factorial(N));

    return SElement::from_numerator(acc.divide_by_vandermonde());
}

SElement multiply_by_symmetric(const SElement& f, const LaurentPoly& g) {
    if (g.arity() != f.arity())
        throw ArityMismatch("multiply_by_symmetric: arity mismatch");
    if (!g.is_symmetric())
        throw ArityMismatch("multiply_by_symmetric: multiplier is not symmetric");
    return SElement::from_numerator_unchecked(f.numerator() * g);
}

Rational eval_element(const SElement& f, const Point& p, const EvalContext& ctx) {
    if (p.arity() != f.arity()) throw ArityMismatch("eval_element: point arity mismatch");
    p.require_distinct();
    Rational v = f.numerator().eval(p, ctx);
    Rational d(1);
    for (int i = 0; i < p.arity(); ++i)
        for (int j = i + 1; j < p.arity(); ++j) d *= p[i] - p[j];
    return v / d;
}

Rational eval_product(const SElement& f, const SElement& g, const Point& p,
                      const EvalContext& ctx, ProductNorm norm) {
    const int n = f.arity(), m = g.arity(), N = n + m;
    if (p.arity() != N) throw ArityMismatch("eval_product: point arity mismatch");
    p.require_distinct();

    Rational acc(0);
    std::vector<int> mask(N, 0);
    std::fill(mask.end() - n, mask.end(), 1);
    std::vector<Rational> fc, gc;
    do {
        fc.clear();
        gc.clear();
        int fi = 0, inversions = 0;
        for (int i = 0; i < N; ++i) {
            if (mask[i]) {
                inversions += i - fi++;
                fc.push_back(p[i]);
            } else {
                gc.push_back(p[i]);
            }
        }
        Rational term = eval_element(f, Point(fc), ctx) * eval_element(g, Point(gc), ctx);
        for (int i = 0; i < N; ++i) {
            if (!mask[i]) continue;
            for (int j = 0; j < N; ++j) {
                if (mask[j]) continue;
                Rational d = p[i] - p[j];
                term *= (p[i] - ctx.q1() * p[j]) * (p[i] - ctx.q2() * p[j]) / (d * d);
            }
        }
        acc += inversions % 2 ? -term : term;
    } while (std::next_permutation(mask.begin(), mask.end()));

    if (norm == ProductNorm::alt_average)
        acc *= factorial(n) * factorial(m) / factorial(N);
    return acc;
}

}  // namespace qshuffle
