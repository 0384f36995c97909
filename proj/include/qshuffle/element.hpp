#pragma once

#include <vector>

#include "qshuffle/laurent.hpp"

namespace qshuffle {

// Normalization of the symmetrization in the *-product. The alternating
// average carries 1/k!, giving the rational prefactor n!m!/(n+m)! on the
// shuffle-coset sum; the plain convention drops that prefactor. Both give
// associative products that differ only by graded scaling.
enum class ProductNorm {
    alt_average,  // with n!m!/(n+m)!
    shuffle_sum,  // without
};

// Element of the degree-n component: the rational function numerator/V_n
// where V_n is the Vandermonde product of all (z_i - z_j), i < j. Only the
// numerator is stored; it must be symmetric.
class SElement {
public:
    SElement() : arity_(0), numerator_(LaurentPoly::constant(0, ParamRat(0))) {}

    // Validates symmetry of the numerator.
    static SElement from_numerator(LaurentPoly numerator);
    // For numerators symmetric by construction (internal fast path).
    static SElement from_numerator_unchecked(LaurentPoly numerator);

    // Multiplicative unit: the empty-arity element 1.
    static SElement unit();
    // Degree-1 element with numerator z^k.
    static SElement power(int k);
    // Degree-1 element with the given univariate Laurent numerator.
    static SElement univariate(const LaurentPoly& f);

    int arity() const { return arity_; }
    const LaurentPoly& numerator() const { return numerator_; }
    bool is_zero() const { return numerator_.is_zero(); }

    SElement operator-() const;
    SElement& operator+=(const SElement& o);
    SElement& operator-=(const SElement& o);
    friend SElement operator+(SElement a, const SElement& b) { return a += b; }
    friend SElement operator-(SElement a, const SElement& b) { return a -= b; }
    SElement& operator*=(const ParamRat& c);

    friend bool operator==(const SElement& a, const SElement& b) {
        return a.arity_ == b.arity_ && a.numerator_ == b.numerator_;
    }

private:
    SElement(int arity, LaurentPoly numerator)
        : arity_(arity), numerator_(std::move(numerator)) {}

    int arity_;
    LaurentPoly numerator_;
};

// Numerator of the product kernel: omega(z_x, z_y) = (z_x - q1 z_y)(z_x - q2 z_y).
// The full kernel divides by (z_x - z_y)^2, which the product algorithm
// absorbs structurally. Indices are 0-based.
LaurentPoly mu_kernel(int arity, int x_index, int y_index);

// The *-product. Accumulates h * V_{n+m} as the signed sum over (n,m)
// shuffles of f(S) g(T) V_S V_T prod omega(z_i, z_j), then divides by the
// Vandermonde exactly.
SElement shuffle_product(const SElement& f, const SElement& g,
                         ProductNorm norm = ProductNorm::alt_average);

// Ordinary multiplication of the numerator by a symmetric Laurent polynomial.
SElement multiply_by_symmetric(const SElement& f, const LaurentPoly& g);

// numerator(p) / V(p); requires pairwise distinct coordinates.
Rational eval_element(const SElement& f, const Point& p, const EvalContext& ctx);

// Value of f * g at p through the shuffle-coset sum, without constructing
// the symbolic product. Exact; p must have arity(f) + arity(g) distinct
// coordinates.
Rational eval_product(const SElement& f, const SElement& g, const Point& p,
                      const EvalContext& ctx, ProductNorm norm = ProductNorm::alt_average);

// Value and tracked derivatives of the ideal generator G = (z - lambda) * f
// at a point, computed in one pass: d/dz_a, d/dz_b and the second partial
// d2/dz_a dz_b (equal indices give d2/dz_a^2).
struct GeneratorJet {
    Rational value;
    Rational da;
    Rational db;
    Rational dab;
};

// Expands the alternation into the n cosets indexed by which variable takes
// the leading slot and differentiates each closed-form coset analytically.
// f must have arity n-1 for an n-coordinate point.
GeneratorJet eval_generator_jet(const SElement& f, const Point& p, const EvalContext& ctx,
                                int a, int b, ProductNorm norm = ProductNorm::alt_average);

// Evaluates the generator or one of its partial derivatives.
// `derivative` holds 0-based variable indices: {} for the plain value, {i}
// for d/dz_i, {i, j} for the mixed second partial (i == j allowed).
Rational eval_generator(const SElement& f, const Point& p, const EvalContext& ctx,
                        const std::vector<int>& derivative = {},
                        ProductNorm norm = ProductNorm::alt_average);

}  // namespace qshuffle
