#pragma once

#include <map>
#include <string>
#include <vector>

#include "qshuffle/eval_context.hpp"
#include "qshuffle/param_rat.hpp"

namespace qshuffle {

// Evaluation point: n nonzero rational coordinates. Pairwise distinctness
// is additionally required by the evaluators that divide by Vandermonde
// factors; they check it themselves.
class Point {
public:
    Point() = default;
    explicit Point(std::vector<Rational> coords);

    int arity() const { return static_cast<int>(coords_.size()); }
    const Rational& operator[](int i) const { return coords_[i]; }
    const std::vector<Rational>& coords() const { return coords_; }

    bool pairwise_distinct() const;
    void require_distinct() const;  // throws DistinctnessViolation

private:
    std::vector<Rational> coords_;
};

// Sparse Laurent polynomial in z_1..z_n over Q(q1, q2). Exponent vectors
// (which may have negative entries) are the map keys; lexicographic key
// order doubles as the canonical term order for equality and printing.
class LaurentPoly {
public:
    using Exp = std::vector<int>;
    using TermMap = std::map<Exp, ParamRat>;

    LaurentPoly() : arity_(0) {}
    explicit LaurentPoly(int arity) : arity_(arity) {}

    static LaurentPoly constant(int arity, const ParamRat& c);
    static LaurentPoly monomial(int arity, const Exp& e, const ParamRat& c);
    // z_i - z_j (0-based indices).
    static LaurentPoly var_difference(int arity, int i, int j);
    // The Vandermonde product of all (z_i - z_j), i < j.
    static LaurentPoly vandermonde(int arity);

    int arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int term_count() const { return static_cast<int>(terms_.size()); }

    void add_term(const Exp& e, const ParamRat& c);

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
    LaurentPoly& operator*=(const ParamRat& c);

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.arity_ == b.arity_ && a.terms_ == b.terms_;
    }

    // Applies z_i -> z_{perm[i]} to every exponent vector.
    LaurentPoly permuted(const std::vector<int>& perm) const;

    // Embeds into a larger variable set: variable i becomes slots[i].
    LaurentPoly reindexed(int new_arity, const std::vector<int>& slots) const;

    bool is_symmetric() const;

    // Sum over all distinct permutations of the exponent vector.
    static LaurentPoly symmetrized_monomial(int arity, const Exp& e, const ParamRat& c);

    // d/dz_i (exact, term by term).
    LaurentPoly derivative(int i) const;

    // Exact division by (z_i - z_j); throws InexactDivision on remainder.
    LaurentPoly divide_by_var_difference(int i, int j) const;

    // Exact division by the full Vandermonde product.
    LaurentPoly divide_by_vandermonde() const;

    // If f, g are z-homogeneous their product is too; degree of the first
    // term (total z-degree) — meaningful for homogeneous polynomials.
    bool is_homogeneous() const;
    int homogeneous_degree() const;  // 0 for the zero polynomial

    Rational eval(const Point& p, const EvalContext& ctx) const;

    std::string str() const;

private:
    int arity_;
    TermMap terms_;
};

}  // namespace qshuffle
