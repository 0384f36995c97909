#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qshuffle/element.hpp"
#include "qshuffle/grid.hpp"
#include "qshuffle/random.hpp"

namespace qshuffle {

// Linear condition on first derivatives: sum over entries of
// coeff * dL/dz_i, with 0-based variable indices.
using RelationVector = std::map<int, ParamRat>;

// Linear condition on second derivatives: sum over stored (i <= j) of
// coeff * d2L/dz_i dz_j.
struct SecondOrderRelation {
    std::map<std::pair<int, int>, ParamRat> entries;
};

// Value of (z_c - lambda) * prod_{i != c} mu(z_c, z_i) at p (0-based c).
// These are the individual alternation summands whose simultaneous
// vanishing characterizes the common zeros of the ideal's graded piece.
Rational master_summand(int c, const Point& p, const EvalContext& ctx);

// True iff every master summand vanishes at subset_to_point(s). Agrees with
// the combinatorial criterion: every non-root vertex has a present parent.
bool is_common_zero(const GridSubset& s, const EvalContext& ctx);

// One relation per X vertex: coefficient 1 on it, propagated multiplicatively
// to descendants through chains of single-parent vertices (factor q1 per
// down-left step, q2 per down-right step), stopping at X vertices and at
// vertices with no present children. Requires an admissible subset.
std::vector<RelationVector> first_order_relations(const GridSubset& s);

// Basis of the space of second-derivative conditions spanned by symmetrized
// products of the first-order vectors, solved exactly over Q(q1, q2). Its
// dimension is k(k-1)/2 for the subsets in scope. Each relation is scaled so
// its first nonzero entry is 1.
std::vector<SecondOrderRelation> second_order_relations(const GridSubset& s);

struct MultiplicityCondition {
    std::string id;
    bool holds = false;
};

struct MultiplicityReport {
    int conditions_verified = 0;    // 1 (value) + #first-order + #second-order
    Integer expected;               // 2^k
    bool matches_expected = false;  // asserted by callers only for k <= 2
    int k = 0;
    int samples = 0;
    std::uint64_t seed = 0;
    std::vector<MultiplicityCondition> conditions;
};

// Draws `samples` random elements of degree n-1, forms the ideal generators
// (z - lambda) * F, and verifies at the subset's point: the value vanishes,
// every first-order relation annihilates the gradient, and every
// second-order relation annihilates the Hessian. Throws ConditionFailure
// with the witness sample on any failed identity; NotAdmissible if the
// subset is not a common zero.
MultiplicityReport verify_multiplicity(const GridSubset& s, const EvalContext& ctx,
                                       int samples, std::uint64_t seed = 1);

// Torsion sanity check for q1^2 q2 = 1: products f1*f2*f3 of random
// degree-1 elements vanish at (alpha, q1 alpha, q1 q2 alpha). Returns true
// iff all sampled products vanish at all given alphas.
bool torsion_vanishing_smoke(const EvalContext& ctx, const std::vector<Rational>& alphas,
                             int triples, std::uint64_t seed = 1);

}  // namespace qshuffle
