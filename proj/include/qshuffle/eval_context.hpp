#pragma once

#include <optional>

#include "qshuffle/rational.hpp"

namespace qshuffle {

// Rational specialization of the parameters. Generic mode requires
// q1^a q2^b != 1 for all 1 <= a, b <= guard_bound; torsion(a, b) mode
// requires q1^a q2^b = 1 exactly, with (a, b) minimal under the same bound.
class EvalContext {
public:
    struct Torsion {
        int a = 0;
        int b = 0;
    };

    static EvalContext generic(Rational q1, Rational q2, Rational lambda = Rational(1),
                               int guard_bound = kDefaultGuardBound);
    static EvalContext torsion(Rational q1, Rational q2, int a, int b,
                               Rational lambda = Rational(1),
                               int guard_bound = kDefaultGuardBound);

    const Rational& q1() const { return q1_; }
    const Rational& q2() const { return q2_; }
    const Rational& lambda() const { return lambda_; }
    bool is_torsion() const { return torsion_.has_value(); }
    const std::optional<Torsion>& torsion_pair() const { return torsion_; }
    int guard_bound() const { return guard_bound_; }

    static constexpr int kDefaultGuardBound = 12;

private:
    EvalContext(Rational q1, Rational q2, Rational lambda, std::optional<Torsion> t,
                int guard_bound);

    Rational q1_;
    Rational q2_;
    Rational lambda_;
    std::optional<Torsion> torsion_;
    int guard_bound_;
};

// Re-checks the context invariants; throws GenericityViolation with the
// witness pair (a, b) on failure. Both factory functions call this, so a
// constructed context is always validated.
void ctx_validate(const EvalContext& ctx);

}  // namespace qshuffle
