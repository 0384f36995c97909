#include "qshuffle/eval_context.hpp"

#include <string>

namespace qshuffle {

EvalContext::EvalContext(Rational q1, Rational q2, Rational lambda,
                         std::optional<Torsion> t, int guard_bound)
    : q1_(std::move(q1)),
      q2_(std::move(q2)),
      lambda_(std::move(lambda)),
      torsion_(t),
      guard_bound_(guard_bound) {
    if (q1_.is_zero() || q2_.is_zero()) throw ZeroCoordinate("EvalContext: q1, q2 must be nonzero");
    if (lambda_.is_zero()) throw ZeroCoordinate("EvalContext: lambda must be nonzero");
}

EvalContext EvalContext::generic(Rational q1, Rational q2, Rational lambda, int guard_bound) {
    EvalContext ctx(std::move(q1), std::move(q2), std::move(lambda), std::nullopt, guard_bound);
    ctx_validate(ctx);
    return ctx;
}

EvalContext EvalContext::torsion(Rational q1, Rational q2, int a, int b, Rational lambda,
                                 int guard_bound) {
    EvalContext ctx(std::move(q1), std::move(q2), std::move(lambda), Torsion{a, b}, guard_bound);
    ctx_validate(ctx);
    return ctx;
}

void ctx_validate(const EvalContext& ctx) {
    const int bound = ctx.guard_bound();
    // Scan pairs in increasing (a+b, a) order so the reported witness is the
    // minimal violating pair.
    for (int s = 2; s <= 2 * bound; ++s) {
        for (int a = std::max(1, s - bound); a <= std::min(bound, s - 1); ++a) {
            int b = s - a;
            bool unit = (ctx.q1().pow(a) * ctx.q2().pow(b)).is_one();
            if (ctx.is_torsion()) {
                const auto& t = *ctx.torsion_pair();
                if (a == t.a && b == t.b) {
                    if (!unit)
                        throw GenericityViolation(
                            "torsion(" + std::to_string(a) + "," + std::to_string(b) +
                                "): q1^a*q2^b != 1",
                            a, b);
                    return;  // declared pair reached first => minimal
                }
                if (unit)
                    throw GenericityViolation(
                        "torsion pair not minimal: q1^" + std::to_string(a) + "*q2^" +
                            std::to_string(b) + " = 1",
                        a, b);
            } else if (unit) {
                throw GenericityViolation("generic context violated at (a,b)=(" +
                                              std::to_string(a) + "," + std::to_string(b) + ")",
                                          a, b);
            }
        }
    }
    if (ctx.is_torsion()) {
        const auto& t = *ctx.torsion_pair();
        throw GenericityViolation("torsion pair outside guard bound", t.a, t.b);
    }
}

}  // namespace qshuffle
