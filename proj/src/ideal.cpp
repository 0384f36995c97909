#include "qshuffle/ideal.hpp"

#include "qshuffle/linalg.hpp"

namespace qshuffle {

Rational master_summand(int c, const Point& p, const EvalContext& ctx) {
    const int n = p.arity();
    if (c < 0 || c >= n) throw ArityMismatch("master_summand: index out of range");
    p.require_distinct();
    Rational acc = p[c] - ctx.lambda();
    for (int i = 0; i < n; ++i) {
        if (i == c) continue;
        Rational d = p[c] - p[i];
        acc *= (p[c] - ctx.q1() * p[i]) * (p[c] - ctx.q2() * p[i]) / (d * d);
    }
    return acc;
}

bool is_common_zero(const GridSubset& s, const EvalContext& ctx) {
    Point p = subset_to_point(s, ctx);
    for (int c = 0; c < p.arity(); ++c)
        if (!master_summand(c, p, ctx).is_zero()) return false;
    return true;
}

std::vector<RelationVector> first_order_relations(const GridSubset& s) {
    if (!s.is_admissible())
        throw NotAdmissible("first_order_relations: subset is not a common zero");
    std::vector<RelationVector> out;
    for (const auto& x : s.both_parent_vertices()) {
        RelationVector v;
        // Depth-first multiplicative propagation through single-parent
        // chains. A vertex outside X has exactly one present parent, so each
        // vertex is reached along at most one chain.
        std::vector<std::pair<GridVertex, ParamRat>> stack{{x, ParamRat(1)}};
        while (!stack.empty()) {
            auto [u, coeff] = stack.back();
            stack.pop_back();
            v[s.index_of(u)] = coeff;
            for (int dir = 0; dir < 2; ++dir) {
                GridVertex child = dir == 0 ? u.left_child() : u.right_child();
                if (!s.contains(child) || s.present_parent_count(child) == 2) continue;
                ParamRat step = dir == 0 ? ParamRat::q1() : ParamRat::q2();
                stack.emplace_back(child, coeff * step);
            }
        }
        out.push_back(std::move(v));
    }
    return out;
}

namespace {

ParamRat dot(const RelationVector& v, const RelationVector& w) {
    ParamRat acc(0);
    for (const auto& [i, c] : v) {
        auto it = w.find(i);
        if (it != w.end()) acc += c * it->second;
    }
    return acc;
}

}  // namespace

std::vector<SecondOrderRelation> second_order_relations(const GridSubset& s) {
    std::vector<RelationVector> firsts = first_order_relations(s);
    const int k = static_cast<int>(firsts.size());
    std::vector<SecondOrderRelation> out;
    if (k < 2) return out;

    // Gradients of the two vanishing kernel factors at each X vertex:
    // phi1 = z_x - q1 z_{(a-1,b)}, phi2 = z_x - q2 z_{(a,b-1)}.
    auto xs = s.both_parent_vertices();
    std::vector<RelationVector> grad1(k), grad2(k);
    for (int c = 0; c < k; ++c) {
        int ix = s.index_of(xs[c]);
        grad1[c][ix] = ParamRat(1);
        grad1[c][s.index_of({xs[c].a - 1, xs[c].b})] = -ParamRat::q1();
        grad2[c][ix] = ParamRat(1);
        grad2[c][s.index_of({xs[c].a, xs[c].b - 1})] = -ParamRat::q2();
    }

    // Unknowns: alpha over pairs (x <= y) of first-order vectors; the
    // candidate matrix is M = sum alpha_xy Sym(v^x (x) v^y). Constraint per X
    // vertex c: (grad phi1_c)^T M (grad phi2_c) = 0.
    std::vector<std::pair<int, int>> pairs;
    for (int x = 0; x < k; ++x)
        for (int y = x; y < k; ++y) pairs.emplace_back(x, y);

    Matrix<ParamRat> constraints(k, std::vector<ParamRat>(pairs.size(), ParamRat(0)));
    for (int c = 0; c < k; ++c) {
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            auto [x, y] = pairs[pi];
            ParamRat g = dot(grad1[c], firsts[x]) * dot(grad2[c], firsts[y]);
            if (x != y) g += dot(grad1[c], firsts[y]) * dot(grad2[c], firsts[x]);
            constraints[c][pi] = g;
        }
    }

    for (const auto& alpha : null_space(std::move(constraints))) {
        // Assemble the full symmetric matrix M, then store the functional
        // sum_{i<=j} coeff * d2L/dz_i dz_j (coeff_ii = M_ii, coeff_ij =
        // 2 M_ij off the diagonal).
        std::map<std::pair<int, int>, ParamRat> full;
        for (size_t pi = 0; pi < pairs.size(); ++pi) {
            if (alpha[pi].is_zero()) continue;
            auto [x, y] = pairs[pi];
            for (const auto& [i, vi] : firsts[x])
                for (const auto& [j, wj] : firsts[y]) {
                    full[{i, j}] += alpha[pi] * vi * wj;
                    if (x != y) full[{j, i}] += alpha[pi] * vi * wj;
                }
        }
        SecondOrderRelation rel;
        for (const auto& [ij, c] : full) {
            auto [i, j] = ij;
            if (i > j) continue;
            ParamRat v = i == j ? c : c + c;
            if (!v.is_zero()) rel.entries[ij] = v;
        }
        if (rel.entries.empty()) continue;
        ParamRat lead = rel.entries.begin()->second;
        for (auto& [ij, c] : rel.entries) c /= lead;
        out.push_back(std::move(rel));
    }
    return out;
}

MultiplicityReport verify_multiplicity(const GridSubset& s, const EvalContext& ctx,
                                       int samples, std::uint64_t seed) {
    if (!s.is_admissible())
        throw NotAdmissible("verify_multiplicity: subset is not a common zero");
    const int n = s.size();
    Point p = subset_to_point(s, ctx);
    auto firsts = first_order_relations(s);
    auto seconds = second_order_relations(s);
    const int k = static_cast<int>(firsts.size());

    MultiplicityReport report;
    report.k = k;
    report.samples = samples;
    report.seed = seed;
    mpz_ui_pow_ui(report.expected.get_mpz_t(), 2, static_cast<unsigned long>(k));

    std::vector<MultiplicityCondition> conditions;
    conditions.push_back({"value", true});
    for (int i = 0; i < k; ++i)
        conditions.push_back({"first-order[" + std::to_string(i) + "]", true});
    for (size_t i = 0; i < seconds.size(); ++i)
        conditions.push_back({"second-order[" + std::to_string(i) + "]", true});

    Rng rng(seed);
    for (int sample = 0; sample < samples; ++sample) {
        SElement f = SElement::from_numerator_unchecked(random_sparse_symmetric(n - 1, rng));
        auto witness = [&](const std::string& cond) {
            return "multiplicity condition '" + cond + "' failed at sample " +
                   std::to_string(sample) + " (seed " + std::to_string(seed) + ")";
        };

        bool value_checked = false;
        for (int r = 0; r < k; ++r) {
            Rational acc(0);
            // One jet evaluation covers two gradient entries (and the value).
            std::vector<std::pair<int, Rational>> entries;
            for (const auto& [i, c] : firsts[r]) entries.emplace_back(i, param_eval(c, ctx));
            for (size_t e = 0; e < entries.size(); e += 2) {
                int ia = entries[e].first;
                int ib = e + 1 < entries.size() ? entries[e + 1].first : ia;
                GeneratorJet jet = eval_generator_jet(f, p, ctx, ia, ib);
                if (!value_checked) {
                    if (!jet.value.is_zero()) throw ConditionFailure(witness("value"));
                    value_checked = true;
                }
                acc += entries[e].second * jet.da;
                if (e + 1 < entries.size()) acc += entries[e + 1].second * jet.db;
            }
            if (!acc.is_zero()) throw ConditionFailure(witness(conditions[1 + r].id));
        }
        if (!value_checked && !eval_generator(f, p, ctx).is_zero())
            throw ConditionFailure(witness("value"));

        for (size_t t = 0; t < seconds.size(); ++t) {
            Rational acc(0);
            for (const auto& [ij, c] : seconds[t].entries) {
                GeneratorJet jet = eval_generator_jet(f, p, ctx, ij.first, ij.second);
                acc += param_eval(c, ctx) * jet.dab;
            }
            if (!acc.is_zero()) throw ConditionFailure(witness(conditions[1 + k + t].id));
        }
    }

    report.conditions = std::move(conditions);
    report.conditions_verified = 1 + k + static_cast<int>(seconds.size());
    report.matches_expected =
        Integer(report.conditions_verified) == report.expected;
    return report;
}

bool torsion_vanishing_smoke(const EvalContext& ctx, const std::vector<Rational>& alphas,
                             int triples, std::uint64_t seed) {
    if (!ctx.is_torsion() || ctx.torsion_pair()->a != 2 || ctx.torsion_pair()->b != 1)
        throw GenericityViolation("torsion_vanishing_smoke: requires torsion(2,1)", 2, 1);
    Rng rng(seed);
    for (int t = 0; t < triples; ++t) {
        SElement f1 = SElement::univariate(random_univariate(rng));
        SElement f2 = SElement::univariate(random_univariate(rng));
        SElement f3 = SElement::univariate(random_univariate(rng));
        SElement prod = shuffle_product(shuffle_product(f1, f2), f3);
        for (const auto& alpha : alphas) {
            if (alpha.is_zero()) throw ZeroCoordinate("torsion smoke: alpha must be nonzero");
            Point p({alpha, ctx.q1() * alpha, ctx.q1() * ctx.q2() * alpha});
            if (!eval_element(prod, p, ctx).is_zero()) return false;
        }
    }
    return true;
}

}  // namespace qshuffle
