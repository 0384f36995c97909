#include "qshuffle/random.hpp"

#include <algorithm>

namespace qshuffle {

LaurentPoly random_univariate(Rng& rng, int lo_deg, int hi_deg) {
    LaurentPoly f(1);
    while (f.is_zero()) {
        for (int e = lo_deg; e <= hi_deg; ++e) {
            int c = rng.uniform(-3, 3);
            if (c != 0) f.add_term({e}, ParamRat(Rational(c)));
        }
    }
    return f;
}

LaurentPoly random_sparse_symmetric(int arity, Rng& rng) {
    LaurentPoly f(arity);
    for (int piece = 0; piece < 2 || f.is_zero(); ++piece) {
        int distinct = arity >= 3 ? rng.uniform(2, 3) : rng.uniform(1, std::max(1, arity));
        // Distinct exponent values in [-2, 3].
        std::vector<int> values;
        while (static_cast<int>(values.size()) < distinct) {
            int v = rng.uniform(-2, 3);
            if (std::find(values.begin(), values.end(), v) == values.end())
                values.push_back(v);
        }
        // Random composition of the arity into `distinct` positive parts.
        std::vector<int> mult(distinct, 1);
        for (int extra = arity - distinct; extra > 0; --extra)
            mult[rng.uniform(0, distinct - 1)] += 1;
        LaurentPoly::Exp e;
        for (int i = 0; i < distinct; ++i) e.insert(e.end(), mult[i], values[i]);
        int coeff = rng.nonzero_uniform(-9, 9);
        f += LaurentPoly::symmetrized_monomial(arity, e, ParamRat(Rational(coeff)));
    }
    return f;
}

}  // namespace qshuffle
