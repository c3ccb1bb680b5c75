#pragma once

#include "bordism/borel_series.hpp"
#include "bordism/context.hpp"
#include "bordism/fixedring.hpp"

#include <random>

namespace bordism::testing {

inline MuElement m(int i, int pow = 1) { return MuElement::generator(i, static_cast<unsigned>(pow)); }
inline MuElement q(long num, long den = 1) { return MuElement::from_rational(Rational(num, den)); }

inline CMonomial cmono(std::vector<int> e) { return CMonomial{std::move(e)}; }

inline Weight w(std::vector<int> mu) { return Weight(std::move(mu)); }

// random elements for property tests (fixed seeds at the call sites)
inline MuElement random_mu(std::mt19937_64& rng, int max_half_degree) {
    std::uniform_int_distribution<int> nterms(1, 3), coef(-6, 6), gen(1, std::max(1, max_half_degree));
    MuElement x;
    for (int t = nterms(rng); t > 0; --t) {
        int g = gen(rng);
        x += MuElement::generator(g).scaled(coef(rng));
        if (coef(rng) > 3) x += MuElement::one().scaled(coef(rng));
    }
    return x;
}

inline Weight random_weight(std::mt19937_64& rng, int rank, int max_abs) {
    std::uniform_int_distribution<int> entry(-max_abs, max_abs);
    while (true) {
        std::vector<int> mu(static_cast<std::size_t>(rank));
        for (auto& x : mu) x = entry(rng);
        bool zero = true;
        for (int x : mu) zero &= (x == 0);
        if (!zero) return Weight(std::move(mu));
    }
}

inline FixedDatum random_fixed(const ContextPtr& ctx, std::mt19937_64& rng, int rank, int max_terms = 6) {
    std::uniform_int_distribution<int> nterms(1, max_terms), eexp(-2, 2), level(2, 5), coef(-5, 5), pick(0, 2);
    FixedDatum x(ctx);
    for (int t = nterms(rng); t > 0; --t) {
        FixedMonomial mono;
        if (pick(rng) != 0) mono = mono * FixedMonomial::e(random_weight(rng, rank, 3), eexp(rng));
        if (pick(rng) != 0) mono = mono * FixedMonomial::y(random_weight(rng, rank, 3), level(rng));
        int c = coef(rng);
        if (c == 0) c = 1;
        x.add_term(mono, MuElement::from_rational(c));
    }
    return x;
}

} // namespace bordism::testing
