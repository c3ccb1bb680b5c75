#include "bordism/fgl.hpp"

#include "bordism/errors.hpp"

namespace bordism {

BorelSeries compose(const PowerSeries1& s, const BorelSeries& P) {
    if (!P.constant_term().is_zero())
        throw PreconditionError("compose: argument has nonzero constant term");
    int K = std::min(s.truncation(), P.truncation());
    BorelSeries r = BorelSeries::constant(P.context(), P.rank(), P.truncation(), s.coeff(K));
    for (int k = K - 1; k >= 0; --k) {
        r = BorelSeries::mul_serial(r, P).truncated(P.truncation());
        r.add_term(CMonomial{std::vector<int>(static_cast<std::size_t>(P.rank()), 0)}, s.coeff(k));
    }
    return r;
}

BorelSeries fgl_add(const BorelSeries& P, const BorelSeries& Q) {
    const auto& ctx = P.context();
    BorelSeries sum = compose(ctx->log_series(), P) + compose(ctx->log_series(), Q);
    return compose(ctx->exp_series(), sum);
}

BorelSeries n_series(int n, const BorelSeries& P) {
    const auto& ctx = P.context();
    BorelSeries l = compose(ctx->log_series(), P).scaled(Rational(n));
    return compose(ctx->exp_series(), l);
}

BorelSeries formal_inverse(const BorelSeries& P) {
    return n_series(-1, P);
}

BorelSeries euler_class(const ContextPtr& ctx, const Weight& w, int D) {
    if (w.is_zero() || w.rank() == 0)
        throw PreconditionError("euler_class: trivial character has e(V) = 0, excluded from S");
    int r = w.rank();
    BorelSeries acc = BorelSeries::zero(ctx, r, D);
    for (int i = 0; i < r; ++i) {
        if (w.mu[static_cast<std::size_t>(i)] == 0) continue;
        BorelSeries li = compose(ctx->log_series(), BorelSeries::variable(ctx, r, D, i + 1));
        acc = acc + li.scaled(Rational(w.mu[static_cast<std::size_t>(i)]));
    }
    return compose(ctx->exp_series(), acc);
}

} // namespace bordism
