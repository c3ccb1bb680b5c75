#pragma once

#include "bordism/borel_series.hpp"
#include "bordism/series1.hpp"
#include "bordism/weight.hpp"

namespace bordism {

/// s(P) for a univariate series s over MuElement and a multivariate argument
/// with zero constant term. Coefficients of s beyond its truncation have
/// half-degree > N and vanish in the quotient ring, so the result is exact
/// at P's truncation.
BorelSeries compose(const PowerSeries1& s, const BorelSeries& P);

/// F(P, Q) = exp(log P + log Q); requires zero constant terms
BorelSeries fgl_add(const BorelSeries& P, const BorelSeries& Q);

/// the n-series [n]_F P = exp(n log P), n any integer
BorelSeries n_series(int n, const BorelSeries& P);

/// the formal inverse: F(P, formal_inverse(P)) = 0
BorelSeries formal_inverse(const BorelSeries& P);

/// Euler class e(V) = [mu_1]_F C_1 +_F ... +_F [mu_r]_F C_r of the character
/// named by w, as a series of truncation D. Rejects the zero weight.
BorelSeries euler_class(const ContextPtr& ctx, const Weight& w, int D);

} // namespace bordism
