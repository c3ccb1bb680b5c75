#pragma once

#include "bordism/borel_series.hpp"
#include "bordism/fgl.hpp"
#include "bordism/weight.hpp"

#include <map>
#include <optional>
#include <string>

namespace bordism {

/// Formal denominator: a multiset of Euler classes of nonzero weights.
using EulerDenominator = std::map<Weight, int>; // weight -> exponent >= 1

int pole_order(const EulerDenominator& den);

/// An element of the localization S^{-1} MU^*[[C_1..C_r]] written as
/// numerator / prod e(V)^k. Effective precision = numerator truncation
/// minus total pole order; quotient coefficients are determined through it.
struct LocalizedBorel {
    BorelSeries num;
    EulerDenominator den;

    LocalizedBorel(BorelSeries n, EulerDenominator d);

    int rank() const { return num.rank(); }
    int effective_precision() const { return num.truncation() - pole_order(den); }

    LocalizedBorel operator+(const LocalizedBorel& o) const;
    LocalizedBorel operator*(const LocalizedBorel& o) const;
    LocalizedBorel scaled(const MuElement& c) const;

    std::string str() const;
};

/// n / prod e(V)^k as a localized element
LocalizedBorel loc_divide(BorelSeries n, EulerDenominator den);

/// materialize the denominator as a series of the given truncation
BorelSeries denominator_series(const ContextPtr& ctx, int rank, const EulerDenominator& den, int T);

enum class ObstructionKind { Pole, Rational, Lattice };

/// Re-checkable failure witness for try_integralize: at C-degree `degree`,
/// the monomial `where` carries the obstruction `value` (a residual that no
/// quotient can match, or a quotient coefficient outside the Lazard lattice).
struct Obstruction {
    ObstructionKind kind;
    int degree;
    CMonomial where;
    MuElement value;

    std::string str() const;
};

struct IntegralizeResult {
    std::optional<BorelSeries> series;   // quotient g, truncated at the effective precision
    std::optional<Obstruction> witness;  // set on failure
    int precision;                       // effective precision of the decision

    bool ok() const { return series.has_value(); }
};

/// Decide whether x = g / 1 for some g in MU^*[[C]] with lattice-integral
/// coefficients, by an exact linear solve ordered by total C-degree followed
/// by a coefficientwise lattice test. Throws PrecisionError if the effective
/// precision is negative.
IntegralizeResult try_integralize(const LocalizedBorel& x);

/// CP^n pushforward: for f = sum f_k x^k (coefficients f_k given up to
/// k = T >= n), returns sum_{k=0}^{n} f_k * [CP^{n-k}].
BorelSeries cp_pushforward(const std::vector<BorelSeries>& xcoeffs, int n);

} // namespace bordism
