#pragma once

#include "bordism/context.hpp"
#include "bordism/mu.hpp"
#include "bordism/weight.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace bordism {

/// Monomial of MU_*[e_V, e_V^{-1}, Y_{V,d}]: e-exponents per weight (any
/// integer) and Y-exponents per (weight, level d >= 2). e_V has degree -2,
/// Y_{V,d} degree 2d.
struct FixedMonomial {
    std::map<Weight, int> e_exp;                  // nonzero entries only
    std::map<std::pair<Weight, int>, int> y_exp;  // (V, d) -> multiplicity >= 1

    static FixedMonomial one() { return {}; }
    static FixedMonomial e(const Weight& v, int exp = 1);
    static FixedMonomial y(const Weight& v, int level, int exp = 1);

    void normalize();
    bool is_one() const { return e_exp.empty() && y_exp.empty(); }
    int degree() const;
    int rank() const; // 0 when the monomial is 1

    FixedMonomial operator*(const FixedMonomial& o) const;
    auto operator<=>(const FixedMonomial& o) const = default;

    std::string str() const;
};

/// Element of MU_*[e_V, e_V^{-1}, Y_{V,d}]: sparse MuElement-linear
/// combination of FixedMonomials, tied to a coefficient ring context.
class FixedDatum {
  public:
    explicit FixedDatum(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    FixedDatum(ContextPtr ctx, const MuElement& c);

    static FixedDatum monomial(ContextPtr ctx, const FixedMonomial& m, const MuElement& c = MuElement::one());

    const ContextPtr& context() const { return ctx_; }
    const std::map<FixedMonomial, MuElement>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const FixedMonomial& m, const MuElement& c);

    FixedDatum operator+(const FixedDatum& o) const;
    FixedDatum operator-(const FixedDatum& o) const;
    FixedDatum operator-() const;
    FixedDatum operator*(const FixedDatum& o) const;
    FixedDatum scaled(const MuElement& c) const;
    bool operator==(const FixedDatum& o) const { return terms_ == o.terms_; }

    /// every monomial has e-exponents <= 0 (membership in the cone Gamma_*)
    bool in_cone() const;

    /// total degree if homogeneous; zero element counts as homogeneous
    std::optional<int> degree() const;
    bool is_homogeneous(int n) const;
    /// split into homogeneous components by total degree
    std::map<int, FixedDatum> components() const;

    /// common rank of the weights (0 if no weights appear)
    int rank() const;

    std::string str() const;

  private:
    ContextPtr ctx_;
    std::map<FixedMonomial, MuElement> terms_;
};

/// The involution iota: fixes e_V^{+-1}, acts on Y_{V,d} through the Hopf
/// antipode recursion chi(b_0) = 1, sum_{i<=n} chi(b_i) b_{n-i} = 0, with the
/// antipode monomial b_{k_1}...b_{k_m} read as e_V^{m-1} Y_{V,k_1+1}...Y_{V,k_m+1}.
FixedDatum antipode(const FixedDatum& x);

} // namespace bordism
