#pragma once

#include "bordism/context.hpp"
#include "bordism/mu.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bordism {

/// Exponent vector of a monomial in C_1..C_r.
struct CMonomial {
    std::vector<int> exps;

    int total_degree() const {
        int d = 0;
        for (int e : exps) d += e;
        return d;
    }

    CMonomial operator*(const CMonomial& o) const {
        CMonomial r = *this;
        for (std::size_t i = 0; i < r.exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    auto operator<=>(const CMonomial& o) const = default;

    std::string str() const; // "C1^2*C2", "1"
};

/// Truncated element of MU^*[[C_1,...,C_r]]: sparse map from C-monomials of
/// total degree <= trunc to MuElement coefficients. The truncation is the
/// highest total degree whose coefficient is known; arithmetic propagates the
/// valuation-aware minimum.
class BorelSeries {
  public:
    BorelSeries(ContextPtr ctx, int rank, int trunc);

    static BorelSeries zero(ContextPtr ctx, int rank, int trunc) { return BorelSeries(ctx, rank, trunc); }
    static BorelSeries constant(ContextPtr ctx, int rank, int trunc, const MuElement& c);
    /// the variable C_i (1-based)
    static BorelSeries variable(ContextPtr ctx, int rank, int trunc, int i);

    int rank() const { return rank_; }
    int truncation() const { return trunc_; }
    const ContextPtr& context() const { return ctx_; }
    const std::map<CMonomial, MuElement>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    /// minimal total degree of the support; trunc+1 when zero
    int valuation() const;
    MuElement coeff(const CMonomial& m) const;
    MuElement constant_term() const;
    /// homogeneous part of total C-degree t
    BorelSeries component(int t) const;

    void add_term(const CMonomial& m, const MuElement& c);
    BorelSeries truncated(int T) const;

    BorelSeries operator+(const BorelSeries& o) const;
    BorelSeries operator-(const BorelSeries& o) const;
    BorelSeries operator-() const;
    BorelSeries scaled(const MuElement& c) const;
    BorelSeries scaled(const Rational& q) const;
    BorelSeries operator*(const BorelSeries& o) const;
    BorelSeries pow(int k) const;
    bool operator==(const BorelSeries& o) const; // same rank and terms; truncations must agree

    /// plain serial product kernel (reference implementation)
    static BorelSeries mul_serial(const BorelSeries& a, const BorelSeries& b);
    /// OpenMP product kernel; falls back to serial below a size threshold
    static BorelSeries mul_parallel(const BorelSeries& a, const BorelSeries& b);

    /// total homological degree 2k - 2t if every term agrees, nullopt otherwise;
    /// the zero series reports degree 0
    std::optional<int> homogeneous_degree() const;

    std::string str() const;

  private:
    void check_compatible(const BorelSeries& o) const;

    ContextPtr ctx_;
    int rank_;
    int trunc_;
    std::map<CMonomial, MuElement> terms_;
};

} // namespace bordism
