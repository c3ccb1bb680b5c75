#pragma once

#include "bordism/mu.hpp"

#include <vector>

namespace bordism {

/// Univariate power series over MuElement, truncated at x^T (coefficients
/// 0..T inclusive). The truncation is part of the value; arithmetic never
/// reports coefficients beyond the minimum truncation of its inputs.
class PowerSeries1 {
  public:
    PowerSeries1() : coeffs_(1) {}
    explicit PowerSeries1(int T) : coeffs_(static_cast<std::size_t>(T) + 1) {}
    PowerSeries1(std::vector<MuElement> c) : coeffs_(std::move(c)) {}

    static PowerSeries1 x(int T) {
        PowerSeries1 s(T);
        if (T >= 1) s.coeffs_[1] = MuElement::one();
        return s;
    }

    int truncation() const { return static_cast<int>(coeffs_.size()) - 1; }
    const MuElement& coeff(int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
    MuElement& coeff(int k) { return coeffs_[static_cast<std::size_t>(k)]; }
    const std::vector<MuElement>& coeffs() const { return coeffs_; }

    PowerSeries1 truncated(int T) const;

    PowerSeries1 operator+(const PowerSeries1& o) const;
    PowerSeries1 operator-(const PowerSeries1& o) const;
    PowerSeries1 operator-() const;
    PowerSeries1 scaled(const Rational& q) const;
    bool operator==(const PowerSeries1& o) const { return coeffs_ == o.coeffs_; }

    /// product; coefficient products are capped at half-degree `cap`
    static PowerSeries1 mul(const PowerSeries1& a, const PowerSeries1& b, int cap);
    /// substitution a(b(x)); requires b(0) = 0
    static PowerSeries1 compose(const PowerSeries1& a, const PowerSeries1& b, int cap);
    /// multiplicative inverse; requires unit constant term 1
    static PowerSeries1 reciprocal(const PowerSeries1& a, int cap);
    /// compositional inverse; requires zero constant term and linear term 1
    static PowerSeries1 reversion(const PowerSeries1& a, int cap);

    PowerSeries1 derivative() const;

    std::string str(const std::string& var = "x") const;

  private:
    std::vector<MuElement> coeffs_;
};

} // namespace bordism
