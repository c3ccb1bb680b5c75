#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bordism {

using Rational = mpq_class;
using Integer = mpz_class;

/// Monomial in the Mischenko generators m_1, m_2, ...; exps[i] is the
/// exponent of m_{i+1}. Normalized: no trailing zeros.
struct MuMonomial {
    std::vector<unsigned> exps;

    MuMonomial() = default;
    explicit MuMonomial(std::vector<unsigned> e) : exps(std::move(e)) { normalize(); }

    void normalize() {
        while (!exps.empty() && exps.back() == 0) exps.pop_back();
    }

    // half-degree: m_i contributes i per power
    int half_degree() const {
        long d = 0;
        for (std::size_t i = 0; i < exps.size(); ++i) d += static_cast<long>(i + 1) * exps[i];
        return static_cast<int>(d);
    }

    bool is_one() const { return exps.empty(); }

    MuMonomial operator*(const MuMonomial& o) const {
        MuMonomial r;
        r.exps.resize(std::max(exps.size(), o.exps.size()), 0);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += exps[i];
        for (std::size_t i = 0; i < o.exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }

    auto operator<=>(const MuMonomial& o) const = default;

    std::string str() const; // "m1*m2^3", "1" for the unit
};

/// Element of MU_* (x) Q in the Mischenko basis: sparse rational polynomial
/// in the m_i. Lives in the quotient by (half-degree > N); products are
/// formed through mul() which enforces the cap.
class MuElement {
  public:
    MuElement() = default;

    static MuElement zero() { return MuElement(); }
    static MuElement one() { return from_rational(1); }
    static MuElement from_rational(const Rational& q);
    /// the generator m_i (i >= 1)
    static MuElement generator(int i, unsigned power = 1);

    bool is_zero() const { return terms_.empty(); }
    bool is_rational_constant() const;
    /// constant (degree-0) part
    Rational constant() const;

    const std::map<MuMonomial, Rational>& terms() const { return terms_; }

    void add_term(const MuMonomial& m, const Rational& c);

    MuElement operator+(const MuElement& o) const;
    MuElement operator-(const MuElement& o) const;
    MuElement operator-() const;
    MuElement& operator+=(const MuElement& o);
    MuElement& operator-=(const MuElement& o);
    bool operator==(const MuElement& o) const { return terms_ == o.terms_; }

    MuElement scaled(const Rational& q) const;

    /// Product in the quotient ring: monomials of half-degree > cap are dropped.
    static MuElement mul(const MuElement& a, const MuElement& b, int cap);

    /// max half-degree of the support (0 for the zero element)
    int max_half_degree() const;
    /// half-degree if homogeneous (zero counts as homogeneous of any degree)
    std::optional<int> homogeneous_half_degree() const;
    /// split into homogeneous components keyed by half-degree
    std::map<int, MuElement> components() const;
    /// the component of the given half-degree
    MuElement component(int half_degree) const;

    std::string str() const;

  private:
    std::map<MuMonomial, Rational> terms_; // nonzero coefficients only
};

} // namespace bordism
