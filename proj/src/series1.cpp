#include "bordism/series1.hpp"

#include "bordism/errors.hpp"

#include <algorithm>
#include <sstream>

namespace bordism {

PowerSeries1 PowerSeries1::truncated(int T) const {
    PowerSeries1 r(T);
    int n = std::min(T, truncation());
    for (int k = 0; k <= n; ++k) r.coeffs_[k] = coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::operator+(const PowerSeries1& o) const {
    int T = std::min(truncation(), o.truncation());
    PowerSeries1 r(T);
    for (int k = 0; k <= T; ++k) r.coeffs_[k] = coeffs_[k] + o.coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::operator-(const PowerSeries1& o) const {
    int T = std::min(truncation(), o.truncation());
    PowerSeries1 r(T);
    for (int k = 0; k <= T; ++k) r.coeffs_[k] = coeffs_[k] - o.coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::operator-() const {
    PowerSeries1 r(truncation());
    for (int k = 0; k <= truncation(); ++k) r.coeffs_[k] = -coeffs_[k];
    return r;
}

PowerSeries1 PowerSeries1::scaled(const Rational& q) const {
    PowerSeries1 r(truncation());
    for (int k = 0; k <= truncation(); ++k) r.coeffs_[k] = coeffs_[k].scaled(q);
    return r;
}

PowerSeries1 PowerSeries1::mul(const PowerSeries1& a, const PowerSeries1& b, int cap) {
    int T = std::min(a.truncation(), b.truncation());
    PowerSeries1 r(T);
    for (int i = 0; i <= T; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (int j = 0; i + j <= T; ++j) {
            if (b.coeffs_[j].is_zero()) continue;
            r.coeffs_[i + j] += MuElement::mul(a.coeffs_[i], b.coeffs_[j], cap);
        }
    }
    return r;
}

PowerSeries1 PowerSeries1::compose(const PowerSeries1& a, const PowerSeries1& b, int cap) {
    if (!b.coeffs_[0].is_zero())
        throw PreconditionError("compose: inner series has nonzero constant term");
    int T = b.truncation();
    // Horner over the available coefficients of a
    int K = std::min(a.truncation(), T);
    PowerSeries1 r(T);
    r.coeffs_[0] = a.coeffs_[K];
    for (int k = K - 1; k >= 0; --k) {
        r = mul(r, b, cap);
        r.coeffs_[0] += a.coeffs_[k];
    }
    return r;
}

PowerSeries1 PowerSeries1::reciprocal(const PowerSeries1& a, int cap) {
    if (!(a.coeffs_[0] == MuElement::one()))
        throw PreconditionError("reciprocal: constant term must be 1");
    int T = a.truncation();
    PowerSeries1 r(T);
    r.coeffs_[0] = MuElement::one();
    for (int n = 1; n <= T; ++n) {
        MuElement s;
        for (int k = 1; k <= n; ++k)
            s += MuElement::mul(a.coeffs_[k], r.coeffs_[n - k], cap);
        r.coeffs_[n] = -s;
    }
    return r;
}

PowerSeries1 PowerSeries1::reversion(const PowerSeries1& a, int cap) {
    if (!a.coeffs_[0].is_zero() || !(a.coeffs_[1] == MuElement::one()))
        throw PreconditionError("reversion: series must be x + O(x^2)");
    int T = a.truncation();
    // e <- e - (a(e) - x); gains one correct degree per round
    PowerSeries1 e = PowerSeries1::x(T);
    for (int round = 0; round < T; ++round) {
        PowerSeries1 err = compose(a, e, cap) - PowerSeries1::x(T);
        bool zero = true;
        for (const auto& c : err.coeffs())
            if (!c.is_zero()) { zero = false; break; }
        if (zero) break;
        e = e - err;
    }
    return e;
}

PowerSeries1 PowerSeries1::derivative() const {
    int T = truncation();
    PowerSeries1 r(std::max(T - 1, 0));
    for (int k = 1; k <= T; ++k) r.coeff(k - 1) = coeffs_[k].scaled(k);
    return r;
}

std::string PowerSeries1::str(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (int k = 0; k <= truncation(); ++k) {
        if (coeffs_[k].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        os << "(" << coeffs_[k].str() << ")";
        if (k == 1) os << "*" << var;
        else if (k > 1) os << "*" << var << "^" << k;
    }
    if (first) os << "0";
    os << " + O(" << var << "^" << truncation() + 1 << ")";
    return os.str();
}

} // namespace bordism
