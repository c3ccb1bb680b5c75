#include "bordism/borel.hpp"

#include "bordism/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bordism {

int pole_order(const EulerDenominator& den) {
    int p = 0;
    for (const auto& [w, e] : den) p += e;
    return p;
}

LocalizedBorel::LocalizedBorel(BorelSeries n, EulerDenominator d) : num(std::move(n)), den(std::move(d)) {
    for (const auto& [w, e] : den) {
        if (w.is_zero()) throw PreconditionError("LocalizedBorel: zero weight in denominator");
        if (w.rank() != num.rank()) throw PreconditionError("LocalizedBorel: denominator rank mismatch");
        if (e < 1) throw PreconditionError("LocalizedBorel: denominator exponent must be >= 1");
    }
}

LocalizedBorel loc_divide(BorelSeries n, EulerDenominator den) {
    return LocalizedBorel(std::move(n), std::move(den));
}

BorelSeries denominator_series(const ContextPtr& ctx, int rank, const EulerDenominator& den, int T) {
    BorelSeries r = BorelSeries::constant(ctx, rank, T, MuElement::one());
    for (const auto& [w, e] : den) {
        BorelSeries ew = euler_class(ctx, w, T);
        for (int i = 0; i < e; ++i) r = (r * ew).truncated(T);
    }
    return r;
}

LocalizedBorel LocalizedBorel::operator+(const LocalizedBorel& o) const {
    if (rank() != o.rank()) throw PreconditionError("LocalizedBorel: rank mismatch");
    // common denominator: per-weight max exponent
    EulerDenominator common = den;
    for (const auto& [w, e] : o.den) {
        auto [it, inserted] = common.try_emplace(w, e);
        if (!inserted) it->second = std::max(it->second, e);
    }
    auto complement = [&](const EulerDenominator& mine) {
        EulerDenominator c;
        for (const auto& [w, e] : common) {
            auto it = mine.find(w);
            int have = it == mine.end() ? 0 : it->second;
            if (e - have > 0) c[w] = e - have;
        }
        return c;
    };
    const auto& ctx = num.context();
    EulerDenominator c1 = complement(den), c2 = complement(o.den);
    // materializing the complements deep enough keeps the effective precision
    // at min(eff1, eff2)
    BorelSeries n1 = num * denominator_series(ctx, rank(), c1, num.truncation() + pole_order(c1));
    BorelSeries n2 = o.num * denominator_series(ctx, rank(), c2, o.num.truncation() + pole_order(c2));
    return LocalizedBorel(n1 + n2, std::move(common));
}

LocalizedBorel LocalizedBorel::operator*(const LocalizedBorel& o) const {
    if (rank() != o.rank()) throw PreconditionError("LocalizedBorel: rank mismatch");
    EulerDenominator d = den;
    for (const auto& [w, e] : o.den) d[w] += e;
    return LocalizedBorel(num * o.num, std::move(d));
}

LocalizedBorel LocalizedBorel::scaled(const MuElement& c) const {
    return LocalizedBorel(num.scaled(c), den);
}

std::string LocalizedBorel::str() const {
    std::ostringstream os;
    os << "[" << num.str() << "]";
    if (!den.empty()) {
        os << " / ";
        bool first = true;
        for (const auto& [w, e] : den) {
            if (!first) os << "*";
            first = false;
            os << "e" << w.str();
            if (e > 1) os << "^" << e;
        }
    }
    return os.str();
}

std::string Obstruction::str() const {
    std::ostringstream os;
    switch (kind) {
        case ObstructionKind::Pole: os << "pole"; break;
        case ObstructionKind::Rational: os << "rational"; break;
        case ObstructionKind::Lattice: os << "lattice"; break;
    }
    os << " obstruction at C-degree " << degree << ", monomial " << where.str() << ", value " << value.str();
    return os.str();
}

namespace {

std::vector<CMonomial> monomials_of_degree(int rank, int degree) {
    std::vector<CMonomial> out;
    CMonomial m{std::vector<int>(static_cast<std::size_t>(rank), 0)};
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == rank - 1) {
            m.exps[static_cast<std::size_t>(pos)] = rem;
            out.push_back(m);
            return;
        }
        for (int e = 0; e <= rem; ++e) {
            m.exps[static_cast<std::size_t>(pos)] = e;
            rec(pos + 1, rem - e);
        }
        m.exps[static_cast<std::size_t>(pos)] = 0;
    };
    rec(0, degree);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

IntegralizeResult try_integralize(const LocalizedBorel& x) {
    const auto& ctx = x.num.context();
    int rank = x.rank();
    int P = pole_order(x.den);
    int T = x.num.truncation();
    int eff = T - P;
    if (eff < 0)
        throw PrecisionError("try_integralize: effective precision " + std::to_string(eff) +
                                 " < 0; raise the numerator truncation to at least " + std::to_string(P),
                             P);

    BorelSeries den = denominator_series(ctx, rank, x.den, T);
    BorelSeries den_lead = den.component(P); // leading form: integer coefficients, no poles beyond P
    BorelSeries residual = x.num;
    BorelSeries g = BorelSeries::zero(ctx, rank, eff);

    for (int s = 0; s <= T; ++s) {
        BorelSeries rhs = residual.component(s);
        if (s < P) {
            if (!rhs.is_zero()) {
                const auto& [m, c] = *rhs.terms().begin();
                return {std::nullopt, Obstruction{ObstructionKind::Pole, s, m, c}, eff};
            }
            continue;
        }
        int u = s - P;
        auto rows = monomials_of_degree(rank, s);
        auto cols = monomials_of_degree(rank, u);
        std::map<CMonomial, int> row_index;
        for (std::size_t i = 0; i < rows.size(); ++i) row_index[rows[i]] = static_cast<int>(i);

        // matrix of multiplication by the leading form, columns = unknowns
        std::vector<std::vector<Rational>> M(rows.size(), std::vector<Rational>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j)
            for (const auto& [dm, dc] : den_lead.terms()) {
                if (!dc.is_rational_constant())
                    throw std::logic_error("try_integralize: leading denominator form is not scalar");
                M[static_cast<std::size_t>(row_index.at(cols[j] * dm))][j] = dc.constant();
            }

        std::vector<MuElement> b(rows.size());
        for (const auto& [m, c] : rhs.terms()) b[static_cast<std::size_t>(row_index.at(m))] = c;

        // exact Gaussian elimination; rhs entries live in the MU-module
        std::vector<int> perm(rows.size());
        for (std::size_t i = 0; i < perm.size(); ++i) perm[i] = static_cast<int>(i);
        std::size_t row = 0;
        std::vector<std::size_t> pivot_row(cols.size());
        for (std::size_t col = 0; col < cols.size(); ++col) {
            std::size_t sel = row;
            while (sel < rows.size() && M[sel][col] == 0) ++sel;
            if (sel == rows.size()) throw std::logic_error("try_integralize: leading form lost column rank");
            std::swap(M[sel], M[row]);
            std::swap(b[sel], b[row]);
            std::swap(perm[sel], perm[row]);
            Rational inv = 1 / M[row][col];
            for (std::size_t j = col; j < cols.size(); ++j) M[row][j] *= inv;
            b[row] = b[row].scaled(inv);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (i == row || M[i][col] == 0) continue;
                Rational f = M[i][col];
                for (std::size_t j = col; j < cols.size(); ++j) M[i][j] -= f * M[row][j];
                b[i] -= b[row].scaled(f);
            }
            pivot_row[col] = row;
            ++row;
        }
        // consistency: remaining rows must have zero rhs
        for (std::size_t i = row; i < rows.size(); ++i) {
            if (!b[i].is_zero())
                return {std::nullopt,
                        Obstruction{ObstructionKind::Rational, s, rows[static_cast<std::size_t>(perm[i])], b[i]}, eff};
        }
        // read off the solution, check lattice integrality
        BorelSeries gu = BorelSeries::zero(ctx, rank, eff);
        for (std::size_t col = 0; col < cols.size(); ++col) {
            const MuElement& val = b[pivot_row[col]];
            if (val.is_zero()) continue;
            if (!ctx->is_integral(val))
                return {std::nullopt, Obstruction{ObstructionKind::Lattice, u, cols[col], val}, eff};
            gu.add_term(cols[col], val);
        }
        if (!gu.is_zero()) {
            for (const auto& [m, c] : gu.terms()) g.add_term(m, c);
            residual = residual - BorelSeries::mul_serial(gu.truncated(eff), den).truncated(T);
        }
    }
    return {std::move(g), std::nullopt, eff};
}

BorelSeries cp_pushforward(const std::vector<BorelSeries>& xcoeffs, int n) {
    if (n < 0) throw PreconditionError("cp_pushforward: negative dimension");
    if (static_cast<int>(xcoeffs.size()) < n + 1)
        throw TruncationError("cp_pushforward: insufficient x-precision: need x-degree >= " + std::to_string(n));
    const auto& ctx = xcoeffs.front().context();
    BorelSeries r = BorelSeries::zero(ctx, xcoeffs.front().rank(), xcoeffs.front().truncation());
    for (int k = 0; k <= n; ++k) r = r + xcoeffs[static_cast<std::size_t>(k)].scaled(ctx->cp_class(n - k));
    return r;
}

} // namespace bordism
