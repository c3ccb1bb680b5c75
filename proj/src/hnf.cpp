#include "bordism/hnf.hpp"

#include <algorithm>
#include <cassert>

namespace bordism {

namespace {

int first_nonzero(const std::vector<mpz_class>& v) {
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return static_cast<int>(i);
    return -1;
}

} // namespace

bool HnfLattice::insert(std::vector<mpz_class> row) {
    assert(static_cast<int>(row.size()) == ncols_);
    std::vector<mpz_class> tr(static_cast<std::size_t>(ngen_) + 1, 0);
    tr.back() = 1;
    ++ngen_;
    // pad older transforms lazily: trans_ rows keep their original length;
    // combine() aligns sizes
    auto combine = [](std::vector<mpz_class>& a, const mpz_class& ca,
                      const std::vector<mpz_class>& b, const mpz_class& cb) {
        if (a.size() < b.size()) a.resize(b.size(), 0);
        for (std::size_t i = 0; i < a.size(); ++i) {
            a[i] *= ca;
            if (i < b.size()) a[i] += cb * b[i];
        }
    };

    int c;
    while ((c = first_nonzero(row)) >= 0) {
        // find existing row with this pivot
        auto it = std::lower_bound(pivots_.begin(), pivots_.end(), c);
        if (it == pivots_.end() || *it != c) {
            // new pivot; normalize sign
            std::size_t pos = static_cast<std::size_t>(it - pivots_.begin());
            if (row[static_cast<std::size_t>(c)] < 0) {
                for (auto& x : row) x = -x;
                for (auto& x : tr) x = -x;
            }
            rows_.insert(rows_.begin() + static_cast<long>(pos), std::move(row));
            trans_.insert(trans_.begin() + static_cast<long>(pos), std::move(tr));
            pivots_.insert(it, c);
            return true;
        }
        std::size_t i = static_cast<std::size_t>(it - pivots_.begin());
        mpz_class &h = rows_[i][static_cast<std::size_t>(c)], &a = row[static_cast<std::size_t>(c)];
        mpz_class g, s, t;
        mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), h.get_mpz_t(), a.get_mpz_t());
        mpz_class hq = h / g, aq = a / g;
        // (new basis row) = s*h_row + t*row ; (new candidate) = aq*h_row - hq*row
        std::vector<mpz_class> nb(static_cast<std::size_t>(ncols_)), nr(static_cast<std::size_t>(ncols_));
        for (int k = 0; k < ncols_; ++k) {
            std::size_t ku = static_cast<std::size_t>(k);
            nb[ku] = s * rows_[i][ku] + t * row[ku];
            nr[ku] = aq * rows_[i][ku] - hq * row[ku];
        }
        std::vector<mpz_class> ntb = trans_[i], ntr = trans_[i];
        combine(ntb, s, tr, t);
        combine(ntr, aq, tr, -hq);
        rows_[i] = std::move(nb);
        trans_[i] = std::move(ntb);
        row = std::move(nr);
        tr = std::move(ntr);
        assert(row[static_cast<std::size_t>(c)] == 0);
    }
    return false;
}

void HnfLattice::reduce() {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        for (std::size_t j = i + 1; j < rows_.size(); ++j) {
            std::size_t p = static_cast<std::size_t>(pivots_[j]);
            const mpz_class& piv = rows_[j][p];
            mpz_class q;
            mpz_fdiv_q(q.get_mpz_t(), rows_[i][p].get_mpz_t(), piv.get_mpz_t());
            if (q == 0) continue;
            for (int k = 0; k < ncols_; ++k)
                rows_[i][static_cast<std::size_t>(k)] -= q * rows_[j][static_cast<std::size_t>(k)];
            if (trans_[i].size() < trans_[j].size()) trans_[i].resize(trans_[j].size(), 0);
            for (std::size_t k = 0; k < trans_[j].size(); ++k) trans_[i][k] -= q * trans_[j][k];
        }
    }
}

std::optional<std::vector<mpz_class>> HnfLattice::row_coords(std::vector<mpz_class> v) const {
    std::vector<mpz_class> q(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = static_cast<std::size_t>(pivots_[i]);
        if (v[p] == 0) continue;
        const mpz_class& piv = rows_[i][p];
        if (v[p] % piv != 0) return std::nullopt;
        q[i] = v[p] / piv;
        for (int k = 0; k < ncols_; ++k)
            v[static_cast<std::size_t>(k)] -= q[i] * rows_[i][static_cast<std::size_t>(k)];
    }
    for (const auto& x : v)
        if (x != 0) return std::nullopt;
    return q;
}

bool HnfLattice::contains(const std::vector<mpz_class>& v) const {
    return row_coords(v).has_value();
}

std::optional<std::vector<mpz_class>> HnfLattice::coordinates(const std::vector<mpz_class>& v) const {
    auto q = row_coords(v);
    if (!q) return std::nullopt;
    std::vector<mpz_class> g(static_cast<std::size_t>(ngen_), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if ((*q)[i] == 0) continue;
        for (std::size_t k = 0; k < trans_[i].size(); ++k) g[k] += (*q)[i] * trans_[i][k];
    }
    return g;
}

std::optional<std::vector<mpq_class>> HnfLattice::rational_coordinates(const std::vector<mpq_class>& v) const {
    std::vector<mpq_class> w = v;
    std::vector<mpq_class> q(rows_.size(), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        std::size_t p = static_cast<std::size_t>(pivots_[i]);
        if (w[p] == 0) continue;
        q[i] = w[p] / mpq_class(rows_[i][p]);
        for (int k = 0; k < ncols_; ++k)
            w[static_cast<std::size_t>(k)] -= q[i] * mpq_class(rows_[i][static_cast<std::size_t>(k)]);
    }
    for (const auto& x : w)
        if (x != 0) return std::nullopt;
    std::vector<mpq_class> g(static_cast<std::size_t>(ngen_), 0);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (q[i] == 0) continue;
        for (std::size_t k = 0; k < trans_[i].size(); ++k) g[k] += q[i] * mpq_class(trans_[i][k]);
    }
    return g;
}

} // namespace bordism
