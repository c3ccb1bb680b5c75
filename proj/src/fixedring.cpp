#include "bordism/fixedring.hpp"

#include "bordism/errors.hpp"

#include <mutex>
#include <sstream>
#include <vector>

namespace bordism {

FixedMonomial FixedMonomial::e(const Weight& v, int exp) {
    if (v.is_zero()) throw PreconditionError("e_V: weight must be nonzero");
    FixedMonomial m;
    if (exp != 0) m.e_exp[v] = exp;
    return m;
}

FixedMonomial FixedMonomial::y(const Weight& v, int level, int exp) {
    if (v.is_zero()) throw PreconditionError("Y_{V,d}: weight must be nonzero");
    if (level < 2) throw PreconditionError("Y_{V,d}: level must satisfy d >= 2 (Y_{V,1} is e_V^{-1})");
    FixedMonomial m;
    if (exp != 0) m.y_exp[{v, level}] = exp;
    return m;
}

void FixedMonomial::normalize() {
    for (auto it = e_exp.begin(); it != e_exp.end();)
        it = it->second == 0 ? e_exp.erase(it) : std::next(it);
    for (auto it = y_exp.begin(); it != y_exp.end();)
        it = it->second == 0 ? y_exp.erase(it) : std::next(it);
}

int FixedMonomial::degree() const {
    int d = 0;
    for (const auto& [w, e] : e_exp) d += -2 * e;
    for (const auto& [vd, mult] : y_exp) d += 2 * vd.second * mult;
    return d;
}

int FixedMonomial::rank() const {
    if (!e_exp.empty()) return e_exp.begin()->first.rank();
    if (!y_exp.empty()) return y_exp.begin()->first.first.rank();
    return 0;
}

FixedMonomial FixedMonomial::operator*(const FixedMonomial& o) const {
    FixedMonomial r = *this;
    for (const auto& [w, e] : o.e_exp) r.e_exp[w] += e;
    for (const auto& [vd, m] : o.y_exp) r.y_exp[vd] += m;
    r.normalize();
    return r;
}

std::string FixedMonomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, e] : e_exp) {
        if (!first) os << "*";
        first = false;
        os << "e" << w.str();
        if (e != 1) os << "^" << e;
    }
    for (const auto& [vd, m] : y_exp) {
        if (!first) os << "*";
        first = false;
        os << "Y[" << vd.first.str() << "," << vd.second << "]";
        if (m != 1) os << "^" << m;
    }
    return os.str();
}

FixedDatum::FixedDatum(ContextPtr ctx, const MuElement& c) : ctx_(std::move(ctx)) {
    add_term(FixedMonomial::one(), c);
}

FixedDatum FixedDatum::monomial(ContextPtr ctx, const FixedMonomial& m, const MuElement& c) {
    FixedDatum d(std::move(ctx));
    d.add_term(m, c);
    return d;
}

void FixedDatum::add_term(const FixedMonomial& m, const MuElement& c) {
    if (c.is_zero()) return;
    int r = rank(), mr = m.rank();
    if (r != 0 && mr != 0 && r != mr) throw PreconditionError("FixedDatum: weight rank mismatch");
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FixedDatum FixedDatum::operator+(const FixedDatum& o) const {
    FixedDatum r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

FixedDatum FixedDatum::operator-(const FixedDatum& o) const {
    FixedDatum r = *this;
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

FixedDatum FixedDatum::operator-() const {
    FixedDatum r(ctx_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

FixedDatum FixedDatum::operator*(const FixedDatum& o) const {
    FixedDatum r(ctx_);
    int cap = ctx_->truncation();
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) {
            MuElement c = MuElement::mul(ca, cb, cap);
            if (!c.is_zero()) r.add_term(ma * mb, c);
        }
    return r;
}

FixedDatum FixedDatum::scaled(const MuElement& c) const {
    FixedDatum r(ctx_);
    int cap = ctx_->truncation();
    for (const auto& [m, x] : terms_) {
        MuElement y = MuElement::mul(x, c, cap);
        if (!y.is_zero()) r.terms_[m] = std::move(y);
    }
    return r;
}

bool FixedDatum::in_cone() const {
    for (const auto& [m, c] : terms_)
        for (const auto& [w, e] : m.e_exp)
            if (e > 0) return false;
    return true;
}

std::optional<int> FixedDatum::degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        auto k = c.homogeneous_half_degree();
        if (!k) return std::nullopt;
        int d = m.degree() + 2 * *k;
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

bool FixedDatum::is_homogeneous(int n) const {
    auto d = degree();
    return d && (is_zero() || *d == n);
}

std::map<int, FixedDatum> FixedDatum::components() const {
    std::map<int, FixedDatum> out;
    for (const auto& [m, c] : terms_) {
        int md = m.degree();
        for (const auto& [k, comp] : c.components()) {
            auto it = out.find(md + 2 * k);
            if (it == out.end()) it = out.emplace(md + 2 * k, FixedDatum(ctx_)).first;
            it->second.add_term(m, comp);
        }
    }
    return out;
}

int FixedDatum::rank() const {
    for (const auto& [m, c] : terms_) {
        int r = m.rank();
        if (r != 0) return r;
    }
    return 0;
}

std::string FixedDatum::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (m.is_one()) os << "(" << c.str() << ")";
        else if (c == MuElement::one()) os << m.str();
        else os << "(" << c.str() << ")*" << m.str();
    }
    return os.str();
}

namespace {

// chi(b_n) in the abstract Hopf algebra Z[b_1, b_2, ...] with
// Delta b_n = sum b_i (x) b_{n-i}: map from partition (sorted parts) to
// integer coefficient. Table grows on demand, guarded for shared contexts.
using Partition = std::vector<int>;
using ChiPoly = std::map<Partition, Integer>;

const ChiPoly& chi_table(int n) {
    static std::vector<ChiPoly> table; // index n; chi(b_0) = 1 at index 0
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    if (table.empty()) table.push_back({{Partition{}, 1}});
    while (static_cast<int>(table.size()) <= n) {
        int m = static_cast<int>(table.size());
        // chi(b_m) = -b_m - sum_{i=1}^{m-1} chi(b_i) b_{m-i}
        ChiPoly p;
        p[{m}] = -1;
        for (int i = 1; i < m; ++i) {
            for (const auto& [part, c] : table[static_cast<std::size_t>(i)]) {
                Partition q = part;
                q.insert(std::lower_bound(q.begin(), q.end(), m - i), m - i);
                p[q] -= c;
            }
        }
        for (auto it = p.begin(); it != p.end();)
            it = it->second == 0 ? p.erase(it) : std::next(it);
        table.push_back(std::move(p));
    }
    return table[static_cast<std::size_t>(n)];
}

// iota on a single generator Y_{V,d}
FixedDatum antipode_y(const ContextPtr& ctx, const Weight& v, int d) {
    FixedDatum out(ctx);
    for (const auto& [part, c] : chi_table(d - 1)) {
        FixedMonomial m;
        int nparts = static_cast<int>(part.size());
        for (int k : part) m = m * FixedMonomial::y(v, k + 1);
        if (nparts != 1) m = m * FixedMonomial::e(v, nparts - 1);
        out.add_term(m, MuElement::from_rational(Rational(c)));
    }
    return out;
}

} // namespace

FixedDatum antipode(const FixedDatum& x) {
    const auto& ctx = x.context();
    FixedDatum out(ctx);
    for (const auto& [m, c] : x.terms()) {
        FixedDatum term(ctx, c);
        FixedMonomial epart;
        epart.e_exp = m.e_exp;
        term = term * FixedDatum::monomial(ctx, epart);
        for (const auto& [vd, mult] : m.y_exp) {
            FixedDatum img = antipode_y(ctx, vd.first, vd.second);
            for (int i = 0; i < mult; ++i) term = term * img;
        }
        out = out + term;
    }
    return out;
}

} // namespace bordism
