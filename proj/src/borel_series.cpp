#include "bordism/borel_series.hpp"

#include "bordism/errors.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <sstream>

namespace bordism {

std::string CMonomial::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < exps.size(); ++i) {
        if (exps[i] == 0) continue;
        if (!first) os << "*";
        first = false;
        os << "C" << (i + 1);
        if (exps[i] > 1) os << "^" << exps[i];
    }
    if (first) os << "1";
    return os.str();
}

BorelSeries::BorelSeries(ContextPtr ctx, int rank, int trunc) : ctx_(std::move(ctx)), rank_(rank), trunc_(trunc) {
    if (rank_ < 1) throw PreconditionError("BorelSeries: rank must be >= 1");
    if (trunc_ < 0) throw PreconditionError("BorelSeries: negative truncation");
}

BorelSeries BorelSeries::constant(ContextPtr ctx, int rank, int trunc, const MuElement& c) {
    BorelSeries s(std::move(ctx), rank, trunc);
    s.add_term(CMonomial{std::vector<int>(static_cast<std::size_t>(rank), 0)}, c);
    return s;
}

BorelSeries BorelSeries::variable(ContextPtr ctx, int rank, int trunc, int i) {
    if (i < 1 || i > rank) throw PreconditionError("BorelSeries: variable index out of range");
    BorelSeries s(std::move(ctx), rank, trunc);
    CMonomial m{std::vector<int>(static_cast<std::size_t>(rank), 0)};
    m.exps[static_cast<std::size_t>(i - 1)] = 1;
    if (trunc >= 1) s.add_term(m, MuElement::one());
    return s;
}

int BorelSeries::valuation() const {
    int v = trunc_ + 1;
    for (const auto& [m, c] : terms_) v = std::min(v, m.total_degree());
    return v;
}

MuElement BorelSeries::coeff(const CMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? MuElement::zero() : it->second;
}

MuElement BorelSeries::constant_term() const {
    return coeff(CMonomial{std::vector<int>(static_cast<std::size_t>(rank_), 0)});
}

BorelSeries BorelSeries::component(int t) const {
    BorelSeries r(ctx_, rank_, trunc_);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() == t) r.terms_[m] = c;
    return r;
}

void BorelSeries::add_term(const CMonomial& m, const MuElement& c) {
    if (c.is_zero() || m.total_degree() > trunc_) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BorelSeries BorelSeries::truncated(int T) const {
    BorelSeries r(ctx_, rank_, T);
    for (const auto& [m, c] : terms_)
        if (m.total_degree() <= T) r.terms_[m] = c;
    return r;
}

void BorelSeries::check_compatible(const BorelSeries& o) const {
    if (rank_ != o.rank_) throw PreconditionError("BorelSeries: rank mismatch");
}

BorelSeries BorelSeries::operator+(const BorelSeries& o) const {
    check_compatible(o);
    BorelSeries r = truncated(std::min(trunc_, o.trunc_));
    for (const auto& [m, c] : o.terms_) r.add_term(m, c);
    return r;
}

BorelSeries BorelSeries::operator-(const BorelSeries& o) const {
    check_compatible(o);
    BorelSeries r = truncated(std::min(trunc_, o.trunc_));
    for (const auto& [m, c] : o.terms_) r.add_term(m, -c);
    return r;
}

BorelSeries BorelSeries::operator-() const {
    BorelSeries r(ctx_, rank_, trunc_);
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

BorelSeries BorelSeries::scaled(const MuElement& c) const {
    BorelSeries r(ctx_, rank_, trunc_);
    int cap = ctx_->truncation();
    for (const auto& [m, x] : terms_) {
        MuElement y = MuElement::mul(x, c, cap);
        if (!y.is_zero()) r.terms_[m] = std::move(y);
    }
    return r;
}

BorelSeries BorelSeries::scaled(const Rational& q) const {
    BorelSeries r(ctx_, rank_, trunc_);
    if (q == 0) return r;
    for (const auto& [m, x] : terms_) r.terms_[m] = x.scaled(q);
    return r;
}

BorelSeries BorelSeries::mul_serial(const BorelSeries& a, const BorelSeries& b) {
    a.check_compatible(b);
    int T = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
    BorelSeries r(a.ctx_, a.rank_, T);
    int cap = a.ctx_->truncation();
    for (const auto& [ma, ca] : a.terms_) {
        int da = ma.total_degree();
        for (const auto& [mb, cb] : b.terms_) {
            if (da + mb.total_degree() > T) continue;
            MuElement c = MuElement::mul(ca, cb, cap);
            if (!c.is_zero()) r.add_term(ma * mb, c);
        }
    }
    return r;
}

BorelSeries BorelSeries::mul_parallel(const BorelSeries& a, const BorelSeries& b) {
#ifdef _OPENMP
    constexpr std::size_t kPairThreshold = 4096;
    if (a.terms_.size() * b.terms_.size() < kPairThreshold) return mul_serial(a, b);
    a.check_compatible(b);
    int T = std::min(a.trunc_ + b.valuation(), b.trunc_ + a.valuation());
    BorelSeries r(a.ctx_, a.rank_, T);
    int cap = a.ctx_->truncation();

    std::vector<const std::pair<const CMonomial, MuElement>*> av;
    av.reserve(a.terms_.size());
    for (const auto& t : a.terms_) av.push_back(&t);

    int nthreads = omp_get_max_threads();
    std::vector<std::map<CMonomial, MuElement>> partial(static_cast<std::size_t>(nthreads));
#pragma omp parallel num_threads(nthreads)
    {
        auto& local = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 8)
        for (long i = 0; i < static_cast<long>(av.size()); ++i) {
            const auto& [ma, ca] = *av[static_cast<std::size_t>(i)];
            int da = ma.total_degree();
            for (const auto& [mb, cb] : b.terms_) {
                if (da + mb.total_degree() > T) continue;
                MuElement c = MuElement::mul(ca, cb, cap);
                if (c.is_zero()) continue;
                auto [it, inserted] = local.try_emplace(ma * mb, std::move(c));
                if (!inserted) it->second += c;
            }
        }
    }
    for (auto& local : partial)
        for (auto& [m, c] : local) r.add_term(m, c);
    return r;
#else
    return mul_serial(a, b);
#endif
}

BorelSeries BorelSeries::operator*(const BorelSeries& o) const { return mul_parallel(*this, o); }

BorelSeries BorelSeries::pow(int k) const {
    if (k < 0) throw PreconditionError("BorelSeries: negative power");
    BorelSeries r = constant(ctx_, rank_, trunc_, MuElement::one());
    for (int i = 0; i < k; ++i) r = r * *this;
    return r;
}

bool BorelSeries::operator==(const BorelSeries& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }

std::optional<int> BorelSeries::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        auto k = c.homogeneous_half_degree();
        if (!k) return std::nullopt;
        int d = 2 * *k - 2 * m.total_degree();
        if (!deg) deg = d;
        else if (*deg != d) return std::nullopt;
    }
    return deg ? deg : std::optional<int>(0);
}

std::string BorelSeries::str() const {
    if (terms_.empty()) return "0 + O(deg " + std::to_string(trunc_ + 1) + ")";
    // order by total degree, then lexicographically
    std::vector<const std::pair<const CMonomial, MuElement>*> v;
    v.reserve(terms_.size());
    for (const auto& t : terms_) v.push_back(&t);
    std::stable_sort(v.begin(), v.end(), [](auto* x, auto* y) {
        int dx = x->first.total_degree(), dy = y->first.total_degree();
        return dx != dy ? dx < dy : x->first < y->first;
    });
    std::ostringstream os;
    bool first = true;
    for (auto* t : v) {
        if (!first) os << " + ";
        first = false;
        os << "(" << t->second.str() << ")";
        if (t->first.total_degree() > 0) os << "*" << t->first.str();
    }
    os << " + O(deg " << trunc_ + 1 << ")";
    return os.str();
}

} // namespace bordism
