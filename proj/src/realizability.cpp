#include "bordism/realizability.hpp"

#include "bordism/errors.hpp"
#include "bordism/fgl.hpp"

#include <map>
#include <sstream>

namespace bordism {

namespace {

int denominator_need(const FixedMonomial& m, const Weight& v) {
    int need = 0;
    auto it = m.e_exp.find(v);
    if (it != m.e_exp.end() && it->second < 0) need += -it->second;
    for (const auto& [vd, mult] : m.y_exp)
        if (vd.first == v) need += vd.second * mult;
    return need;
}

struct GeneratorImages {
    const ContextPtr& ctx;
    int rank;
    int T;
    std::map<Weight, BorelSeries> euler_memo;
    std::map<std::pair<Weight, int>, BorelSeries> epow_memo;
    std::map<std::pair<Weight, int>, BorelSeries> ynum_memo;

    const BorelSeries& euler(const Weight& v) {
        auto it = euler_memo.find(v);
        if (it == euler_memo.end()) it = euler_memo.emplace(v, euler_class(ctx, v, T)).first;
        return it->second;
    }

    const BorelSeries& epow(const Weight& v, int k) {
        auto it = epow_memo.find({v, k});
        if (it == epow_memo.end()) {
            BorelSeries p = k == 1 ? euler(v) : (epow(v, k - 1) * euler(v)).truncated(T);
            it = epow_memo.emplace(std::pair{v, k}, std::move(p)).first;
        }
        return it->second;
    }

    // numerator of the image of Y_{V,d}; the denominator is e(V)^d
    const BorelSeries& ynum(const Weight& v, int d) {
        auto it = ynum_memo.find({v, d});
        if (it != ynum_memo.end()) return it->second;
        int N = ctx->truncation();
        // P(x) = F(x, e) - e as an x-polynomial mod x^d
        std::vector<BorelSeries> P(static_cast<std::size_t>(d), BorelSeries::zero(ctx, rank, T));
        for (int i = 1; i < d; ++i) {
            BorelSeries ci = BorelSeries::zero(ctx, rank, T);
            if (i == 1) ci = BorelSeries::constant(ctx, rank, T, MuElement::one());
            for (int j = 1; i + j <= N + 1; ++j) {
                MuElement aij = ctx->fgl_coefficient(i, j);
                if (aij.is_zero()) continue;
                ci = ci + epow(v, j).truncated(T).scaled(aij);
            }
            P[static_cast<std::size_t>(i)] = std::move(ci);
        }
        // u(x) = sum_{j=0}^{d-1} (-1)^j P(x)^j e^{d-1-j} mod x^d, so that
        // (x +_F e)^{-1} = u(x) / e^d
        std::vector<BorelSeries> pj(static_cast<std::size_t>(d), BorelSeries::zero(ctx, rank, T));
        pj[0] = BorelSeries::constant(ctx, rank, T, MuElement::one());
        std::vector<BorelSeries> u(static_cast<std::size_t>(d), BorelSeries::zero(ctx, rank, T));
        for (int j = 0; j < d; ++j) {
            BorelSeries escale =
                (d - 1 - j) == 0 ? BorelSeries::constant(ctx, rank, T, MuElement::one()) : epow(v, d - 1 - j).truncated(T);
            for (int k = j; k < d; ++k) {
                BorelSeries term = (pj[static_cast<std::size_t>(k)] * escale).truncated(T);
                u[static_cast<std::size_t>(k)] = u[static_cast<std::size_t>(k)] +
                                                 (j % 2 == 0 ? term : -term);
            }
            if (j + 1 < d) {
                // pj <- pj * P (x-truncated convolution)
                std::vector<BorelSeries> next(static_cast<std::size_t>(d), BorelSeries::zero(ctx, rank, T));
                for (int a = 0; a < d; ++a) {
                    if (pj[static_cast<std::size_t>(a)].is_zero()) continue;
                    for (int b = 1; a + b < d; ++b)
                        next[static_cast<std::size_t>(a + b)] =
                            next[static_cast<std::size_t>(a + b)] +
                            (pj[static_cast<std::size_t>(a)] * P[static_cast<std::size_t>(b)]).truncated(T);
                }
                pj = std::move(next);
            }
        }
        BorelSeries num = cp_pushforward(u, d - 1).truncated(T);
        return ynum_memo.emplace(std::pair{v, d}, std::move(num)).first->second;
    }
};

} // namespace

LocalizedBorel localize(const FixedDatum& x, int D, int rank_hint) {
    const auto& ctx = x.context();
    int rank = x.rank() ? x.rank() : rank_hint;
    if (rank < 1) throw PreconditionError("localize: rank must be >= 1");
    if (D < 0) throw PreconditionError("localize: negative target precision");

    // common denominator: per weight, the largest pole any monomial requires
    std::map<Weight, int> common;
    for (const auto& [m, c] : x.terms()) {
        auto touch = [&](const Weight& w) {
            int need = denominator_need(m, w);
            auto [it, inserted] = common.try_emplace(w, need);
            if (!inserted) it->second = std::max(it->second, need);
        };
        for (const auto& [w, e] : m.e_exp)
            if (e < 0) touch(w);
        for (const auto& [vd, mult] : m.y_exp) touch(vd.first);
    }

    int ptot = 0;
    for (const auto& [w, e] : common) ptot += e;
    int T = D + ptot;

    GeneratorImages gen{ctx, rank, T, {}, {}, {}};
    BorelSeries num = BorelSeries::zero(ctx, rank, T);
    for (const auto& [m, c] : x.terms()) {
        BorelSeries piece = BorelSeries::constant(ctx, rank, T, c);
        for (const auto& [w, e] : m.e_exp)
            if (e > 0) piece = (piece * gen.epow(w, e)).truncated(T);
        for (const auto& [vd, mult] : m.y_exp)
            for (int i = 0; i < mult; ++i) piece = (piece * gen.ynum(vd.first, vd.second)).truncated(T);
        for (const auto& [w, e] : common) {
            int deficit = e - denominator_need(m, w);
            if (deficit > 0) piece = (piece * gen.epow(w, deficit)).truncated(T);
        }
        num = num + piece;
    }

    EulerDenominator den;
    for (const auto& [w, e] : common)
        if (e > 0) den[w] = e;
    return LocalizedBorel(num.truncated(T), std::move(den));
}

std::string Verdict::str() const {
    std::ostringstream os;
    os << (realizable() ? "REALIZABLE (up to precision " + std::to_string(precision) + ")" : "NOT REALIZABLE");
    os << "\n  cone: " << (cone_ok ? "ok" : "violated (positive Euler-class exponent)");
    os << "\n  integrality: " << (integrality_ok ? "ok through C-degree " + std::to_string(precision) : "failed");
    if (witness) os << "\n  witness: " << witness->str();
    if (constant_term) os << "\n  constant term: " << constant_term->str();
    if (!homogeneous_input) os << "\n  note: input not homogeneous; judged per degree component";
    return os.str();
}

Verdict realizable(const FixedDatum& x, int D, int rank_hint) {
    Verdict v;
    v.cone_ok = x.in_cone();
    v.homogeneous_input = x.degree().has_value();
    v.integrality_ok = true;
    v.precision = D;
    MuElement constant;
    auto comps = x.components();
    if (comps.empty()) comps.emplace(0, x); // the zero datum
    for (const auto& [deg, comp] : comps) {
        IntegralizeResult res = try_integralize(localize(comp, D, rank_hint));
        v.precision = std::min(v.precision, res.precision);
        if (!res.ok()) {
            v.integrality_ok = false;
            v.witness = res.witness;
            v.constant_term.reset();
            return v;
        }
        constant += res.series->constant_term();
    }
    v.constant_term = constant;
    return v;
}

bool augmentation_check(const ContextPtr& ctx, const ManifoldExpr& m, int D) {
    FixedDatum image = phi_omega(ctx, m);
    int rank = std::max(m.rank(), 1);
    IntegralizeResult res = try_integralize(localize(image, D, rank));
    if (!res.ok()) return false;
    return res.series->constant_term() == underlying_class(ctx, m);
}

} // namespace bordism
