#include "bordism/manifold.hpp"

#include "bordism/errors.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

namespace bordism {

ManifoldExpr ManifoldExpr::proj(std::vector<std::vector<int>> lines) {
    if (lines.empty()) throw PreconditionError("Proj: needs at least one line");
    std::size_t r = lines.front().size();
    if (r == 0) throw PreconditionError("Proj: weights must have positive rank");
    for (const auto& l : lines)
        if (l.size() != r) throw PreconditionError("Proj: mixed weight ranks");
    ManifoldExpr m;
    m.kind = Kind::Proj;
    m.lines = std::move(lines);
    return m;
}

ManifoldExpr ManifoldExpr::product(ManifoldExpr a, ManifoldExpr b) {
    ManifoldExpr m;
    m.kind = Kind::Product;
    m.children.push_back(std::move(a));
    m.children.push_back(std::move(b));
    return m;
}

ManifoldExpr ManifoldExpr::disjoint_union(std::vector<ManifoldExpr> parts) {
    if (parts.empty()) throw PreconditionError("DisjointUnion: needs at least one part");
    ManifoldExpr m;
    m.kind = Kind::Union;
    m.children = std::move(parts);
    return m;
}

std::optional<int> ManifoldExpr::dimension() const {
    switch (kind) {
        case Kind::Point: return 0;
        case Kind::Proj: return 2 * (static_cast<int>(lines.size()) - 1);
        case Kind::Product: {
            auto a = children[0].dimension(), b = children[1].dimension();
            if (!a || !b) return std::nullopt;
            return *a + *b;
        }
        case Kind::Union: {
            std::optional<int> d;
            for (const auto& c : children) {
                auto dc = c.dimension();
                if (!dc) return std::nullopt;
                if (!d) d = dc;
                else if (*d != *dc) return std::nullopt;
            }
            return d;
        }
    }
    return std::nullopt;
}

int ManifoldExpr::rank() const {
    switch (kind) {
        case Kind::Point: return 0;
        case Kind::Proj: return static_cast<int>(lines.front().size());
        default: {
            int r = 0;
            for (const auto& c : children) r = std::max(r, c.rank());
            return r;
        }
    }
}

bool ManifoldExpr::operator==(const ManifoldExpr& o) const {
    return kind == o.kind && lines == o.lines && children == o.children;
}

std::string ManifoldExpr::str() const {
    std::ostringstream os;
    switch (kind) {
        case Kind::Point: os << "point"; break;
        case Kind::Proj: {
            os << "(proj (";
            for (std::size_t i = 0; i < lines.size(); ++i) {
                if (i) os << " ";
                os << "(";
                for (std::size_t j = 0; j < lines[i].size(); ++j) {
                    if (j) os << " ";
                    os << lines[i][j];
                }
                os << ")";
            }
            os << "))";
            break;
        }
        case Kind::Product:
            os << "(prod " << children[0].str() << " " << children[1].str() << ")";
            break;
        case Kind::Union: {
            os << "(union";
            for (const auto& c : children) os << " " << c.str();
            os << ")";
            break;
        }
    }
    return os.str();
}

namespace {

// truncated polynomial in an auxiliary variable u over FixedDatum
using UPoly = std::vector<FixedDatum>;

UPoly upoly_one(const ContextPtr& ctx, int T) {
    UPoly p(static_cast<std::size_t>(T) + 1, FixedDatum(ctx));
    p[0] = FixedDatum(ctx, MuElement::one());
    return p;
}

UPoly upoly_mul(const UPoly& a, const UPoly& b, const ContextPtr& ctx) {
    UPoly r(a.size(), FixedDatum(ctx));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; i + j < r.size(); ++j) {
            if (b[j].is_zero()) continue;
            r[i + j] = r[i + j] + a[i] * b[j];
        }
    }
    return r;
}

// the fixed component of Proj at the distinct weight lambda
FixedDatum proj_component(const ContextPtr& ctx, const std::map<std::vector<int>, int>& mult,
                          const std::vector<int>& lambda) {
    int m_lambda = mult.at(lambda);
    int nF = m_lambda - 1; // F = CP^{nF}
    if (nF > ctx->truncation())
        throw TruncationError("phi_omega: fixed component CP^" + std::to_string(nF) +
                              " exceeds coefficient truncation N = " + std::to_string(ctx->truncation()));

    // b_F = (prod_V e_V^{-m}) * [u^{nF}] gamma(u)^{S-1} * prod_V X_V(u)^{m},
    // X_V(u) = 1 + sum_i Y_{V,i+1} e_V u^i; S = 0 degenerates to cp(u).
    UPoly acc = upoly_one(ctx, nF);
    FixedMonomial budget;
    int S = 0;
    for (const auto& [lam2, m2] : mult) {
        if (lam2 == lambda) continue;
        std::vector<int> diff(lam2.size());
        for (std::size_t i = 0; i < diff.size(); ++i) diff[i] = lam2[i] - lambda[i];
        Weight v{std::vector<int>(diff)};
        budget = budget * FixedMonomial::e(v, -m2);
        S += m2;
        UPoly xv = upoly_one(ctx, nF);
        for (int i = 1; i <= nF; ++i)
            xv[static_cast<std::size_t>(i)] =
                FixedDatum::monomial(ctx, FixedMonomial::y(v, i + 1) * FixedMonomial::e(v));
        for (int t = 0; t < m2; ++t) acc = upoly_mul(acc, xv, ctx);
    }

    // gamma(u)^{S-1}, with gamma^{-1} = cp(u)
    const PowerSeries1& gamma = ctx->gamma_series();
    const PowerSeries1& cp = ctx->cp_series();
    auto scalar_upoly = [&](const PowerSeries1& s) {
        UPoly p(static_cast<std::size_t>(nF) + 1, FixedDatum(ctx));
        for (int k = 0; k <= nF; ++k) p[static_cast<std::size_t>(k)] = FixedDatum(ctx, s.coeff(k));
        return p;
    };
    if (S == 0) {
        acc = upoly_mul(acc, scalar_upoly(cp), ctx);
    } else {
        UPoly g = scalar_upoly(gamma);
        for (int t = 0; t < S - 1; ++t) acc = upoly_mul(acc, g, ctx);
    }

    return acc[static_cast<std::size_t>(nF)] * FixedDatum::monomial(ctx, budget);
}

} // namespace

FixedDatum phi_omega(const ContextPtr& ctx, const ManifoldExpr& m) {
    switch (m.kind) {
        case ManifoldExpr::Kind::Point:
            return FixedDatum(ctx, MuElement::one());
        case ManifoldExpr::Kind::Product:
            return phi_omega(ctx, m.children[0]) * phi_omega(ctx, m.children[1]);
        case ManifoldExpr::Kind::Union: {
            FixedDatum acc(ctx);
            for (const auto& c : m.children) acc = acc + phi_omega(ctx, c);
            return acc;
        }
        case ManifoldExpr::Kind::Proj: {
            std::map<std::vector<int>, int> mult;
            for (const auto& l : m.lines) ++mult[l];
            FixedDatum acc(ctx);
            for (const auto& [lambda, count] : mult) acc = acc + proj_component(ctx, mult, lambda);
            return acc;
        }
    }
    throw PreconditionError("phi_omega: malformed expression");
}

MuElement underlying_class(const ContextPtr& ctx, const ManifoldExpr& m) {
    switch (m.kind) {
        case ManifoldExpr::Kind::Point:
            return MuElement::one();
        case ManifoldExpr::Kind::Proj:
            return ctx->cp_class(static_cast<int>(m.lines.size()) - 1);
        case ManifoldExpr::Kind::Product:
            return MuElement::mul(underlying_class(ctx, m.children[0]), underlying_class(ctx, m.children[1]),
                                  ctx->truncation());
        case ManifoldExpr::Kind::Union: {
            MuElement acc;
            for (const auto& c : m.children) acc += underlying_class(ctx, c);
            return acc;
        }
    }
    throw PreconditionError("underlying_class: malformed expression");
}

CatalogBounds CatalogBounds::defaults(int r) {
    if (r <= 1) return {5, 3, 10};
    return {4, 1, 15};
}

namespace {

// all weight vectors with coordinates in [-b, b], lexicographically >= 0,
// excluding the zero vector itself from the ">" requirement (zero included)
std::vector<std::vector<int>> canonical_window(int r, int b) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(r), 0);
    std::function<void(int)> rec = [&](int pos) {
        if (pos == r) {
            out.push_back(cur);
            return;
        }
        for (int v = -b; v <= b; ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1);
        }
    };
    rec(0);
    std::vector<int> zero(static_cast<std::size_t>(r), 0);
    std::erase_if(out, [&](const std::vector<int>& w) { return w < zero; });
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::vector<ManifoldExpr> catalog(int r, const CatalogBounds& bounds) {
    if (r < 1) throw PreconditionError("catalog: rank must be >= 1");
    std::vector<std::vector<int>> window = canonical_window(r, bounds.max_entry);
    std::vector<ManifoldExpr> out;

    // canonical Proj forms: first line 0, remaining lines a non-decreasing
    // sequence over the window
    std::vector<std::vector<int>> lines;
    lines.push_back(std::vector<int>(static_cast<std::size_t>(r), 0));
    std::function<void(std::size_t)> rec = [&](std::size_t wstart) {
        out.push_back(ManifoldExpr::proj(lines));
        if (static_cast<int>(lines.size()) == bounds.max_lines) return;
        for (std::size_t i = wstart; i < window.size(); ++i) {
            lines.push_back(window[i]);
            rec(i);
            lines.pop_back();
        }
    };
    rec(0);

    // pairwise products and same-dimension unions of the two-line entries
    std::vector<ManifoldExpr> small;
    for (const auto& m : out)
        if (m.kind == ManifoldExpr::Kind::Proj && m.lines.size() == 2) small.push_back(m);
    int pairs = 0;
    for (std::size_t i = 0; i < small.size() && pairs < bounds.max_pairs; ++i)
        for (std::size_t j = i; j < small.size() && pairs < bounds.max_pairs; ++j, ++pairs)
            out.push_back(ManifoldExpr::product(small[i], small[j]));
    pairs = 0;
    for (std::size_t i = 0; i < small.size() && pairs < bounds.max_pairs; ++i)
        for (std::size_t j = i + 1; j < small.size() && pairs < bounds.max_pairs; ++j, ++pairs)
            out.push_back(ManifoldExpr::disjoint_union({small[i], small[j]}));
    return out;
}

std::vector<ManifoldExpr> catalog(int r) { return catalog(r, CatalogBounds::defaults(r)); }

} // namespace bordism
