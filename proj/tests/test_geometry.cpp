#include "bordism/errors.hpp"
#include "bordism/manifold.hpp"

#include <doctest.h>

#include <set>

#include "helpers.hpp"

using namespace bordism;
using namespace bordism::testing;

namespace {

ManifoldExpr proj1(std::vector<int> mus) {
    std::vector<std::vector<int>> lines;
    for (int x : mus) lines.push_back({x});
    return ManifoldExpr::proj(std::move(lines));
}

FixedDatum fm(const ContextPtr& ctx, const FixedMonomial& m) { return FixedDatum::monomial(ctx, m); }

} // namespace

TEST_CASE("phi_omega: paper anchor P(C^d + V) = Y_{V,d} + e_{V*}^{-d}") {
    auto ctx = RingContext::make(4);
    for (int d = 1; d <= 4; ++d) {
        for (int mu : {-3, -1, 1, 2, 3}) {
            std::vector<int> lines(static_cast<std::size_t>(d), 0);
            lines.push_back(mu);
            FixedDatum got = phi_omega(ctx, proj1(lines));
            FixedDatum expected =
                d == 1 ? fm(ctx, FixedMonomial::e(w({mu}), -1)) : fm(ctx, FixedMonomial::y(w({mu}), d));
            expected = expected + fm(ctx, FixedMonomial::e(w({-mu}), -d));
            CHECK(got == expected);
        }
    }
}

TEST_CASE("phi_omega: rotation sphere, point, trivial projective space") {
    auto ctx = RingContext::make(4);
    CHECK(phi_omega(ctx, proj1({0, 1})) ==
          fm(ctx, FixedMonomial::e(w({1}), -1)) + fm(ctx, FixedMonomial::e(w({-1}), -1)));
    CHECK(phi_omega(ctx, ManifoldExpr::point()) == FixedDatum(ctx, MuElement::one()));
    // all weights equal: trivial action, phi = [CP^n]
    CHECK(phi_omega(ctx, proj1({2, 2, 2})) == FixedDatum(ctx, ctx->cp_class(2)));
    CHECK(phi_omega(ctx, proj1({0, 0, 0, 0})) == FixedDatum(ctx, ctx->cp_class(3)));
}

TEST_CASE("phi_omega: multi-summand normal bundle carries the CP-corrections") {
    auto ctx = RingContext::make(4);
    // P(C^2 + V_1 + V_2), fixed line F_0 = CP^1 with normal (O(1) (x) V_1) + (O(1) (x) V_2)
    FixedDatum got = phi_omega(ctx, proj1({0, 0, 1, 2}));
    FixedDatum expected =
        fm(ctx, FixedMonomial::y(w({1}), 2) * FixedMonomial::e(w({2}), -1)) +
        fm(ctx, FixedMonomial::y(w({2}), 2) * FixedMonomial::e(w({1}), -1)) +
        FixedDatum::monomial(ctx, FixedMonomial::e(w({1}), -1) * FixedMonomial::e(w({2}), -1),
                             ctx->cp_class(1).scaled(-1)) +
        fm(ctx, FixedMonomial::e(w({-1}), -2) * FixedMonomial::e(w({1}), -1)) +
        fm(ctx, FixedMonomial::e(w({-2}), -2) * FixedMonomial::e(w({-1}), -1));
    CHECK(got == expected);
}

TEST_CASE("phi_omega: algebra map on products and unions") {
    auto ctx = RingContext::make(5);
    ManifoldExpr a = proj1({0, 1});
    ManifoldExpr b = proj1({0, 0, 2});
    CHECK(phi_omega(ctx, ManifoldExpr::product(a, b)) == phi_omega(ctx, a) * phi_omega(ctx, b));
    CHECK(phi_omega(ctx, ManifoldExpr::disjoint_union({a, b})) == phi_omega(ctx, a) + phi_omega(ctx, b));
}

TEST_CASE("phi_omega: degree equals dimension, image in the cone") {
    auto ctx = RingContext::make(5);
    for (const auto& m : catalog(1)) {
        FixedDatum img = phi_omega(ctx, m);
        CHECK(img.in_cone());
        auto dim = m.dimension();
        if (dim) CHECK(img.degree() == *dim);
    }
}

TEST_CASE("component bookkeeping is internally consistent") {
    auto ctx = RingContext::make(5);
    // for each fixed component of a Proj: dim F + 2 rank(normal) = dim M
    std::vector<std::vector<int>> weight_lists = {{0, 1}, {0, 0, 1}, {0, 1, 1, 2}, {0, 0, 1, 2, 3}};
    for (const auto& mus : weight_lists) {
        std::map<int, int> mult;
        for (int x : mus) ++mult[x];
        int dimM = 2 * (static_cast<int>(mus.size()) - 1);
        for (const auto& [lambda, m] : mult) {
            int dimF = 2 * (m - 1);
            int normal = 0;
            for (const auto& [l2, m2] : mult)
                if (l2 != lambda) normal += m2;
            CHECK(dimF + 2 * normal == dimM);
        }
    }
}

TEST_CASE("underlying_class") {
    auto ctx = RingContext::make(4);
    CHECK(underlying_class(ctx, proj1({0, 0, 1})) == ctx->cp_class(2));
    CHECK(underlying_class(ctx, ManifoldExpr::point()) == MuElement::one());
    ManifoldExpr sphere = proj1({0, 1});
    CHECK(underlying_class(ctx, ManifoldExpr::product(sphere, sphere)) ==
          MuElement::mul(ctx->cp_class(1), ctx->cp_class(1), 4));
    CHECK(underlying_class(ctx, ManifoldExpr::disjoint_union({sphere, sphere})) == ctx->cp_class(1).scaled(2));
}

TEST_CASE("catalog: determinism, counts, contents") {
    auto c1 = catalog(1);
    auto c2 = catalog(1);
    REQUIRE(c1.size() == c2.size());
    for (std::size_t i = 0; i < c1.size(); ++i) CHECK(c1[i] == c2[i]);
    CHECK(c1.size() >= 50);

    std::set<std::string> seen;
    for (const auto& m : c1) CHECK(seen.insert(m.str()).second); // duplicate-free

    bool has01 = false;
    for (const auto& m : c1)
        if (m == proj1({0, 1})) has01 = true;
    CHECK(has01);

    CHECK(catalog(2).size() >= 30);
}

TEST_CASE("malformed expressions are rejected") {
    CHECK_THROWS_AS(ManifoldExpr::proj({}), PreconditionError);
    CHECK_THROWS_AS(ManifoldExpr::proj({{0, 1}, {2}}), PreconditionError);
    CHECK_THROWS_AS(ManifoldExpr::disjoint_union({}), PreconditionError);
}
