#include "bordism/errors.hpp"
#include "bordism/fixedring.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace bordism;
using namespace bordism::testing;

namespace {

FixedDatum e(const ContextPtr& ctx, std::vector<int> mu, int exp = 1) {
    return FixedDatum::monomial(ctx, FixedMonomial::e(w(std::move(mu)), exp));
}

FixedDatum y(const ContextPtr& ctx, std::vector<int> mu, int level, int exp = 1) {
    return FixedDatum::monomial(ctx, FixedMonomial::y(w(std::move(mu)), level, exp));
}

} // namespace

TEST_CASE("ring arithmetic on monomials") {
    auto ctx = RingContext::make(3);
    CHECK(e(ctx, {1}) * e(ctx, {1}, -1) == FixedDatum(ctx, MuElement::one()));
    CHECK(y(ctx, {1}, 2) * y(ctx, {1}, 2) == y(ctx, {1}, 2, 2));
    FixedDatum x = e(ctx, {1}) + y(ctx, {1}, 2);
    FixedDatum z = e(ctx, {-1}, -2);
    CHECK((x + z) * x == x * x + z * x);
    auto ctx2 = ctx;
    CHECK_THROWS_AS(e(ctx, {1}) + e(ctx2, {1, 0}), PreconditionError); // rank mismatch
    CHECK_THROWS_AS(y(ctx, {1}, 1), PreconditionError);                 // Y_{V,1} is e_V^{-1}, rejected
    CHECK_THROWS_AS(FixedMonomial::e(Weight{}, 1), PreconditionError);
}

TEST_CASE("in_cone") {
    auto ctx = RingContext::make(3);
    CHECK((e(ctx, {1}, -2) * y(ctx, {1}, 3)).in_cone());
    CHECK_FALSE(e(ctx, {1}).in_cone());
    CHECK((y(ctx, {1}, 2) + e(ctx, {-1}, -1)).in_cone());
    CHECK(FixedDatum(ctx, MuElement::one()).in_cone());
}

TEST_CASE("antipode: generator anchors") {
    auto ctx = RingContext::make(4);
    CHECK(antipode(e(ctx, {1})) == e(ctx, {1}));
    CHECK(antipode(e(ctx, {1}, -3)) == e(ctx, {1}, -3));
    CHECK(antipode(y(ctx, {1}, 2)) == -y(ctx, {1}, 2));
    // iota(Y_{V,3}) = -Y_{V,3} + e_V Y_{V,2}^2
    CHECK(antipode(y(ctx, {1}, 3)) == -y(ctx, {1}, 3) + e(ctx, {1}) * y(ctx, {1}, 2, 2));
}

TEST_CASE("antipode: involution, multiplicativity, degree") {
    auto ctx = RingContext::make(4);
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        int rank = 1 + trial % 2;
        FixedDatum x = random_fixed(ctx, rng, rank);
        FixedDatum y = random_fixed(ctx, rng, rank);
        CHECK(antipode(antipode(x)) == x);
        CHECK(antipode(x * y) == antipode(x) * antipode(y));
        CHECK(antipode(x + y) == antipode(x) + antipode(y));
        CHECK(antipode(x).degree() == x.degree());
    }
}

TEST_CASE("degree bookkeeping") {
    auto ctx = RingContext::make(3);
    CHECK(e(ctx, {1}, -1).degree() == 2);
    CHECK(y(ctx, {1}, 4).degree() == 8);   // Y_{V,d} has degree 2d
    CHECK(e(ctx, {1}).degree() == -2);     // e_V has degree -2
    CHECK(e(ctx, {1}).is_homogeneous(-2));
    FixedDatum mixed = e(ctx, {1}) + y(ctx, {1}, 2);
    CHECK_FALSE(mixed.degree().has_value());
    auto comps = mixed.components();
    CHECK(comps.size() == 2);
    CHECK(comps.at(-2) == e(ctx, {1}));
    CHECK(comps.at(4) == y(ctx, {1}, 2));
    // coefficient degrees count: [CP^1] * 1 has degree 2
    CHECK(FixedDatum(ctx, ctx->cp_class(1)).degree() == 2);
}

TEST_CASE("canonical normal form") {
    auto ctx = RingContext::make(3);
    FixedDatum a = (e(ctx, {1}) + y(ctx, {2}, 2)) * (e(ctx, {1}, -1) + y(ctx, {2}, 3));
    FixedDatum b = e(ctx, {1}) * e(ctx, {1}, -1) + e(ctx, {1}) * y(ctx, {2}, 3) + y(ctx, {2}, 2) * e(ctx, {1}, -1) +
                   y(ctx, {2}, 3) * y(ctx, {2}, 2);
    CHECK(a == b);
    CHECK(a.str() == b.str());
}
