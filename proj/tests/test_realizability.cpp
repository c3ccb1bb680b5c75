#include "bordism/errors.hpp"
#include "bordism/realizability.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace bordism;
using namespace bordism::testing;

namespace {

FixedDatum e(const ContextPtr& ctx, std::vector<int> mu, int exp = 1) {
    return FixedDatum::monomial(ctx, FixedMonomial::e(w(std::move(mu)), exp));
}

FixedDatum y(const ContextPtr& ctx, std::vector<int> mu, int level) {
    return FixedDatum::monomial(ctx, FixedMonomial::y(w(std::move(mu)), level));
}

ManifoldExpr proj1(std::vector<int> mus) {
    std::vector<std::vector<int>> lines;
    for (int x : mus) lines.push_back({x});
    return ManifoldExpr::proj(std::move(lines));
}

} // namespace

TEST_CASE("localize: generator anchors") {
    auto ctx = RingContext::make(6);
    int D = 4;

    // e_V^{-1} -> 1/e(V)
    LocalizedBorel inv = localize(e(ctx, {1}, -1), D);
    CHECK(inv.den == EulerDenominator{{w({1}), 1}});
    CHECK(inv.num == BorelSeries::constant(ctx, 1, D + 1, MuElement::one()));
    CHECK(inv.effective_precision() == D);

    // e_V -> e(V)
    LocalizedBorel pos = localize(e(ctx, {2}, 1), D);
    CHECK(pos.den.empty());
    CHECK(pos.num == euler_class(ctx, w({2}), D));

    // the rotation sphere: constant term cp_class(1), no pole
    auto res = try_integralize(localize(e(ctx, {1}, -1) + e(ctx, {-1}, -1), D));
    REQUIRE(res.ok());
    CHECK(res.series->constant_term() == ctx->cp_class(1));

    // Y_{V,2} + e_{V*}^{-2} integralizes (P(C^2+V) anchor)
    auto res2 = try_integralize(localize(y(ctx, {1}, 2) + e(ctx, {-1}, -2), D));
    REQUIRE(res2.ok());
    CHECK(res2.series->constant_term() == ctx->cp_class(2));
}

TEST_CASE("localize: ring map on cone elements") {
    auto ctx = RingContext::make(6);
    int D = 3;
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 8; ++trial) {
        int rank = 1 + trial % 2;
        // random cone elements: nonpositive e-exponents only
        auto random_cone = [&]() {
            FixedDatum x(ctx);
            std::uniform_int_distribution<int> eexp(0, 2), level(2, 3), coef(-3, 3), nt(1, 2);
            for (int t = nt(rng); t > 0; --t) {
                FixedMonomial m;
                m = m * FixedMonomial::e(random_weight(rng, rank, 2), -eexp(rng));
                if (trial % 2 == 0) m = m * FixedMonomial::y(random_weight(rng, rank, 2), level(rng));
                int c = coef(rng);
                x.add_term(m, MuElement::from_rational(c == 0 ? 1 : c));
            }
            return x;
        };
        FixedDatum a = random_cone(), b = random_cone();
        LocalizedBorel lhs = localize(a * b, D, rank);
        LocalizedBorel rhs = localize(a, D, rank) * localize(b, D, rank);
        // both sides represent the image exactly through their truncations, so
        // the cross-multiplied difference must vanish identically
        LocalizedBorel diff = lhs + LocalizedBorel(-rhs.num, rhs.den);
        CHECK(diff.num.is_zero());
    }
}

TEST_CASE("localize: degree preserved termwise") {
    auto ctx = RingContext::make(6);
    FixedDatum x = y(ctx, {1}, 2) + e(ctx, {-1}, -2); // homogeneous of degree 4
    REQUIRE(x.degree() == 4);
    LocalizedBorel l = localize(x, 4);
    // num / e^P has degree 4, so num is homogeneous of degree 4 - 2P
    CHECK(l.num.homogeneous_degree() == 4 - 2 * pole_order(l.den));
}

TEST_CASE("realizable: certified negatives and catalog positives") {
    auto ctx = RingContext::make(6);

    Verdict bad_cone = realizable(e(ctx, {1}, 1), 4);
    CHECK_FALSE(bad_cone.realizable());
    CHECK_FALSE(bad_cone.cone_ok);
    CHECK(bad_cone.integrality_ok); // e(V) itself is an integral series

    Verdict pole = realizable(e(ctx, {1}, -1), 4);
    CHECK_FALSE(pole.realizable());
    CHECK(pole.cone_ok);
    CHECK_FALSE(pole.integrality_ok);
    REQUIRE(pole.witness);
    CHECK(pole.witness->kind == ObstructionKind::Pole);
    CHECK(pole.witness->degree == 0);

    // witnesses persist as D grows
    for (int D = 3; D <= 6; ++D) {
        Verdict v = realizable(e(ctx, {1}, -1), D);
        CHECK_FALSE(v.realizable());
        CHECK(v.witness->degree == 0);
        Verdict c = realizable(e(ctx, {1}, 1), D);
        CHECK_FALSE(c.realizable());
    }

    for (const auto& m : {proj1({0, 1}), proj1({0, 0, 2}), proj1({0, 1, 1, 3})}) {
        Verdict v = realizable(phi_omega(ctx, m), 4);
        CHECK(v.realizable());
        CHECK(v.constant_term == underlying_class(ctx, m));
    }
}

TEST_CASE("realizable: heterogeneous inputs are judged per component") {
    auto ctx = RingContext::make(6);
    FixedDatum mixed = e(ctx, {1}, -1) + e(ctx, {-1}, -1) + FixedDatum(ctx, MuElement::one());
    CHECK_FALSE(mixed.degree().has_value());
    Verdict v = realizable(mixed, 4);
    CHECK_FALSE(v.homogeneous_input);
    CHECK(v.realizable()); // sphere + point, both realizable
    CHECK(v.constant_term == ctx->cp_class(1) + MuElement::one());

    FixedDatum half_bad = FixedDatum(ctx, MuElement::one()) + e(ctx, {1}, -1);
    Verdict vb = realizable(half_bad, 4);
    CHECK_FALSE(vb.realizable());
    CHECK(vb.witness->kind == ObstructionKind::Pole);
}

TEST_CASE("zero datum is realizable") {
    auto ctx = RingContext::make(4);
    Verdict v = realizable(FixedDatum(ctx), 3);
    CHECK(v.realizable());
    CHECK(v.constant_term == MuElement::zero());
}

TEST_CASE("augmentation_check") {
    auto ctx = RingContext::make(6);
    CHECK(augmentation_check(ctx, proj1({0, 1}), 4));
    CHECK(augmentation_check(ctx, ManifoldExpr::point(), 4));
    CHECK(augmentation_check(ctx, proj1({0, 0, 1}), 4));
    CHECK(augmentation_check(ctx, ManifoldExpr::product(proj1({0, 1}), proj1({0, 2})), 4));
}

TEST_CASE("localize rejects invalid ranks") {
    auto ctx = RingContext::make(4);
    CHECK_THROWS_AS(localize(FixedDatum(ctx, MuElement::one()), 3, 0), PreconditionError);
}
