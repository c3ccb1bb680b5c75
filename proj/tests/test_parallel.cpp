#include "bordism/fgl.hpp"
#include "bordism/parallel.hpp"
#include "bordism/realizability.hpp"

#include <doctest.h>

#include "helpers.hpp"

using namespace bordism;
using namespace bordism::testing;

TEST_CASE("parallel series product agrees with the serial reference") {
    auto ctx = RingContext::make(5);
    std::mt19937_64 rng(314);
    std::uniform_int_distribution<int> coef(-9, 9);
    for (int trial = 0; trial < 3; ++trial) {
        int rank = 2, T = 10;
        BorelSeries a = BorelSeries::zero(ctx, rank, T), b = BorelSeries::zero(ctx, rank, T);
        for (int t = 0; t < 120; ++t) {
            std::vector<int> e1(2), e2(2);
            e1[0] = static_cast<int>(rng() % 6);
            e1[1] = static_cast<int>(rng() % 6);
            e2[0] = static_cast<int>(rng() % 6);
            e2[1] = static_cast<int>(rng() % 6);
            a.add_term(cmono(e1), random_mu(rng, 4).scaled(coef(rng)));
            b.add_term(cmono(e2), random_mu(rng, 4).scaled(coef(rng)));
        }
        BorelSeries s = BorelSeries::mul_serial(a, b);
        BorelSeries p = BorelSeries::mul_parallel(a, b);
        CHECK(s == p);
        CHECK(s.truncation() == p.truncation());
    }
}

TEST_CASE("parallel catalog driver matches the serial reference") {
    auto ctx = RingContext::make(5);
    auto cat = catalog(1);
    cat.resize(30); // keep the unit suite quick; full runs live in acceptance

    auto run = [&](bool parallel) {
        std::vector<std::string> verdicts(cat.size());
        parallel_for(static_cast<long>(cat.size()), parallel, [&](long i) {
            FixedDatum image = phi_omega(ctx, cat[static_cast<std::size_t>(i)]);
            Verdict v = realizable(image, 4, 1);
            verdicts[static_cast<std::size_t>(i)] =
                (v.realizable() ? "ok:" : "no:") + (v.constant_term ? v.constant_term->str() : "-");
        });
        return verdicts;
    };
    CHECK(run(false) == run(true));
}

TEST_CASE("parallel_for propagates exceptions") {
    CHECK_THROWS_AS(parallel_for(8, true, [](long i) {
        if (i == 3) throw std::runtime_error("boom");
    }), std::runtime_error);
}
