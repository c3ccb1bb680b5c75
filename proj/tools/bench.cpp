// Timing comparison of the serial reference kernels against the OpenMP paths:
// sparse Borel-series products and the catalog verification driver.

#include "bordism/fgl.hpp"
#include "bordism/parallel.hpp"
#include "bordism/realizability.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace bordism;

namespace {

double seconds(std::chrono::steady_clock::time_point a, std::chrono::steady_clock::time_point b) {
    return std::chrono::duration<double>(b - a).count();
}

BorelSeries random_series(const ContextPtr& ctx, int rank, int trunc, std::mt19937_64& rng) {
    BorelSeries s = BorelSeries::zero(ctx, rank, trunc);
    std::uniform_int_distribution<int> deg(0, trunc), coef(-9, 9), gen(1, ctx->truncation());
    for (int t = 0; t < 400; ++t) {
        std::vector<int> exps(static_cast<std::size_t>(rank), 0);
        int d = deg(rng);
        for (int i = 0; i < d; ++i) ++exps[static_cast<std::size_t>(rng() % static_cast<unsigned>(rank))];
        MuElement c = MuElement::from_rational(coef(rng));
        c += MuElement::generator(gen(rng)).scaled(coef(rng));
        s.add_term(CMonomial{exps}, c);
    }
    return s;
}

void bench_mul(const ContextPtr& ctx) {
    std::mt19937_64 rng(12345);
    BorelSeries a = random_series(ctx, 3, 18, rng);
    BorelSeries b = random_series(ctx, 3, 18, rng);

    auto t0 = std::chrono::steady_clock::now();
    BorelSeries rs = BorelSeries::mul_serial(a, b);
    auto t1 = std::chrono::steady_clock::now();
    BorelSeries rp = BorelSeries::mul_parallel(a, b);
    auto t2 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("series product  (%4zu x %4zu terms)   serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
                a.terms().size(), b.terms().size(), ts * 1e3, tp * 1e3, ts / tp,
                rs == rp ? "results match" : "MISMATCH");
}

void bench_catalog(const ContextPtr& ctx, int r, int D) {
    auto cat = catalog(r);
    auto run = [&](bool parallel) {
        std::vector<int> ok(cat.size(), 0);
        parallel_for(static_cast<long>(cat.size()), parallel, [&](long i) {
            FixedDatum image = phi_omega(ctx, cat[static_cast<std::size_t>(i)]);
            Verdict v = realizable(image, D, r);
            ok[static_cast<std::size_t>(i)] = v.realizable() ? 1 : 0;
        });
        int total = 0;
        for (int x : ok) total += x;
        return total;
    };

    auto t0 = std::chrono::steady_clock::now();
    int s = run(false);
    auto t1 = std::chrono::steady_clock::now();
    int p = run(true);
    auto t2 = std::chrono::steady_clock::now();

    double ts = seconds(t0, t1), tp = seconds(t1, t2);
    std::printf("catalog verify  (r=%d, %3zu manifolds)  serial %8.3f ms   parallel %8.3f ms   speedup %5.2fx   %s\n",
                r, cat.size(), ts * 1e3, tp * 1e3, ts / tp, s == p ? "results match" : "MISMATCH");
}

} // namespace

int main() {
    std::printf("threads available: %d\n", max_threads());
    auto ctx = RingContext::make(6);
    bench_mul(ctx);
    bench_catalog(ctx, 1, 5);
    bench_catalog(ctx, 2, 4);
    return 0;
}
