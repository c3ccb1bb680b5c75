#include "bordism/context.hpp"

#include "bordism/errors.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

namespace bordism {

namespace {

// Dense lower-triangle bivariate series sum_{i+j<=T} c[i][j] x^i y^j, just
// enough to expand F(x,y) = exp(log x + log y) at construction time.
struct Bivar {
    int T;
    std::vector<std::vector<MuElement>> c;

    explicit Bivar(int T_) : T(T_), c(static_cast<std::size_t>(T_) + 1) {
        for (int i = 0; i <= T; ++i) c[static_cast<std::size_t>(i)].resize(static_cast<std::size_t>(T - i) + 1);
    }

    MuElement& at(int i, int j) { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
    const MuElement& at(int i, int j) const { return c[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

    Bivar operator+(const Bivar& o) const {
        Bivar r(T);
        for (int i = 0; i <= T; ++i)
            for (int j = 0; i + j <= T; ++j) r.at(i, j) = at(i, j) + o.at(i, j);
        return r;
    }

    static Bivar mul(const Bivar& a, const Bivar& b, int cap) {
        Bivar r(a.T);
        for (int i = 0; i <= a.T; ++i)
            for (int j = 0; i + j <= a.T; ++j) {
                if (a.at(i, j).is_zero()) continue;
                for (int k = 0; i + j + k <= a.T; ++k)
                    for (int l = 0; i + j + k + l <= a.T; ++l) {
                        if (b.at(k, l).is_zero()) continue;
                        r.at(i + k, j + l) += MuElement::mul(a.at(i, j), b.at(k, l), cap);
                    }
            }
        return r;
    }
};

// s(P) for a univariate series s and bivariate P with P(0,0) = 0
Bivar compose_bivar(const PowerSeries1& s, const Bivar& P, int cap) {
    int K = std::min(s.truncation(), P.T);
    Bivar r(P.T);
    r.at(0, 0) = s.coeff(K);
    for (int k = K - 1; k >= 0; --k) {
        r = Bivar::mul(r, P, cap);
        r.at(0, 0) += s.coeff(k);
    }
    return r;
}

void enumerate_partitions_rec(int remaining, int max_part, std::vector<unsigned>& exps,
                              std::vector<MuMonomial>& out) {
    if (remaining == 0) {
        out.emplace_back(exps);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        ++exps[static_cast<std::size_t>(part - 1)];
        enumerate_partitions_rec(remaining - part, part, exps, out);
        --exps[static_cast<std::size_t>(part - 1)];
    }
}

std::vector<MuMonomial> partition_monomials(int k) {
    std::vector<MuMonomial> out;
    if (k == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<unsigned> exps(static_cast<std::size_t>(k), 0);
    enumerate_partitions_rec(k, k, exps, out);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace

std::shared_ptr<const RingContext> RingContext::make(int N, int max_n) {
    if (N < 1) throw PreconditionError("RingContext: N must be >= 1");
    if (N > max_n)
        throw ResourceError("RingContext: N = " + std::to_string(N) + " exceeds the configured maximum " +
                            std::to_string(max_n));
    return std::shared_ptr<const RingContext>(new RingContext(N));
}

RingContext::RingContext(int N) : N_(N), log_(N + 1), exp_(N + 1), cp_(N), gamma_(N) {
    // log = x + m_1 x^2 + ... + m_N x^{N+1}
    log_.coeff(1) = MuElement::one();
    for (int i = 1; i <= N; ++i) log_.coeff(i + 1) = MuElement::generator(i);
    exp_ = PowerSeries1::reversion(log_, N);

    // cp(u) = log'(u): cp_k = (k+1) m_k
    cp_.coeff(0) = MuElement::one();
    for (int k = 1; k <= N; ++k) cp_.coeff(k) = MuElement::generator(k).scaled(k + 1);
    gamma_ = PowerSeries1::reciprocal(cp_, N);

    // F(x,y) = exp(log x + log y) truncated at total degree N+1
    {
        int T = N + 1;
        Bivar lx(T), ly(T);
        for (int k = 1; k <= T; ++k) {
            lx.at(k, 0) = log_.coeff(k);
            ly.at(0, k) = log_.coeff(k);
        }
        Bivar F = compose_bivar(exp_, lx + ly, N);
        for (int i = 1; i <= T; ++i)
            for (int j = 1; i + j <= T; ++j)
                if (!F.at(i, j).is_zero()) aij_[{i, j}] = F.at(i, j);
        // unitality: F(x, 0) = x
        for (int i = 0; i <= T; ++i) {
            bool expect_unit = (i == 1);
            if ((F.at(i, 0) == MuElement::one()) != expect_unit || (!expect_unit && !F.at(i, 0).is_zero()))
                throw std::logic_error("FGL expansion failed unitality");
        }
    }

    // integral lattices per half-degree
    lattices_.resize(static_cast<std::size_t>(N) + 1);
    for (int k = 0; k <= N; ++k) {
        Lattice& L = lattices_[static_cast<std::size_t>(k)];
        L.monos = partition_monomials(k);
        for (std::size_t i = 0; i < L.monos.size(); ++i) L.mono_index[L.monos[i]] = static_cast<int>(i);
        L.hnf = HnfLattice(static_cast<int>(L.monos.size()));

        // generator list: a_{ij}, i <= j, ordered by half-degree then i
        struct Gen { int i, j, h; MuElement val; };
        std::vector<Gen> gens;
        for (int h = 1; h <= k; ++h)
            for (int i = 1; 2 * i <= h + 1; ++i) gens.push_back({i, h + 1 - i, h, fgl_coefficient(i, h + 1 - i)});

        // all multisets of generators with total half-degree k, as ring elements
        std::vector<std::pair<MuElement, std::string>> products;
        if (k == 0) {
            products.emplace_back(MuElement::one(), "1");
        } else {
            std::vector<int> counts(gens.size(), 0);
            std::function<void(std::size_t, int, MuElement)> rec = [&](std::size_t g, int rem, MuElement acc) {
                if (rem == 0) {
                    std::ostringstream label;
                    bool first = true;
                    for (std::size_t t = 0; t < gens.size(); ++t) {
                        if (!counts[t]) continue;
                        if (!first) label << "*";
                        first = false;
                        label << "a" << gens[t].i << gens[t].j;
                        if (counts[t] > 1) label << "^" << counts[t];
                    }
                    products.emplace_back(std::move(acc), label.str());
                    return;
                }
                if (g == gens.size()) return;
                rec(g + 1, rem, acc);
                MuElement cur = acc;
                for (int c = 1; c * gens[g].h <= rem; ++c) {
                    cur = MuElement::mul(cur, gens[g].val, N_);
                    ++counts[g];
                    rec(g + 1, rem - c * gens[g].h, cur);
                }
                counts[g] = 0;
            };
            rec(0, k, MuElement::one());
        }

        // common denominator over all generator coordinates
        Integer denom = 1;
        for (const auto& [elem, label] : products)
            for (const auto& [m, q] : elem.terms()) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), q.get_den().get_mpz_t());
        L.denom = denom;

        for (const auto& [elem, label] : products) {
            std::vector<Integer> row(L.monos.size(), 0);
            for (const auto& [m, q] : elem.terms()) {
                Rational scaled = q * Rational(denom);
                row[static_cast<std::size_t>(L.mono_index.at(m))] = scaled.get_num();
            }
            L.hnf.insert(std::move(row));
            L.gen_labels.push_back(label);
        }
        L.hnf.reduce();

        if (L.hnf.rank() != static_cast<int>(L.monos.size()))
            throw std::logic_error("lattice rank " + std::to_string(L.hnf.rank()) + " != p(" + std::to_string(k) +
                                   ") = " + std::to_string(L.monos.size()));

        for (const auto& row : L.hnf.rows()) {
            MuElement e;
            for (std::size_t c = 0; c < L.monos.size(); ++c)
                if (row[c] != 0) e.add_term(L.monos[c], Rational(row[c]) / Rational(denom));
            L.basis_elems.push_back(std::move(e));
        }
    }
}

MuElement RingContext::cp_class(int n) const {
    if (n < 0) throw PreconditionError("cp_class: n must be >= 0");
    if (n == 0) return MuElement::one();
    if (n > N_) throw TruncationError("cp_class(" + std::to_string(n) + ") exceeds truncation N = " + std::to_string(N_));
    return MuElement::generator(n).scaled(n + 1);
}

MuElement RingContext::fgl_coefficient(int i, int j) const {
    if (i < 1 || j < 1) throw PreconditionError("fgl_coefficient: indices must be >= 1");
    auto it = aij_.find({i, j});
    return it == aij_.end() ? MuElement::zero() : it->second;
}

const RingContext::Lattice& RingContext::lattice(int k) const {
    if (k < 0 || k > N_)
        throw TruncationError("lattice request in half-degree " + std::to_string(k) + " exceeds N = " + std::to_string(N_));
    return lattices_[static_cast<std::size_t>(k)];
}

bool RingContext::is_integral(const MuElement& x) const {
    for (const auto& [k, comp] : x.components()) {
        const Lattice& L = lattice(k);
        std::vector<Integer> v(L.monos.size(), 0);
        for (const auto& [m, q] : comp.terms()) {
            Rational scaled = q * Rational(L.denom);
            if (scaled.get_den() != 1) return false;
            v[static_cast<std::size_t>(L.mono_index.at(m))] = scaled.get_num();
        }
        if (!L.hnf.contains(v)) return false;
    }
    return true;
}

int RingContext::lattice_rank(int k) const { return lattice(k).hnf.rank(); }

const std::vector<MuMonomial>& RingContext::basis_monomials(int k) const { return lattice(k).monos; }

MuElement RingContext::lattice_vector(int k, int index) const {
    const Lattice& L = lattice(k);
    return L.basis_elems.at(static_cast<std::size_t>(index));
}

std::string RingContext::aij_string(const MuElement& x) const {
    if (x.is_zero()) return "0";
    std::ostringstream os;
    bool first_comp = true;
    for (const auto& [k, comp] : x.components()) {
        const Lattice& L = lattice(k);
        std::vector<Rational> v(L.monos.size(), 0);
        for (const auto& [m, q] : comp.terms())
            v[static_cast<std::size_t>(L.mono_index.at(m))] = q * Rational(L.denom);
        auto coords = L.hnf.rational_coordinates(v);
        if (!coords) return x.str() + "  [outside the a_ij span]";
        if (!first_comp) os << " + ";
        first_comp = false;
        bool first = true;
        bool any = false;
        for (std::size_t g = 0; g < coords->size(); ++g) {
            Rational a = (*coords)[g];
            if (a == 0) continue;
            any = true;
            if (first) {
                if (a < 0) { os << "-"; a = -a; }
            } else {
                os << (a < 0 ? " - " : " + ");
                if (a < 0) a = -a;
            }
            first = false;
            if (a != 1 || L.gen_labels[g] == "1") os << a.get_str() << (L.gen_labels[g] == "1" ? "" : "*");
            if (L.gen_labels[g] != "1") os << L.gen_labels[g];
        }
        if (!any) os << "0";
    }
    return os.str();
}

} // namespace bordism
