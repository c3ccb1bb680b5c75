#pragma once

#include "bordism/hnf.hpp"
#include "bordism/mu.hpp"
#include "bordism/series1.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace bordism {

/// The coefficient ring MU_* truncated at half-degree N, with the universal
/// formal group law and the integral (Lazard) lattice per half-degree.
/// Immutable after construction; safe to share across threads.
class RingContext {
  public:
    static constexpr int kDefaultMaxN = 12;

    /// Caches FGL coefficients and lattices through half-degree N.
    /// Throws PreconditionError for N < 1, ResourceError for N > max_n.
    static std::shared_ptr<const RingContext> make(int N, int max_n = kDefaultMaxN);

    int truncation() const { return N_; }

    /// log(x) = x + sum m_i x^{i+1}, truncated at x^{N+1}
    const PowerSeries1& log_series() const { return log_; }
    /// compositional inverse of the logarithm, truncated at x^{N+1}
    const PowerSeries1& exp_series() const { return exp_; }
    /// cp(u) = sum cp_class(k) u^k = log'(u), truncated at u^N
    const PowerSeries1& cp_series() const { return cp_; }
    /// 1 / cp(u), truncated at u^N
    const PowerSeries1& gamma_series() const { return gamma_; }

    /// [CP^n] = (n+1) m_n for n >= 1, 1 for n = 0. Throws TruncationError for n > N.
    MuElement cp_class(int n) const;

    /// FGL coefficient a_{ij} (i, j >= 1, i + j <= N + 1); zero in the
    /// quotient ring when i + j > N + 1.
    MuElement fgl_coefficient(int i, int j) const;

    /// membership in the Z-lattice spanned by monomials in the a_{ij}
    bool is_integral(const MuElement& x) const;

    /// rank of the integral lattice in half-degree k (equals p(k))
    int lattice_rank(int k) const;

    /// render x as a Z (or 1/q * Z) combination of a_{ij}-monomials, when
    /// each homogeneous component lies in the rational span of the lattice
    std::string aij_string(const MuElement& x) const;

    /// a fresh integral element: Z-combination of lattice basis vectors in
    /// half-degree k with the given coordinates (used by tests and tooling)
    MuElement lattice_vector(int k, int index) const;

    /// all monomials of half-degree k in the m_i (the partition basis)
    const std::vector<MuMonomial>& basis_monomials(int k) const;

  private:
    explicit RingContext(int N);

    struct Lattice {
        std::vector<MuMonomial> monos;         // column basis, sorted
        std::map<MuMonomial, int> mono_index;
        Integer denom = 1;                     // scaling clearing all generator denominators
        HnfLattice hnf{0};
        std::vector<std::string> gen_labels;   // a_{ij}-monomial labels, insertion order
        std::vector<MuElement> basis_elems;    // HNF rows as ring elements (denom cleared back)
    };

    const Lattice& lattice(int k) const;

    int N_;
    PowerSeries1 log_, exp_, cp_, gamma_;
    std::map<std::pair<int, int>, MuElement> aij_;
    std::vector<Lattice> lattices_; // index = half-degree 0..N
};

using ContextPtr = std::shared_ptr<const RingContext>;

} // namespace bordism
